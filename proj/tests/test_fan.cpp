#include "crn/fan.hpp"

#include <algorithm>
#include <set>

#include "crn/lp.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace crn;
using namespace crn::testing;

namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Closed system of a face: sigma_h (n_h . x) >= 0, with equality where
// sigma_h = 0. Homogeneous, so 0 is always feasible.
std::vector<LpRow> closure_rows(const SignVec& sigma, const RatMat& normals) {
  std::vector<LpRow> rows;
  for (size_t h = 0; h < normals.size(); ++h) {
    RatVec a = normals[h];
    if (sigma[h] == 0) {
      rows.push_back({std::move(a), Rel::Eq, 0});
    } else {
      if (sigma[h] < 0)
        for (auto& c : a) c = -c;
      rows.push_back({std::move(a), Rel::Ge, 0});
    }
  }
  return rows;
}

// sup of c.x over a homogeneous system is either 0 or +infinity.
bool sup_is_zero(int dim, const RatVec& c, const std::vector<LpRow>& rows) {
  LpProblem p;
  p.n = dim;
  p.c = c;
  p.rows = rows;
  LpResult r = solve_lp(p);
  REQUIRE(r.status != LpStatus::Infeasible);
  if (r.status == LpStatus::Optimal) CHECK(r.value == 0);
  return r.status == LpStatus::Optimal;
}

}  // namespace

TEST_CASE("normals are deduplicated into primitive canonical representatives") {
  Fan fan = fan_from_normals(2, {{2, 0}, {-3, 0}, {1, 0}, {0, 5}});
  REQUIRE(fan.normals.size() == 2);
  CHECK(fan.normals[0] == RatVec{0, 1});  // sorted canonical order
  CHECK(fan.normals[1] == RatVec{1, 0});
  CHECK(fan.chambers.size() == 4);
  CHECK(fan.span.dim() == 2);
  CHECK(fan.lineality.dim() == 0);
}

TEST_CASE("planar arrangements of k lines have 2k chambers and 2k rays") {
  RatMat directions{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
  for (size_t k = 1; k <= directions.size(); ++k) {
    RatMat normals(directions.begin(), directions.begin() + k);
    Fan fan = fan_from_normals(2, normals);
    CHECK(fan.chambers.size() == 2 * k);
    CHECK(fan_rays(fan).size() == 2 * k);
  }
}

TEST_CASE("chamber sign vectors are exact and lex-ordered") {
  Fan fan = fan_from_normals(2, {{1, 0}, {0, 1}});
  REQUIRE(fan.chambers.size() == 4);
  CHECK(fan.chambers[0] == SignVec{1, 1});
  CHECK(fan.chambers[1] == SignVec{1, -1});
  CHECK(fan.chambers[2] == SignVec{-1, 1});
  CHECK(fan.chambers[3] == SignVec{-1, -1});
}

TEST_CASE("coordinate arrangements in R^3") {
  Fan fan = fan_from_normals(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(fan.chambers.size() == 8);
  std::vector<RatVec> rays = fan_rays(fan);
  REQUIRE(rays.size() == 6);
  std::set<RatVec> ray_set(rays.begin(), rays.end());
  for (int i = 0; i < 3; ++i) {
    RatVec e(3, Rat(0)), me(3, Rat(0));
    e[i] = 1;
    me[i] = -1;
    CHECK(ray_set.count(e) == 1);
    CHECK(ray_set.count(me) == 1);
  }

  // Two normals in R^3: one-dimensional lineality, quotient fan has 4 rays.
  Fan partial = fan_from_normals(3, {{1, 0, 0}, {0, 1, 0}});
  CHECK(partial.chambers.size() == 4);
  CHECK(partial.lineality.dim() == 1);
  CHECK(fan_rays(partial).size() == 4);
}

TEST_CASE("rank-one arrangements collapse to a two-chamber fan") {
  Fan fan = fan_from_normals(3, {{2, 2, 0}, {-1, -1, 0}});
  REQUIRE(fan.normals.size() == 1);
  CHECK(fan.chambers.size() == 2);
  CHECK(fan.span.dim() == 1);
  CHECK(fan.lineality.dim() == 2);
  std::vector<RatVec> rays = fan_rays(fan);
  REQUIRE(rays.size() == 2);
  CHECK((rays[0] == RatVec{1, 1, 0} || rays[0] == RatVec{-1, -1, 0}));
}

TEST_CASE("no normals means one chamber covering everything") {
  Fan fan = fan_from_normals(2, {});
  REQUIRE(fan.chambers.size() == 1);
  CHECK(fan.chambers[0].empty());
  CHECK(fan.span.dim() == 0);
  CHECK(fan.lineality.dim() == 2);
  CHECK_THROWS_AS(fan_rays(fan), DegenerateSources);
}

TEST_CASE("build_fan uses pairwise source differences") {
  // Sources 0 and 2 on the line: a single wall at the origin.
  Fan fan = build_fan(1, {{0}, {2}});
  REQUIRE(fan.normals.size() == 1);
  CHECK(fan.normals[0] == RatVec{1});
  CHECK(fan.chambers.size() == 2);
  std::vector<RatVec> rays = fan_rays(fan);
  std::set<RatVec> rs(rays.begin(), rays.end());
  CHECK(rs == std::set<RatVec>{{RatVec{1}}, {RatVec{-1}}});

  // A single source generates no walls.
  Fan single = build_fan(2, {{1, 1}});
  CHECK(single.normals.empty());
  CHECK(single.chambers.size() == 1);

  // Three collinear sources: duplicated differences collapse to one wall.
  Fan line = build_fan(2, {{0, 0}, {1, 0}, {2, 0}});
  REQUIRE(line.normals.size() == 1);
  CHECK(line.normals[0] == RatVec{1, 0});
  CHECK(line.chambers.size() == 2);
}

TEST_CASE("every face representative realizes its sign pattern exactly") {
  Rng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = 2 + static_cast<int>(rng.below(2));
    Fan fan = random_fan(rng, dim, 2 + static_cast<int>(rng.below(3)));
    std::vector<FanFace> faces = enumerate_faces(fan.dim, fan.normals);
    std::set<SignVec> seen;
    int full_support = 0;
    for (const auto& face : faces) {
      CHECK(seen.insert(face.sign).second);  // no duplicates
      bool strict = true;
      for (size_t h = 0; h < fan.normals.size(); ++h) {
        CHECK(sign_of(dot(fan.normals[h], face.rep)) == face.sign[h]);
        if (face.sign[h] == 0) strict = false;
      }
      if (strict) ++full_support;
    }
    // Full-support faces are exactly the chambers.
    CHECK(full_support == static_cast<int>(fan.chambers.size()));
  }
}

TEST_CASE("three concurrent lines give thirteen faces") {
  std::vector<FanFace> faces = enumerate_faces(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(faces.size() == 13);  // 6 chambers + 6 half-lines + origin
  int origin_faces = 0;
  for (const auto& f : faces)
    if (f.sign == SignVec{0, 0, 0}) {
      ++origin_faces;
      CHECK(is_zero(f.rep));
    }
  CHECK(origin_faces == 1);
}

TEST_CASE("pairwise intersections of faces are faces") {
  // For each pair of faces, the intersection of their closed cones must be
  // the closed cone of another face; its sign vector is recovered per wall
  // by testing whether the wall functional vanishes on the intersection.
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int dim = 2 + static_cast<int>(rng.below(2));
    int k = 2 + static_cast<int>(rng.below(dim == 2 ? 4UL : 2UL));  // |H| <= 5
    Fan fan = random_fan(rng, dim, k);
    std::vector<FanFace> faces = enumerate_faces(fan.dim, fan.normals);
    std::set<SignVec> face_set;
    for (const auto& f : faces) face_set.insert(f.sign);

    size_t H = fan.normals.size();
    for (size_t i = 0; i < faces.size(); ++i) {
      for (size_t j = i; j < faces.size(); ++j) {
        std::vector<LpRow> inter = closure_rows(faces[i].sign, fan.normals);
        std::vector<LpRow> jr = closure_rows(faces[j].sign, fan.normals);
        inter.insert(inter.end(), jr.begin(), jr.end());

        SignVec nu(H, 0);
        for (size_t h = 0; h < H; ++h) {
          int a = faces[i].sign[h], b = faces[j].sign[h];
          if (a == 0 || b == 0 || a != b) continue;  // wall vanishes on the intersection
          RatVec c = fan.normals[h];
          if (a < 0)
            for (auto& x : c) x = -x;
          nu[h] = sup_is_zero(fan.dim, c, inter) ? 0 : a;
        }
        CHECK(face_set.count(nu) == 1);
      }
    }
  }
}

TEST_CASE("cones_within matches per-chamber distances computed directly") {
  Rng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    int dim = 2 + static_cast<int>(rng.below(2));
    Fan fan = random_fan(rng, dim, 2 + static_cast<int>(rng.below(3)));
    std::vector<double> X(dim);
    for (auto& c : X) c = rng.uniform(-5, 5);
    double delta = rng.uniform(0.2, 3.0);

    ConesWithinResult res = cones_within(fan, X, delta);

    std::vector<int> expect;
    for (size_t i = 0; i < fan.chambers.size(); ++i)
      if (distance_to_region(X, fan.chambers[i], fan.normals_d) <= delta)
        expect.push_back(static_cast<int>(i));
    CHECK(res.qualifying == expect);

    REQUIRE(!res.qualifying.empty());
    for (size_t h = 0; h < fan.normals.size(); ++h) {
      int first = fan.chambers[res.qualifying[0]][h];
      bool all_same = true;
      for (int idx : res.qualifying)
        if (fan.chambers[idx][h] != first) all_same = false;
      CHECK(res.meet[h] == (all_same ? first : 0));
    }
  }
}

TEST_CASE("cones_within at the origin meets every chamber") {
  Fan fan = fan_from_normals(2, {{1, 0}, {0, 1}, {1, 1}});
  ConesWithinResult res = cones_within(fan, {0.0, 0.0}, 0.5);
  CHECK(res.qualifying.size() == fan.chambers.size());
  CHECK(res.meet == SignVec{0, 0, 0});
}
