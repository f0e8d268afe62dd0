#include "crn/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace crn {

namespace {

RatMat canonical_normals(const RatMat& raw) {
  std::set<RatVec> seen;
  for (const auto& v : raw) {
    if (is_zero(v)) continue;
    seen.insert(primitive(v, true));
  }
  return {seen.begin(), seen.end()};
}

Rat sign_of(const RatVec& n, const RatVec& x) { return dot(n, x); }

// All-strict sign vectors. The parent's representative is reused whenever it
// already lies strictly on the branch side, so most nodes need no LP.
void chamber_dfs(int dim, const RatMat& normals, size_t h, SignVec& sigma, RatMat& stricts,
                 const RatVec& rep, std::vector<SignVec>& out) {
  if (h == normals.size()) {
    out.push_back(sigma);
    return;
  }
  Rat v = sign_of(normals[h], rep);
  for (int s : {+1, -1}) {
    RatVec srow(normals[h].size());
    for (size_t i = 0; i < srow.size(); ++i) srow[i] = Rat(s) * normals[h][i];
    sigma.push_back(s);
    stricts.push_back(srow);
    if ((s > 0 && v > 0) || (s < 0 && v < 0)) {
      chamber_dfs(dim, normals, h + 1, sigma, stricts, rep, out);
    } else {
      InteriorPoint ip = lp_relative_interior(dim, {}, stricts);
      if (ip.feasible) chamber_dfs(dim, normals, h + 1, sigma, stricts, ip.x, out);
    }
    stricts.pop_back();
    sigma.pop_back();
  }
}

void face_dfs(int dim, const RatMat& normals, size_t h, SignVec& sigma, RatMat& equalities,
              RatMat& stricts, const RatVec& rep, std::vector<FanFace>& out) {
  if (h == normals.size()) {
    RatVec r = rep;
    if (is_zero(r)) {
      // Pure-subspace face: pick a nonzero interior direction if one exists.
      RatMat null = equalities.empty() ? RatMat{} : nullspace(equalities, dim);
      if (equalities.empty()) {
        r.assign(dim, Rat(0));
        r[0] = 1;  // no constraints at all: whole space, any direction
      } else if (!null.empty()) {
        r = null[0];
      }
    }
    out.push_back({sigma, std::move(r)});
    return;
  }
  Rat v = sign_of(normals[h], rep);
  for (int s : {+1, -1, 0}) {
    sigma.push_back(s);
    if (s == 0) {
      equalities.push_back(normals[h]);
      if (v == 0) {
        face_dfs(dim, normals, h + 1, sigma, equalities, stricts, rep, out);
      } else {
        InteriorPoint ip = lp_relative_interior(dim, equalities, stricts);
        if (ip.feasible) face_dfs(dim, normals, h + 1, sigma, equalities, stricts, ip.x, out);
      }
      equalities.pop_back();
    } else {
      RatVec srow(normals[h].size());
      for (size_t i = 0; i < srow.size(); ++i) srow[i] = Rat(s) * normals[h][i];
      stricts.push_back(srow);
      if ((s > 0 && v > 0) || (s < 0 && v < 0)) {
        face_dfs(dim, normals, h + 1, sigma, equalities, stricts, rep, out);
      } else {
        InteriorPoint ip = lp_relative_interior(dim, equalities, stricts);
        if (ip.feasible) face_dfs(dim, normals, h + 1, sigma, equalities, stricts, ip.x, out);
      }
      stricts.pop_back();
    }
    sigma.pop_back();
  }
}

}  // namespace

Fan fan_from_normals(int dim, const RatMat& raw_normals) {
  for (const auto& v : raw_normals)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("fan_from_normals: dimension mismatch");
  Fan fan;
  fan.dim = dim;
  fan.normals = canonical_normals(raw_normals);
  fan.span = Subspace(dim, fan.normals);
  fan.lineality = fan.span.orthogonal_complement();
  if (fan.normals.empty()) {
    fan.chambers.push_back({});
  } else {
    SignVec sigma;
    RatMat stricts;
    RatVec rep(dim, Rat(0));
    chamber_dfs(dim, fan.normals, 0, sigma, stricts, rep, fan.chambers);
  }
  for (const auto& n : fan.normals) fan.normals_d.push_back(to_doubles(n));
  return fan;
}

Fan build_fan(int dim, const std::vector<RatVec>& sources) {
  RatMat diffs;
  for (size_t i = 0; i < sources.size(); ++i)
    for (size_t j = i + 1; j < sources.size(); ++j) {
      RatVec d = vsub(sources[i], sources[j]);
      if (!is_zero(d)) diffs.push_back(std::move(d));
    }
  return fan_from_normals(dim, diffs);
}

std::vector<RatVec> fan_rays(const Fan& fan) {
  int d = fan.span.dim();
  if (d == 0) throw DegenerateSources();
  const RatMat& B = fan.span.basis();

  // Restrict each normal to span coordinates: x = sum y_j B_j turns
  // n.x = 0 into (n.B_1, ..., n.B_d) . y = 0.
  std::set<RatVec> restricted;
  for (const auto& n : fan.normals) {
    RatVec r(d);
    for (int j = 0; j < d; ++j) r[j] = dot(n, B[j]);
    if (!is_zero(r)) restricted.insert(primitive(r, true));
  }
  RatMat rn(restricted.begin(), restricted.end());

  std::set<RatVec> rays;
  int m = static_cast<int>(rn.size());
  std::vector<int> pick(d - 1);
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == d - 1) {
      RatMat sub;
      for (int idx : pick) sub.push_back(rn[idx]);
      RatMat null = sub.empty() ? RatMat{RatVec(1, Rat(1))} : nullspace(sub, d);
      if (null.size() != 1) return;
      RatVec y = null[0];
      RatVec x(fan.dim, Rat(0));
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < fan.dim; ++i) x[i] += y[j] * B[j][i];
      RatVec p = primitive(x, false);
      rays.insert(p);
      for (auto& c : p) c = -c;
      rays.insert(p);
      return;
    }
    for (int i = start; i <= m - (d - 1 - k); ++i) {
      pick[k] = i;
      choose(i + 1, k + 1);
    }
  };
  if (d == 1) {
    RatVec p = primitive(B[0], false);
    rays.insert(p);
    for (auto& c : p) c = -c;
    rays.insert(p);
  } else {
    choose(0, 0);
  }
  return {rays.begin(), rays.end()};
}

std::vector<FanFace> enumerate_faces(int dim, const RatMat& raw_normals) {
  RatMat normals = canonical_normals(raw_normals);
  std::vector<FanFace> out;
  SignVec sigma;
  RatMat equalities, stricts;
  RatVec rep(dim, Rat(0));
  face_dfs(dim, normals, 0, sigma, equalities, stricts, rep, out);
  return out;
}

ConesWithinResult cones_within(const Fan& fan, const std::vector<double>& X, double delta) {
  if (static_cast<int>(X.size()) != fan.dim) throw std::invalid_argument("cones_within: dimension mismatch");
  ConesWithinResult res;
  const size_t m = fan.normals.size();

  std::vector<double> proj(m), nlen(m);
  for (size_t h = 0; h < m; ++h) {
    double s = 0;
    for (int i = 0; i < fan.dim; ++i) s += fan.normals_d[h][i] * X[i];
    proj[h] = s;
    nlen[h] = norm2(fan.normals_d[h]);
  }

  for (size_t c = 0; c < fan.chambers.size(); ++c) {
    const SignVec& sigma = fan.chambers[c];
    bool inside = true;
    double lower = 0;  // max single-halfspace distance, a valid lower bound
    for (size_t h = 0; h < m; ++h) {
      double v = sigma[h] * proj[h];
      if (v < 0) {
        inside = false;
        lower = std::max(lower, -v / nlen[h]);
      }
    }
    double dist = 0;
    if (!inside) {
      if (lower > delta) continue;
      dist = distance_to_region(X, sigma, fan.normals_d);
    }
    if (dist <= delta) res.qualifying.push_back(static_cast<int>(c));
  }

  if (res.qualifying.empty()) throw std::logic_error("cones_within: complete fan left no qualifying chamber");

  res.meet = fan.chambers[res.qualifying[0]];
  for (size_t k = 1; k < res.qualifying.size(); ++k) {
    const SignVec& sigma = fan.chambers[res.qualifying[k]];
    for (size_t h = 0; h < m; ++h)
      if (res.meet[h] != sigma[h]) res.meet[h] = 0;
  }
  return res;
}

}  // namespace crn
