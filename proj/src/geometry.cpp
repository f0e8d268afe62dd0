#include "crn/geometry.hpp"

#include <cmath>

namespace crn {

GeneratedCone chamber_polar(const SignVec& sigma, const RatMat& normals) {
  if (sigma.size() != normals.size()) throw std::invalid_argument("chamber_polar: size mismatch");
  GeneratedCone cone;
  RatMat lin;
  for (size_t h = 0; h < sigma.size(); ++h) {
    if (sigma[h] == 0) {
      lin.push_back(normals[h]);
    } else {
      RatVec g(normals[h].size());
      for (size_t i = 0; i < g.size(); ++i) g[i] = -Rat(sigma[h]) * normals[h][i];
      cone.generators.push_back(std::move(g));
    }
  }
  if (!lin.empty()) {
    // Reduce the lineality part to a basis; generators stay as given.
    int dim = static_cast<int>(lin[0].size());
    cone.lineality = Subspace(dim, lin).basis();
  }
  return cone;
}

namespace {

// Least max-norm deviation: min t s.t. |v - G lambda - L mu| <= t,
// lambda >= 0. Always feasible and bounded.
Rat deviation_lp(const RatVec& v, const GeneratedCone& cone) {
  int dim = static_cast<int>(v.size());
  int g = static_cast<int>(cone.generators.size());
  int l = static_cast<int>(cone.lineality.size());
  for (const auto& vec : cone.generators)
    if (static_cast<int>(vec.size()) != dim) throw std::invalid_argument("cone_member: dimension mismatch");
  for (const auto& vec : cone.lineality)
    if (static_cast<int>(vec.size()) != dim) throw std::invalid_argument("cone_member: dimension mismatch");

  LpProblem p;
  p.n = g + l + 1;
  p.c.assign(p.n, Rat(0));
  p.c[g + l] = -1;  // maximize -t
  p.nonneg.assign(p.n, false);
  for (int k = 0; k < g; ++k) p.nonneg[k] = true;
  p.nonneg[g + l] = true;

  for (int d = 0; d < dim; ++d) {
    RatVec row(p.n, Rat(0));
    for (int k = 0; k < g; ++k) row[k] = cone.generators[k][d];
    for (int k = 0; k < l; ++k) row[g + k] = cone.lineality[k][d];
    RatVec up = row, dn = row;
    up[g + l] = 1;   // (G lambda + L mu)_d + t >= v_d
    dn[g + l] = -1;  // (G lambda + L mu)_d - t <= v_d
    p.rows.push_back({std::move(up), Rel::Ge, v[d]});
    p.rows.push_back({std::move(dn), Rel::Le, v[d]});
  }
  LpResult r = solve_lp(p);
  if (r.status != LpStatus::Optimal) throw std::logic_error("cone deviation LP not optimal");
  return -r.value;
}

}  // namespace

bool cone_member(const RatVec& v, const GeneratedCone& cone) { return deviation_lp(v, cone) == 0; }

bool cone_member(const std::vector<double>& v, const GeneratedCone& cone, double tau) {
  RatVec vq(v.size());
  Rat vmax = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    vq[i] = rat_quantize(v[i]);
    Rat a = vq[i] < 0 ? Rat(-vq[i]) : vq[i];
    if (a > vmax) vmax = a;
  }
  Rat bound = rat_from_double(tau) * (1 + vmax);
  return deviation_lp(vq, cone) <= bound;
}

double cone_distance(const std::vector<double>& v, const GeneratedCone& cone) {
  RatVec vq(v.size());
  for (size_t i = 0; i < v.size(); ++i) vq[i] = rat_quantize(v[i]);
  return rat_to_double(deviation_lp(vq, cone));
}

double distance_to_region(const std::vector<double>& X, const SignVec& sigma,
                          const std::vector<std::vector<double>>& normals) {
  if (sigma.size() != normals.size()) throw std::invalid_argument("distance_to_region: size mismatch");
  const size_t m = normals.size();
  const size_t dim = X.size();

  bool inside = true;
  for (size_t h = 0; h < m && inside; ++h) {
    double d = 0;
    for (size_t i = 0; i < dim; ++i) d += normals[h][i] * X[i];
    if (sigma[h] == 0 ? d != 0.0 : sigma[h] * d < 0.0) inside = false;
  }
  if (inside) return 0.0;

  std::vector<double> nn(m);
  for (size_t h = 0; h < m; ++h) {
    double s = 0;
    for (double c : normals[h]) s += c * c;
    nn[h] = s;
  }

  std::vector<double> x = X;
  std::vector<std::vector<double>> corr(m, std::vector<double>(dim, 0.0));
  const double tol = 1e-12;
  const int max_cycles = 100000;
  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    double change = 0;
    for (size_t h = 0; h < m; ++h) {
      if (nn[h] == 0) continue;
      std::vector<double> y(dim);
      for (size_t i = 0; i < dim; ++i) y[i] = x[i] + corr[h][i];
      double d = 0;
      for (size_t i = 0; i < dim; ++i) d += normals[h][i] * y[i];
      double step = 0;
      if (sigma[h] == 0)
        step = d / nn[h];
      else if (sigma[h] * d < 0)
        step = d / nn[h];
      for (size_t i = 0; i < dim; ++i) {
        double nx = y[i] - step * normals[h][i];
        corr[h][i] = y[i] - nx;
        change = std::max(change, std::fabs(nx - x[i]));
        x[i] = nx;
      }
    }
    if (change < tol) {
      double s = 0;
      for (size_t i = 0; i < dim; ++i) s += (X[i] - x[i]) * (X[i] - x[i]);
      return std::sqrt(s);
    }
  }
  throw std::runtime_error("distance_to_region: cyclic projection did not converge");
}

InteriorPoint lp_relative_interior(int dim, const RatMat& equalities, const RatMat& stricts,
                                   const RatMat& closed) {
  for (const auto& v : equalities)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("lp_relative_interior: dimension mismatch");
  for (const auto& v : stricts)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("lp_relative_interior: dimension mismatch");
  for (const auto& v : closed)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("lp_relative_interior: dimension mismatch");

  if (stricts.empty()) return {true, RatVec(dim, Rat(0))};

  // Work inside the nullspace of the equalities: x = sum_j y_j N_j.
  RatMat N;
  if (equalities.empty()) {
    N.assign(dim, RatVec(dim, Rat(0)));
    for (int i = 0; i < dim; ++i) N[i][i] = 1;
  } else {
    N = nullspace(equalities, dim);
  }
  int k = static_cast<int>(N.size());
  if (k == 0) return {false, {}};

  LpProblem p;
  p.n = k + 1;  // y, then t
  p.c.assign(p.n, Rat(0));
  p.c[k] = 1;
  auto reduced = [&](const RatVec& a) {
    RatVec row(p.n, Rat(0));
    for (int j = 0; j < k; ++j) row[j] = dot(a, N[j]);
    return row;
  };
  for (const auto& a : stricts) {
    RatVec row = reduced(a);
    row[k] = -1;
    p.rows.push_back({std::move(row), Rel::Ge, Rat(0)});  // a.x >= t
  }
  for (const auto& a : closed) p.rows.push_back({reduced(a), Rel::Ge, Rat(0)});
  for (int i = 0; i < dim; ++i) {
    RatVec row(p.n, Rat(0));
    bool any = false;
    for (int j = 0; j < k; ++j) {
      row[j] = N[j][i];
      if (row[j] != 0) any = true;
    }
    if (!any) continue;
    p.rows.push_back({row, Rel::Le, Rat(1)});
    for (auto& c : row) c = -c;
    p.rows.push_back({std::move(row), Rel::Le, Rat(1)});
  }

  LpResult r = solve_lp(p);
  if (r.status != LpStatus::Optimal) throw std::logic_error("lp_relative_interior: LP not optimal");
  if (r.value <= 0) return {false, {}};
  RatVec x(dim, Rat(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) x[i] += r.x[j] * N[j][i];
  return {true, std::move(x)};
}

}  // namespace crn
