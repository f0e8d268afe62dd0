#include "crn/tdi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "crn/rng.hpp"

namespace crn {

namespace {

constexpr double kLambdaCap = 1152921504606846976.0;  // 2^60

double float_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double min_source_gap(const std::vector<RatVec>& sources) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < sources.size(); ++i)
    for (size_t j = i + 1; j < sources.size(); ++j)
      gap = std::min(gap, norm2(to_doubles(vsub(sources[i], sources[j]))));
  return gap;
}

double edge_length_sum(const EGraph& g) {
  double s = 0;
  for (int e = 0; e < g.edge_count(); ++e) s += norm2(to_doubles(g.edge_vector(e)));
  return s;
}

// Relative margin of drift(e^X0) . w' > 0. Edges orthogonal to w' (exact
// test) contribute nothing along w' however large their monomials are, so
// the sum runs over the rest, scaled by their largest monomial; each term's
// sign is the exact sign of v_e . w'.
double ascent_margin(const EGraph& g, const std::vector<double>& rates,
                     const std::vector<double>& X0, const RatVec& w_prime) {
  double wnorm = norm2(to_doubles(w_prime));
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> expo(g.edge_count());
  std::vector<double> along(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    Rat a = dot(w_prime, g.edge_vector(e));
    if (a == 0) continue;
    along[e] = rat_to_double(a) / wnorm;
    expo[e] = std::log(rates[e]) + float_dot(to_doubles(g.vertex(g.edges()[e].src)), X0);
    peak = std::max(peak, expo[e]);
  }
  if (!std::isfinite(peak)) return 0;
  double sum = 0, mass = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (along[e] == 0) continue;
    double t = std::exp(expo[e] - peak) * along[e];
    sum += t;
    mass += std::abs(t);
  }
  return sum / (1 + mass);
}

// Does the cone lie inside {y : y . w' <= 0}? Exact; together with an
// ascent margin along w' this certifies the drift is outside the cone even
// when its direction is angularly close to the cone's boundary.
bool below_w_prime(const GeneratedCone& cone, const RatVec& w_prime) {
  for (const RatVec& gen : cone.generators)
    if (dot(gen, w_prime) > 0) return false;
  for (const RatVec& lin : cone.lineality)
    if (dot(lin, w_prime) != 0) return false;
  return true;
}

}  // namespace

TdiParams embedding_parameters(const EGraph& g, double epsilon) {
  if (!(epsilon > 0) || epsilon > 1) throw std::invalid_argument("epsilon must lie in (0, 1]");
  TdiParams p;
  p.epsilon = epsilon;
  if (g.edge_count() == 0) {
    p.fan = fan_from_normals(g.dimension(), {});
    p.k0 = epsilon * epsilon;
    p.delta = 1;
    return p;
  }
  EndotacticResult res = is_endotactic(g);
  if (!res.endotactic) throw NotEndotactic(res.witness);

  std::vector<RatVec> sources = g.source_vertices();
  p.fan = build_fan(g.dimension(), sources);
  p.rays = fan_rays(p.fan);  // dim(J) >= 1: endotactic graphs with edges have >= 2 sources
  for (const auto& r : p.rays) {
    std::vector<double> u = to_doubles(r);
    double len = norm2(u);
    for (auto& c : u) c /= len;
    p.rays_unit.push_back(std::move(u));
  }

  // K0: the qualifying (edge, ray) pairs are found by exact sign tests on
  // the primitive ray directions; only the magnitude is floating point.
  double worst = std::numeric_limits<double>::infinity();
  for (size_t ri = 0; ri < p.rays.size(); ++ri) {
    for (int e = 0; e < g.edge_count(); ++e) {
      RatVec v = g.edge_vector(e);
      if (dot(v, p.rays[ri]) < 0)
        worst = std::min(worst, -float_dot(to_doubles(v), p.rays_unit[ri]));
    }
  }
  if (!std::isfinite(worst))
    throw std::logic_error("no edge descends along any ray");  // impossible when endotactic
  p.k0 = epsilon * epsilon * worst * (1 - 1e-12);
  p.delta = std::log(edge_length_sum(g) / p.k0) / min_source_gap(sources) * (1 + 1e-12);
  return p;
}

GeneratedCone tdi_rhs(const Fan& fan, double delta, const std::vector<double>& X) {
  return chamber_polar(cones_within(fan, X, delta).meet, fan.normals);
}

std::vector<double> drift(const EGraph& g, const std::vector<double>& rates,
                          const std::vector<double>& x) {
  if (static_cast<int>(rates.size()) != g.edge_count())
    throw std::invalid_argument("drift: one rate per edge required");
  if (static_cast<int>(x.size()) != g.dimension())
    throw std::invalid_argument("drift: dimension mismatch");
  std::vector<double> X(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0)) throw std::invalid_argument("drift: state must be strictly positive");
    X[i] = std::log(x[i]);
  }
  std::vector<double> out(g.dimension(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(rates[e] > 0)) throw std::invalid_argument("drift: rates must be positive");
    double a = std::log(rates[e]) + float_dot(to_doubles(g.vertex(g.edges()[e].src)), X);
    double c = std::exp(a);
    std::vector<double> v = to_doubles(g.edge_vector(e));
    for (int d = 0; d < g.dimension(); ++d) out[d] += c * v[d];
  }
  return out;
}

std::vector<double> drift_direction(const EGraph& g, const std::vector<double>& rates,
                                    const std::vector<double>& X) {
  if (static_cast<int>(rates.size()) != g.edge_count())
    throw std::invalid_argument("drift_direction: one rate per edge required");
  if (static_cast<int>(X.size()) != g.dimension())
    throw std::invalid_argument("drift_direction: dimension mismatch");
  std::vector<double> out(g.dimension(), 0.0);
  if (g.edge_count() == 0) return out;
  std::vector<double> expo(g.edge_count());
  double peak = -std::numeric_limits<double>::infinity();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(rates[e] > 0)) throw std::invalid_argument("drift_direction: rates must be positive");
    expo[e] = std::log(rates[e]) + float_dot(to_doubles(g.vertex(g.edges()[e].src)), X);
    peak = std::max(peak, expo[e]);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    double c = std::exp(expo[e] - peak);
    std::vector<double> v = to_doubles(g.edge_vector(e));
    for (int d = 0; d < g.dimension(); ++d) out[d] += c * v[d];
  }
  return out;
}

VerificationReport verify_embedding(const EGraph& g, double epsilon, int samples,
                                    std::uint64_t seed, double tau) {
  if (samples < 1) throw std::invalid_argument("verify_embedding: need at least one sample");
  TdiParams p = embedding_parameters(g, epsilon);
  VerificationReport rep;
  rep.seed = seed;
  rep.k0 = p.k0;
  rep.delta = p.delta;
  rep.epsilon = epsilon;
  rep.tau = tau;

  std::vector<FanFace> faces = enumerate_faces(g.dimension(), p.fan.normals);
  std::vector<std::vector<double>> reps;
  for (const FanFace& f : faces) {
    std::vector<double> r = to_doubles(f.rep);
    double len = norm2(r);
    if (len > 0)
      for (auto& c : r) c /= len;
    reps.push_back(std::move(r));
  }

  Rng rng(seed);
  const int n = g.dimension();
  const int ne = g.edge_count();
  const double reach = 10 * p.delta;
  const std::array<double, 3> scales{0.1, 1.0, 10.0};
  std::vector<double> X(n), k(ne);
  for (int i = 0; i < samples; ++i) {
    if (rng.flip()) {
      const std::vector<double>& base = reps[rng.below(reps.size())];
      double off = p.delta * scales[rng.below(3)];
      double rho = rng.uniform(0, reach);
      std::vector<double> u = rng.unit_vector(n);
      for (int d = 0; d < n; ++d) X[d] = rho * base[d] + off * u[d];
    } else {
      for (int d = 0; d < n; ++d) X[d] = rng.uniform(-reach, reach);
    }
    if (rng.flip())
      for (int e = 0; e < ne; ++e) k[e] = rng.flip() ? 1.0 / epsilon : epsilon;
    else
      for (int e = 0; e < ne; ++e) k[e] = rng.uniform(epsilon, 1.0 / epsilon);

    std::vector<double> d = drift_direction(g, k, X);
    GeneratedCone cone = tdi_rhs(p, X);
    double viol = cone_distance(d, cone) / (1 + norm_inf(d));
    rep.max_violation = std::max(rep.max_violation, viol);
    if (viol > tau) ++rep.n_violations;
    ++rep.n_samples;
  }
  return rep;
}

Counterexample refute_embedding(const EGraph& g, const std::vector<TargetFan>& targets,
                                double tau) {
  EndotacticResult res = is_endotactic(g);
  if (res.endotactic) throw IsEndotactic();

  const int n = g.dimension();
  const int ne = g.edge_count();
  Counterexample c;
  c.w_prime.resize(n);
  for (int d = 0; d < n; ++d) c.w_prime[d] = -res.witness[d];
  std::vector<double> wp = to_doubles(c.w_prime);
  double wnorm = norm2(wp);
  std::vector<double> wp_unit(n);
  for (int d = 0; d < n; ++d) wp_unit[d] = wp[d] / wnorm;

  std::vector<Rat> ascent(ne);
  bool any = false;
  Rat min_ascent = 0;
  for (int e = 0; e < ne; ++e) {
    ascent[e] = dot(c.w_prime, g.edge_vector(e));
    if (ascent[e] > 0 && (!any || ascent[e] < min_ascent)) {
      min_ascent = ascent[e];
      any = true;
    }
  }
  if (!any) throw std::logic_error("witness admits no ascending edge");  // contradicts witness

  double sum = edge_length_sum(g);
  c.epsilon = std::sqrt(rat_to_double(min_ascent) / (2 * wnorm * sum));

  // Distinguished edge: first ascending one when edges are ordered by
  // descending source level along w', ties kept in input order.
  std::vector<int> order(ne);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rat> level(ne);
  for (int e = 0; e < ne; ++e) level[e] = dot(c.w_prime, g.vertex(g.edges()[e].src));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return level[a] > level[b]; });
  for (int e : order)
    if (ascent[e] > 0) {
      c.distinguished_edge = e;
      break;
    }
  c.rates.assign(ne, c.epsilon);
  c.rates[c.distinguished_edge] = 1.0 / c.epsilon;

  // Domination bound B: beyond it, every lower source monomial is too small
  // to cancel the distinguished edge's contribution along w'.
  std::vector<RatVec> sources = g.source_vertices();
  double bound = 0;
  if (sources.size() >= 2) {
    double ratio = 2 * wnorm * sum / (c.epsilon * c.epsilon * rat_to_double(ascent[c.distinguished_edge]));
    bound = std::max(0.0, std::log(ratio) / min_source_gap(sources));
  }

  // Tail sources sit strictly below the distinguished level along w'.
  const RatVec& sd = g.vertex(g.edges()[c.distinguished_edge].src);
  Rat level_d = dot(c.w_prime, sd);
  std::vector<double> tail_coef;
  for (const RatVec& s : sources) {
    if (dot(c.w_prime, s) < level_d) {
      RatVec diff = vsub(sd, s);
      tail_coef.push_back(float_dot(wp_unit, to_doubles(diff)) / norm2(to_doubles(diff)));
    }
  }

  // Chambers of each target fan that do not contain w' (exact test), with
  // their distance from the unit point of ray(w'). Cones are positively
  // homogeneous, so the distance at lambda is lambda times the base value.
  struct Obstacle {
    double base;
    double threshold;
  };
  std::vector<Obstacle> obstacles;
  for (const TargetFan& t : targets) {
    double threshold = std::max(t.delta, bound);
    for (const SignVec& sigma : t.fan.chambers) {
      bool contains = true;
      for (size_t h = 0; h < t.fan.normals.size() && contains; ++h)
        if (Rat(sigma[h]) * dot(t.fan.normals[h], c.w_prime) < 0) contains = false;
      if (contains) continue;
      obstacles.push_back({distance_to_region(wp_unit, sigma, t.fan.normals_d), threshold});
    }
  }

  double lambda = 1;
  auto grown = [&] {
    for (const Obstacle& o : obstacles)
      if (!(lambda * o.base > o.threshold)) return false;
    for (double coef : tail_coef)
      if (!(lambda * coef > bound)) return false;
    return true;
  };
  while (!grown()) {
    lambda *= 2;
    if (lambda > kLambdaCap) throw std::runtime_error("refute_embedding: lambda cap exceeded");
  }

  for (;;) {
    c.lambda = lambda;
    c.x0.assign(n, 0.0);
    for (int d = 0; d < n; ++d) c.x0[d] = lambda * wp_unit[d];
    c.drift_dir = drift_direction(g, c.rates, c.x0);
    double margin = ascent_margin(g, c.rates, c.x0, c.w_prime);
    bool good = margin > tau;
    c.violations.clear();
    for (const TargetFan& t : targets) {
      GeneratedCone cone = tdi_rhs(t.fan, t.delta, c.x0);
      double viol = cone_distance(c.drift_dir, cone) / (1 + norm_inf(c.drift_dir));
      // Edges orthogonal to w' can dominate the drift while lying inside the
      // cone; then the angular distance above is vanishingly small although
      // membership genuinely fails. The structural test covers that regime.
      if (margin > tau && below_w_prime(cone, c.w_prime)) viol = std::max(viol, margin);
      c.violations.push_back(viol);
      if (!(viol > tau)) good = false;
    }
    if (good) return c;
    lambda *= 2;
    if (lambda > kLambdaCap) throw std::runtime_error("refute_embedding: lambda cap exceeded");
  }
}

bool certificate_valid(const EGraph& g, const Counterexample& c,
                       const std::vector<TargetFan>& targets, double tau) {
  std::vector<double> d = drift_direction(g, c.rates, c.x0);
  double margin = ascent_margin(g, c.rates, c.x0, c.w_prime);
  if (!(margin > tau)) return false;
  for (const TargetFan& t : targets) {
    GeneratedCone cone = tdi_rhs(t.fan, t.delta, c.x0);
    if (cone_member(d, cone, tau) && !below_w_prime(cone, c.w_prime)) return false;
  }
  return true;
}

}  // namespace crn
