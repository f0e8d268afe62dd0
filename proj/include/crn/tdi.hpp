#pragma once

#include <cstdint>

#include "crn/endotactic.hpp"

namespace crn {

struct NotEndotactic : std::runtime_error {
  RatVec witness;
  explicit NotEndotactic(RatVec w)
      : std::runtime_error("graph is not endotactic"), witness(std::move(w)) {}
};

struct IsEndotactic : std::runtime_error {
  IsEndotactic() : std::runtime_error("graph is endotactic; nothing to refute") {}
};

// Embedding data for an endotactic graph: the fan of its source differences
// plus the constants K0 and delta. K0 is rounded down and delta up; both
// directions enlarge the inclusion, so the embedding guarantee survives
// floating-point error.
struct TdiParams {
  Fan fan;
  double epsilon = 1;
  double k0 = 0;
  double delta = 1;
  std::vector<RatVec> rays;                    // primitive, both orientations
  std::vector<std::vector<double>> rays_unit;  // matching unit float vectors
};

// Throws NotEndotactic (carrying the witness direction). An edgeless graph
// gets the trivial fan, delta = 1 and K0 = epsilon^2.
TdiParams embedding_parameters(const EGraph& g, double epsilon);

// F_{fan,delta}(X): polar of the intersection of the chambers within delta
// of X. With no normals the intersection is R^n and the polar is {0}.
GeneratedCone tdi_rhs(const Fan& fan, double delta, const std::vector<double>& X);

inline GeneratedCone tdi_rhs(const TdiParams& p, const std::vector<double>& X) {
  return tdi_rhs(p.fan, p.delta, X);
}

// Sum of k_e x^{s_e} (t_e - s_e); monomials are evaluated in log space.
std::vector<double> drift(const EGraph& g, const std::vector<double>& rates,
                          const std::vector<double>& x);

// Positive multiple of drift at x = e^X: the largest monomial is factored
// out so the result stays finite however extreme X is. Cone membership is
// invariant under positive scaling, so this is what the checks consume.
std::vector<double> drift_direction(const EGraph& g, const std::vector<double>& rates,
                                    const std::vector<double>& X);

struct VerificationReport {
  int n_samples = 0;
  int n_violations = 0;
  double max_violation = 0;
  std::uint64_t seed = 0;
  double k0 = 0;
  double delta = 0;
  double epsilon = 1;
  double tau = 1e-9;
};

// Membership of drift directions in F(X) over `samples` (X, k) pairs: half
// stratified near arrangement faces at distances {0.1, 1, 10} * delta, half
// uniform in [-10 delta, 10 delta]^n; rates half at corners {eps, 1/eps}^E,
// half uniform. A violation is a relative max-norm distance above tau.
VerificationReport verify_embedding(const EGraph& g, double epsilon, int samples,
                                    std::uint64_t seed, double tau = 1e-9);

struct TargetFan {
  Fan fan;
  double delta = 1;
};

struct Counterexample {
  RatVec w_prime;                  // negated endotactic witness
  double epsilon = 0;
  std::vector<double> rates;       // constant in time, one per edge
  int distinguished_edge = -1;     // the edge rated 1/epsilon
  double lambda = 1;
  std::vector<double> x0;          // X0 = lambda * w' / |w'|
  std::vector<double> drift_dir;   // positive multiple of drift at e^{X0}
  std::vector<double> violations;  // per target: relative measure of how far
                                   // membership fails (see refute_embedding)
};

// Converse construction: fixed rates and a state X0 on ray(w') at which the
// drift leaves every target's inclusion cone. X0 moves out by doubling
// lambda until every target chamber not containing w' is further than
// max(delta, B) and every lower source level is B below the distinguished
// one, B being the logarithmic domination bound. Membership failure is
// certified per target by the larger of two relative measures: the cone
// distance of the drift direction, and — when the target's cone lies in
// {y : y.w' <= 0} (exact test) — the drift's ascent margin along w'. The
// second route matters when edges orthogonal to w' dominate the drift: the
// angular gap then vanishes although the drift still ascends along w' and
// the cone cannot meet that open halfspace. Throws IsEndotactic on
// endotactic input; throws std::runtime_error past lambda = 2^60.
Counterexample refute_embedding(const EGraph& g, const std::vector<TargetFan>& targets,
                                double tau = 1e-9);

// Re-check a certificate from its stored fields alone: the drift recomputed
// from (rates, x0) must ascend along w_prime with relative margin above tau
// (edges orthogonal to w_prime excluded exactly), and for every target must
// either sit outside the cone by more than tau or the cone must lie in
// {y : y.w_prime <= 0} exactly.
bool certificate_valid(const EGraph& g, const Counterexample& c,
                       const std::vector<TargetFan>& targets, double tau = 1e-9);

}  // namespace crn
