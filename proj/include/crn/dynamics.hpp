#pragma once

#include <iosfwd>
#include <string>

#include "crn/egraph.hpp"

namespace crn {

// Per-edge rate function of time, always positive; the sinusoid form is
// clamped into [eps, 1/eps].
class RateFn {
 public:
  static RateFn constant(double value);
  // value[i] applies on [breaks[i], breaks[i+1]); the last value extends to
  // infinity. breaks must start at 0 and increase.
  static RateFn piecewise(std::vector<double> breaks, std::vector<double> values);
  // clamp(exp(amp * sin(omega t + phase)), eps, 1/eps)
  static RateFn sinusoid(double amp, double omega, double phase, double eps);

  double operator()(double t) const;

 private:
  enum class Kind { Constant, Piecewise, Sinusoid };
  Kind kind_ = Kind::Constant;
  double value_ = 1;
  std::vector<double> breaks_, values_;
  double amp_ = 0, omega_ = 1, phase_ = 0, lo_ = 1, hi_ = 1;
};

using RateSchedule = std::vector<RateFn>;  // one entry per edge

RateSchedule constant_schedule(const EGraph& g, const std::vector<double>& rates);

enum class IntegrationStatus { Ok, StepUnderflow };

struct Trajectory {
  std::vector<double> times;                 // strictly increasing, starts at 0
  std::vector<std::vector<double>> states;   // strictly positive componentwise
  IntegrationStatus status = IntegrationStatus::Ok;
  std::string method = "dormand-prince-45";
  double rtol = 1e-8;
};

// Adaptive Dormand-Prince 4(5). Steps that would evaluate or land on a
// nonpositive state are halved; underflow of the step size ends the run
// with the last valid state kept. States are reported on a fixed grid of
// at least 200 intervals.
Trajectory integrate(const EGraph& g, const RateSchedule& schedule,
                     const std::vector<double>& x0, double t_end, double rtol);

struct PersistenceReport {
  std::vector<double> species_min;   // min over the trajectory, per species
  double min_overall = 0;
  double max_class_residual = 0;     // max_t dist(x(t) - x(0), S)
  std::vector<int> flagged;          // species with species_min below floor
  double floor = 1e-8;
};

// Empirical diagnostic only: small minima suggest, but never prove, loss of
// persistence.
PersistenceReport persistence_report(const Trajectory& traj, const EGraph& g,
                                     double floor = 1e-8);

// Header t,x1,...,xn then one %.12g row per reporting point.
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace crn
