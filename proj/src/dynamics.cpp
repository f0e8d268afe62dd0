#include "crn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace crn {

RateFn RateFn::constant(double value) {
  if (!(value > 0)) throw std::invalid_argument("rate must be positive");
  RateFn f;
  f.kind_ = Kind::Constant;
  f.value_ = value;
  return f;
}

RateFn RateFn::piecewise(std::vector<double> breaks, std::vector<double> values) {
  if (breaks.size() != values.size() || breaks.empty())
    throw std::invalid_argument("piecewise rate needs matching nonempty lists");
  if (breaks.front() != 0) throw std::invalid_argument("piecewise breaks must start at 0");
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1])) throw std::invalid_argument("piecewise breaks must increase");
  for (double v : values)
    if (!(v > 0)) throw std::invalid_argument("rate must be positive");
  RateFn f;
  f.kind_ = Kind::Piecewise;
  f.breaks_ = std::move(breaks);
  f.values_ = std::move(values);
  return f;
}

RateFn RateFn::sinusoid(double amp, double omega, double phase, double eps) {
  if (!(eps > 0) || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
  RateFn f;
  f.kind_ = Kind::Sinusoid;
  f.amp_ = amp;
  f.omega_ = omega;
  f.phase_ = phase;
  f.lo_ = eps;
  f.hi_ = 1.0 / eps;
  return f;
}

double RateFn::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::Piecewise: {
      size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
      return values_[i == 0 ? 0 : i - 1];
    }
    case Kind::Sinusoid:
      return std::clamp(std::exp(amp_ * std::sin(omega_ * t + phase_)), lo_, hi_);
  }
  return value_;
}

RateSchedule constant_schedule(const EGraph& g, const std::vector<double>& rates) {
  if (static_cast<int>(rates.size()) != g.edge_count())
    throw std::invalid_argument("one rate per edge required");
  RateSchedule s;
  for (double r : rates) s.push_back(RateFn::constant(r));
  return s;
}

namespace {

// Dormand-Prince tableau; the first b row is the 5th-order solution (FSAL).
constexpr double kC[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1, 1};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB4[7] = {5179.0 / 57600, 0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Field {
  std::vector<std::vector<double>> src;  // per-edge source exponents
  std::vector<std::vector<double>> vec;  // per-edge displacement
  const RateSchedule* schedule;
  int n;

  // False when some component of x is nonpositive (monomials undefined).
  bool eval(double t, const std::vector<double>& x, std::vector<double>& out) const {
    std::vector<double> lx(n);
    for (int i = 0; i < n; ++i) {
      if (!(x[i] > 0)) return false;
      lx[i] = std::log(x[i]);
    }
    std::fill(out.begin(), out.end(), 0.0);
    for (size_t e = 0; e < src.size(); ++e) {
      double a = 0;
      for (int i = 0; i < n; ++i) a += src[e][i] * lx[i];
      double c = (*schedule)[e](t) * std::exp(a);
      for (int i = 0; i < n; ++i) out[i] += c * vec[e][i];
    }
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(out[i])) return false;
    return true;
  }
};

}  // namespace

Trajectory integrate(const EGraph& g, const RateSchedule& schedule,
                     const std::vector<double>& x0, double t_end, double rtol) {
  if (static_cast<int>(schedule.size()) != g.edge_count())
    throw std::invalid_argument("integrate: one rate function per edge required");
  if (static_cast<int>(x0.size()) != g.dimension())
    throw std::invalid_argument("integrate: dimension mismatch");
  for (double v : x0)
    if (!(v > 0)) throw std::invalid_argument("integrate: initial state must be positive");
  if (!(t_end > 0)) throw std::invalid_argument("integrate: t_end must be positive");
  if (!(rtol > 0)) throw std::invalid_argument("integrate: rtol must be positive");

  const int n = g.dimension();
  Field f;
  f.schedule = &schedule;
  f.n = n;
  for (int e = 0; e < g.edge_count(); ++e) {
    f.src.push_back(to_doubles(g.vertex(g.edges()[e].src)));
    f.vec.push_back(to_doubles(g.edge_vector(e)));
  }

  constexpr int kReports = 200;
  constexpr double kAtol = 1e-12;
  const double dt_report = t_end / kReports;
  const double h_min = std::max(1e-14 * t_end, 1e-300);

  Trajectory traj;
  traj.rtol = rtol;
  traj.times.push_back(0);
  traj.states.push_back(x0);

  std::vector<double> x = x0;
  double t = 0;
  double h = t_end / 1000;
  int next_report = 1;
  std::vector<std::vector<double>> k(7, std::vector<double>(n));
  std::vector<double> stage(n), x5(n), err(n);

  long steps = 0;
  while (next_report <= kReports) {
    if (++steps > 20000000 || h < h_min) {
      traj.status = IntegrationStatus::StepUnderflow;
      return traj;
    }
    double target = next_report * dt_report;
    double hs = std::min(h, target - t);
    bool ok = f.eval(t, x, k[0]);
    for (int s = 1; ok && s < 7; ++s) {
      for (int i = 0; i < n; ++i) {
        double acc = 0;
        for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
        stage[i] = x[i] + hs * acc;
      }
      ok = f.eval(t + kC[s] * hs, stage, k[s]);
    }
    if (ok) {
      double errnorm = 0;
      for (int i = 0; i < n; ++i) {
        double acc5 = 0, acc4 = 0;
        for (int j = 0; j < 6; ++j) acc5 += kA[6][j] * k[j][i];
        for (int j = 0; j < 7; ++j) acc4 += kB4[j] * k[j][i];
        x5[i] = x[i] + hs * acc5;
        err[i] = hs * (acc5 - acc4);
        double scale = kAtol + rtol * std::max(std::abs(x[i]), std::abs(x5[i]));
        errnorm = std::max(errnorm, std::abs(err[i]) / scale);
      }
      for (int i = 0; ok && i < n; ++i)
        if (!(x5[i] > 0) || !std::isfinite(x5[i])) ok = false;
      if (ok && errnorm <= 1.0) {
        t += hs;
        x = x5;
        if (t >= target - 1e-12 * t_end) {
          traj.times.push_back(target);
          traj.states.push_back(x);
          ++next_report;
        }
        double grow = errnorm > 0 ? 0.9 * std::pow(errnorm, -0.2) : 5.0;
        h = hs * std::clamp(grow, 0.2, 5.0);
        continue;
      }
      if (ok) {  // accuracy rejection
        h = hs * std::clamp(0.9 * std::pow(errnorm, -0.2), 0.2, 1.0);
        continue;
      }
    }
    h = hs / 2;  // positivity or finiteness rejection
  }
  return traj;
}

PersistenceReport persistence_report(const Trajectory& traj, const EGraph& g, double floor) {
  PersistenceReport rep;
  rep.floor = floor;
  if (traj.states.empty()) return rep;
  const int n = static_cast<int>(traj.states.front().size());
  rep.species_min.assign(traj.states.front().begin(), traj.states.front().end());
  for (const auto& s : traj.states)
    for (int i = 0; i < n; ++i) rep.species_min[i] = std::min(rep.species_min[i], s[i]);
  rep.min_overall = *std::min_element(rep.species_min.begin(), rep.species_min.end());
  for (int i = 0; i < n; ++i)
    if (rep.species_min[i] < floor) rep.flagged.push_back(i);

  // Orthonormalize the exact stoichiometric basis (two Gram-Schmidt passes)
  // and measure how far each displacement leaves the subspace.
  Subspace stoich = g.stoichiometric_subspace();
  std::vector<std::vector<double>> basis;
  for (const RatVec& row : stoich.basis()) basis.push_back(to_doubles(row));
  std::vector<std::vector<double>> ortho;
  for (auto v : basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : ortho) {
        double p = 0;
        for (int i = 0; i < n; ++i) p += q[i] * v[i];
        for (int i = 0; i < n; ++i) v[i] -= p * q[i];
      }
    double len = norm2(v);
    if (len > 1e-300) {
      for (auto& c : v) c /= len;
      ortho.push_back(std::move(v));
    }
  }
  const std::vector<double>& x0 = traj.states.front();
  for (const auto& s : traj.states) {
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = s[i] - x0[i];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : ortho) {
        double p = 0;
        for (int i = 0; i < n; ++i) p += q[i] * d[i];
        for (int i = 0; i < n; ++i) d[i] -= p * q[i];
      }
    rep.max_class_residual = std::max(rep.max_class_residual, norm2(d));
  }
  return rep;
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  const int n = traj.states.empty() ? 0 : static_cast<int>(traj.states.front().size());
  os << "t";
  for (int i = 1; i <= n; ++i) os << ",x" << i;
  os << "\n";
  char buf[64];
  for (size_t r = 0; r < traj.times.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.12g", traj.times[r]);
    os << buf;
    for (int i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", traj.states[r][i]);
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace crn
