#include "crn/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "crn/parser.hpp"
#include "doctest.h"

using namespace crn;

namespace {

std::string fixture(const std::string& name) { return std::string(CRN_FIXTURE_DIR) + "/" + name; }

EGraph load_fixture(const std::string& name) { return load_network_file(fixture(name)).graph; }

// dx/dt = 1 - x^2 from the rate-(1/2, 1/2) birth/death pair; closed form
// x(t) = (A + B e^{-2t}) / (A - B e^{-2t}) with A = x0 + 1, B = x0 - 1.
double riccati(double x0, double t) {
  double a = x0 + 1, b = x0 - 1, u = std::exp(-2 * t);
  return (a + b * u) / (a - b * u);
}

}  // namespace

TEST_CASE("rate functions") {
  RateFn c = RateFn::constant(2.5);
  CHECK(c(0) == 2.5);
  CHECK(c(100) == 2.5);
  CHECK_THROWS_AS(RateFn::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(RateFn::constant(-1.0), std::invalid_argument);

  RateFn p = RateFn::piecewise({0, 1, 2}, {1, 2, 3});
  CHECK(p(0.0) == 1);
  CHECK(p(0.5) == 1);
  CHECK(p(1.0) == 2);
  CHECK(p(1.5) == 2);
  CHECK(p(2.0) == 3);
  CHECK(p(50.0) == 3);
  CHECK_THROWS_AS(RateFn::piecewise({1, 2}, {1, 1}), std::invalid_argument);   // must start at 0
  CHECK_THROWS_AS(RateFn::piecewise({0, 0}, {1, 1}), std::invalid_argument);   // must increase
  CHECK_THROWS_AS(RateFn::piecewise({0, 1}, {1, -1}), std::invalid_argument);  // positive values

  RateFn s = RateFn::sinusoid(3.0, 2.0, 0.5, 0.5);
  for (double t = 0; t < 10; t += 0.37) {
    CHECK(s(t) >= 0.5);
    CHECK(s(t) <= 2.0);
  }
  CHECK_THROWS_AS(RateFn::sinusoid(1.0, 1.0, 0.0, 1.5), std::invalid_argument);
}

TEST_CASE("integration matches the closed-form birth/death solution") {
  EGraph g = load_fixture("birth_death.crn");
  RateSchedule sched = constant_schedule(g, {0.5, 0.5});
  Trajectory traj = integrate(g, sched, {2.0}, 10.0, 1e-8);

  REQUIRE(traj.status == IntegrationStatus::Ok);
  REQUIRE(traj.times.size() == 201);
  REQUIRE(traj.states.size() == 201);
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(traj.states[0][0] == 2.0);

  for (size_t i = 0; i < traj.times.size(); i += 20) {
    double expect = riccati(2.0, traj.times[i]);
    CHECK(traj.states[i][0] == doctest::Approx(expect).epsilon(1e-6));
  }
  CHECK(traj.states.back()[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tightening rtol reduces the error") {
  EGraph g = load_fixture("birth_death.crn");
  RateSchedule sched = constant_schedule(g, {0.5, 0.5});
  auto max_error = [&](double t_end, double rtol) {
    Trajectory t = integrate(g, sched, {3.0}, t_end, rtol);
    double worst = 0;
    for (size_t i = 0; i < t.times.size(); ++i)
      worst = std::max(worst, std::abs(t.states[i][0] - riccati(3.0, t.times[i])));
    return worst;
  };
  // A long horizon makes the record grid coarse enough (spacing 0.2) that the
  // error controller, not the grid, limits the step.
  double coarse = max_error(40.0, 1e-3);
  double mid = max_error(40.0, 1e-5);
  double fine = max_error(40.0, 1e-7);
  CHECK(coarse <= 10 * 1e-3);
  CHECK(mid <= coarse / 10);
  CHECK(fine <= mid / 10);
  // On a short horizon the grid spacing 0.02 caps the step, so even a loose
  // tolerance lands far below it.
  CHECK(max_error(4.0, 1e-4) < 1e-7);
}

TEST_CASE("linear interconversion conserves its compatibility class") {
  EGraph g = parse_network(
      "species A B\n"
      "rxn A <-> B\n");
  RateSchedule sched = constant_schedule(g, {1.0, 1.0});
  Trajectory traj = integrate(g, sched, {2.0, 1.0}, 5.0, 1e-8);
  REQUIRE(traj.status == IntegrationStatus::Ok);

  // A(t) = (3 + e^{-2t}) / 2 exactly.
  for (size_t i = 0; i < traj.times.size(); i += 25) {
    double expect = (3.0 + std::exp(-2.0 * traj.times[i])) / 2.0;
    CHECK(traj.states[i][0] == doctest::Approx(expect).epsilon(1e-6));
    CHECK(traj.states[i][0] + traj.states[i][1] == doctest::Approx(3.0).epsilon(1e-9));
  }

  PersistenceReport rep = persistence_report(traj, g);
  CHECK(rep.max_class_residual <= 10 * traj.rtol * (1 + 3.0));
  CHECK(rep.flagged.empty());
  CHECK(rep.min_overall == doctest::Approx(1.0).epsilon(1e-6));  // B(t) rises from 1
}

TEST_CASE("decay keeps states positive and flags near-extinct species") {
  EGraph g = parse_network(
      "species X\n"
      "rxn X -> 0\n");
  Trajectory traj = integrate(g, constant_schedule(g, {1.0}), {1.0}, 30.0, 1e-8);
  REQUIRE(traj.status == IntegrationStatus::Ok);
  for (const auto& s : traj.states) CHECK(s[0] > 0.0);

  double expect = std::exp(-30.0);
  CHECK(traj.states.back()[0] / expect == doctest::Approx(1.0).epsilon(1e-4));

  PersistenceReport rep = persistence_report(traj, g);
  CHECK(rep.min_overall == doctest::Approx(expect).epsilon(1e-3));
  REQUIRE(rep.flagged.size() == 1);
  CHECK(rep.flagged[0] == 0);
  CHECK(rep.species_min[0] == rep.min_overall);
}

TEST_CASE("finite-time blow-up ends with a step underflow, keeping the prefix") {
  // dx/dt = k x^2 from the edge 2X -> 3X; x(t) = 1/(1-t) explodes at t = 1.
  EGraph g = parse_network(
      "species X\n"
      "rxn 2 X -> 3 X\n");
  Trajectory traj = integrate(g, constant_schedule(g, {1.0}), {1.0}, 2.0, 1e-8);
  CHECK(traj.status == IntegrationStatus::StepUnderflow);
  REQUIRE(!traj.times.empty());
  CHECK(traj.times.back() < 2.0);
  CHECK(traj.times.back() > 0.9);
  for (const auto& s : traj.states) CHECK(std::isfinite(s[0]));

  // The recorded prefix still matches the closed form.
  for (size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] > 0.95) break;
    CHECK(traj.states[i][0] == doctest::Approx(1.0 / (1.0 - traj.times[i])).epsilon(1e-5));
  }
}

TEST_CASE("time-varying rates modulate the equilibrium") {
  EGraph g = load_fixture("birth_death.crn");
  // Piecewise birth rate: high for t < 5, low afterwards; death rate fixed.
  RateSchedule sched{RateFn::piecewise({0, 5}, {4.0, 0.25}), RateFn::constant(1.0)};
  Trajectory traj = integrate(g, sched, {1.0}, 40.0, 1e-8);
  REQUIRE(traj.status == IntegrationStatus::Ok);
  // Long-run equilibrium solves 2k1 = 2k2 x^2, so x -> sqrt(0.25) = 0.5.
  CHECK(traj.states.back()[0] == doctest::Approx(0.5).epsilon(1e-5));

  RateSchedule wavy{RateFn::sinusoid(1.0, 3.0, 0.0, 0.5), RateFn::constant(1.0)};
  Trajectory osc = integrate(g, wavy, {1.0}, 10.0, 1e-8);
  REQUIRE(osc.status == IntegrationStatus::Ok);
  for (const auto& s : osc.states) {
    CHECK(s[0] > 0.3);
    CHECK(s[0] < 2.0);  // trapped between the corner equilibria sqrt(1/2), sqrt(2)
  }
}

TEST_CASE("integration input validation") {
  EGraph g = load_fixture("birth_death.crn");
  RateSchedule sched = constant_schedule(g, {1.0, 1.0});
  CHECK_THROWS_AS(integrate(g, sched, {-1.0}, 1.0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integrate(g, sched, {1.0}, -1.0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integrate(g, sched, {1.0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(g, RateSchedule{}, {1.0}, 1.0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(constant_schedule(g, {1.0}), std::invalid_argument);
}

TEST_CASE("csv emission") {
  EGraph g = parse_network(
      "species A B\n"
      "rxn A <-> B\n");
  Trajectory traj = integrate(g, constant_schedule(g, {1.0, 1.0}), {2.0, 1.0}, 1.0, 1e-8);
  std::ostringstream out;
  write_csv(out, traj);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,x1,x2");
  int rows = 0;
  std::string row;
  double first_a = 0;
  while (std::getline(in, row)) {
    if (rows == 0) {
      std::istringstream cells(row);
      std::string t, a;
      std::getline(cells, t, ',');
      std::getline(cells, a, ',');
      CHECK(std::stod(t) == 0.0);
      first_a = std::stod(a);
    }
    ++rows;
  }
  CHECK(rows == static_cast<int>(traj.times.size()));
  CHECK(first_a == 2.0);
}
