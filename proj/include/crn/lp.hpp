#pragma once

#include "crn/rational.hpp"

namespace crn {

enum class Rel { Le, Ge, Eq };

struct LpRow {
  RatVec a;
  Rel rel;
  Rat b;
};

// maximize c.x subject to rows; variable j is free unless nonneg[j].
struct LpProblem {
  int n = 0;
  RatVec c;
  std::vector<LpRow> rows;
  std::vector<bool> nonneg;  // empty means all free
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec x;
};

// Two-phase dense tableau simplex with Bland's rule. Exact, deterministic,
// terminating; sized for the small systems that arise here.
LpResult solve_lp(const LpProblem& p);

}  // namespace crn
