#include "crn/lp.hpp"

namespace crn {

namespace {

class Tableau {
 public:
  // Columns: split/plain structural vars, then slacks, then artificials.
  // Rows are equations with rhs >= 0 throughout.
  std::vector<RatVec> t;     // m x (ncols + 1), last entry rhs
  std::vector<int> basis;    // basic column per row
  int ncols = 0;
  int first_artificial = -1;  // -1 while none exist

  Rat& rhs(int i) { return t[i][ncols]; }

  void pivot(int r, int e) {
    Rat inv = t[r][e];
    for (auto& v : t[r]) v /= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][e] == 0) continue;
      Rat f = t[i][e];
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = e;
  }

  // Bland: entering = lowest-index improving column, leaving = lowest basic
  // index among minimum ratios. cost is indexed over all columns.
  // Returns false when the objective is unbounded above.
  bool run(const RatVec& cost, bool ban_artificials) {
    const int m = static_cast<int>(t.size());
    for (;;) {
      RatVec y(m);
      for (int i = 0; i < m; ++i) y[i] = cost[basis[i]];
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (ban_artificials && first_artificial >= 0 && j >= first_artificial) break;
        Rat red = cost[j];
        for (int i = 0; i < m; ++i)
          if (y[i] != 0 && t[i][j] != 0) red -= y[i] * t[i][j];
        if (red > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const int n = p.n;
  const int m = static_cast<int>(p.rows.size());
  for (const auto& r : p.rows)
    if (static_cast<int>(r.a.size()) != n) throw std::invalid_argument("solve_lp: row dimension mismatch");
  if (static_cast<int>(p.c.size()) != n) throw std::invalid_argument("solve_lp: objective dimension mismatch");

  std::vector<bool> nonneg = p.nonneg.empty() ? std::vector<bool>(n, false) : p.nonneg;
  if (static_cast<int>(nonneg.size()) != n) throw std::invalid_argument("solve_lp: nonneg size mismatch");

  // Column map: nonneg var -> one column, free var -> (plus, minus) pair.
  std::vector<int> col_plus(n), col_minus(n, -1);
  int nc = 0;
  for (int j = 0; j < n; ++j) {
    col_plus[j] = nc++;
    if (!nonneg[j]) col_minus[j] = nc++;
  }
  int slack_base = nc;
  int n_slack = 0;
  for (const auto& r : p.rows)
    if (r.rel != Rel::Eq) ++n_slack;
  nc += n_slack;

  Tableau tab;
  tab.ncols = nc;
  tab.t.assign(m, RatVec(nc + 1, Rat(0)));
  tab.basis.assign(m, -1);

  int slack_idx = slack_base;
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    for (int j = 0; j < n; ++j) {
      tab.t[i][col_plus[j]] = row.a[j];
      if (col_minus[j] >= 0) tab.t[i][col_minus[j]] = -row.a[j];
    }
    if (row.rel != Rel::Eq) {
      slack_col[i] = slack_idx++;
      tab.t[i][slack_col[i]] = (row.rel == Rel::Le) ? 1 : -1;
    }
    tab.t[i][nc] = row.b;
    if (tab.t[i][nc] < 0)
      for (int j = 0; j <= nc; ++j) tab.t[i][j] = -tab.t[i][j];
  }

  // Rows whose slack survived with +1 start basic; the rest get artificials.
  std::vector<int> needs_artificial;
  for (int i = 0; i < m; ++i) {
    if (slack_col[i] >= 0 && tab.t[i][slack_col[i]] == 1)
      tab.basis[i] = slack_col[i];
    else
      needs_artificial.push_back(i);
  }
  if (!needs_artificial.empty()) {
    tab.first_artificial = tab.ncols;
    int extra = static_cast<int>(needs_artificial.size());
    for (int i = 0; i < m; ++i) {
      Rat r = tab.t[i][tab.ncols];
      tab.t[i].resize(tab.ncols + extra + 1, Rat(0));
      tab.t[i][tab.ncols + extra] = r;
    }
    tab.ncols += extra;
    for (int k = 0; k < extra; ++k) {
      int i = needs_artificial[k];
      tab.t[i][tab.first_artificial + k] = 1;
      tab.basis[i] = tab.first_artificial + k;
    }

    RatVec phase1(tab.ncols, Rat(0));
    for (int j = tab.first_artificial; j < tab.ncols; ++j) phase1[j] = -1;
    tab.run(phase1, false);  // bounded below by 0, cannot be unbounded
    Rat infeas = 0;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= tab.first_artificial) infeas += tab.rhs(i);
    if (infeas != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Degenerate artificials: pivot out where possible, else the row is an
    // all-zero (redundant) equation and stays inert.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < tab.first_artificial) continue;
      for (int j = 0; j < tab.first_artificial; ++j)
        if (tab.t[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
    }
  }

  RatVec cost(tab.ncols, Rat(0));
  for (int j = 0; j < n; ++j) {
    cost[col_plus[j]] = p.c[j];
    if (col_minus[j] >= 0) cost[col_minus[j]] = -p.c[j];
  }
  if (!tab.run(cost, true)) return {LpStatus::Unbounded, Rat(0), {}};

  RatVec colval(tab.ncols, Rat(0));
  for (int i = 0; i < m; ++i) colval[tab.basis[i]] = tab.rhs(i);
  RatVec x(n);
  Rat value = 0;
  for (int j = 0; j < n; ++j) {
    x[j] = colval[col_plus[j]];
    if (col_minus[j] >= 0) x[j] -= colval[col_minus[j]];
    value += p.c[j] * x[j];
  }
  return {LpStatus::Optimal, value, x};
}

}  // namespace crn
