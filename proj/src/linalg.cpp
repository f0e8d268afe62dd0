#include "crn/linalg.hpp"

namespace crn {

int rref(RatMat& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

RatMat nullspace(const RatMat& m, int ncols) {
  RatMat a = m;
  std::vector<int> pivots;
  int rank = rref(a, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(ncols, Rat(0));
    v[c] = 1;
    for (int i = 0; i < rank; ++i) v[pivots[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace::Subspace(int ambient, RatMat spanning) : ambient_(ambient) {
  for (const auto& v : spanning)
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("Subspace: dimension mismatch");
  rref(spanning);
  for (auto& row : spanning)
    if (!is_zero(row)) basis_.push_back(std::move(row));
}

bool Subspace::contains(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  if (is_zero(v)) return true;
  RatMat m = basis_;
  m.push_back(v);
  return rref(m) == dim();
}

Subspace Subspace::orthogonal_complement() const {
  if (basis_.empty()) {
    RatMat id(ambient_, RatVec(ambient_, Rat(0)));
    for (int i = 0; i < ambient_; ++i) id[i][i] = 1;
    return Subspace(ambient_, id);
  }
  return Subspace(ambient_, nullspace(basis_, ambient_));
}

}  // namespace crn
