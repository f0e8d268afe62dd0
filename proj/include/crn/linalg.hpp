#pragma once

#include "crn/rational.hpp"

namespace crn {

// In-place reduced row echelon form. Returns rank; pivot_cols (if given)
// receives the pivot column of each of the first rank rows.
int rref(RatMat& m, std::vector<int>* pivot_cols = nullptr);

// Basis of {x : m x = 0} in R^ncols, one vector per free column of rref(m).
// Deterministic: canonical rref makes the basis canonical.
RatMat nullspace(const RatMat& m, int ncols);

// Exact linear subspace, kept as canonical rref basis rows.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(int ambient, RatMat spanning);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RatMat& basis() const { return basis_; }
  bool contains(const RatVec& v) const;
  Subspace orthogonal_complement() const;

 private:
  int ambient_;
  RatMat basis_;  // rref rows, zero rows dropped
};

inline Subspace span_of(int ambient, const RatMat& vectors) { return Subspace(ambient, vectors); }

}  // namespace crn
