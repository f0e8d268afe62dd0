#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Exact parse of a decimal literal ("-2.3", "0.25", "3", "1e-2") or a
// fraction literal ("-23/10"). Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& s);

// Canonical text form: integer when denominator is 1, shortest exact decimal
// when the denominator is 2^a 5^b, "p/q" in lowest terms otherwise.
// rat_from_string(rat_to_string(r)) == r for every r.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

// Exact value of the double (doubles are dyadic rationals). Rejects NaN/inf.
Rat rat_from_double(double v);

// Nearest multiple of 2^-64, with |v| < 1e-300 flushed to zero. Keeps LP
// coefficient sizes bounded when floating-point data enters exact arithmetic.
Rat rat_quantize(double v);

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec vsub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vsub: dimension mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Integer vector with coordinate gcd 1, same direction as v. With
// canonical_sign the first nonzero coordinate is made positive, collapsing
// v and -v to one representative.
RatVec primitive(const RatVec& v, bool canonical_sign);

std::vector<double> to_doubles(const RatVec& v);

double norm2(const std::vector<double>& v);
double norm_inf(const std::vector<double>& v);

}  // namespace crn
