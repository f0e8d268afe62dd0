#include "crn/rational.hpp"

#include <cctype>
#include <cmath>

namespace crn {

namespace {

Int pow10(unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

// Leading zeros would read as an octal prefix in the Int constructor.
Int int_from_digits(const std::string& d) {
  size_t first = d.find_first_not_of('0');
  if (first == std::string::npos) return Int(0);
  return Int(d.substr(first));
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  size_t i = 0, n = s.size();
  auto fail = [&] { throw std::invalid_argument("bad numeric literal: '" + s + "'"); };
  if (n == 0) fail();

  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i == n) fail();

  // Fraction literal: digits '/' digits.
  size_t slash = s.find('/', i);
  if (slash != std::string::npos) {
    if (slash == i || slash + 1 == n) fail();
    for (size_t k = i; k < n; ++k)
      if (k != slash && !std::isdigit(static_cast<unsigned char>(s[k]))) fail();
    Int num = int_from_digits(s.substr(i, slash - i));
    Int den = int_from_digits(s.substr(slash + 1));
    if (den == 0) fail();
    Rat r(num, den);
    return neg ? Rat(-r) : r;
  }

  // Decimal literal with optional fraction part and exponent.
  std::string digits;
  long scale = 0;  // value = digits * 10^(exp - scale)
  bool any = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++scale;
      any = true;
    }
  }
  if (!any) fail();
  long exp = 0;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) {
      eneg = (s[i] == '-');
      ++i;
    }
    if (i == n) fail();
    long ev = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ev = ev * 10 + (s[i++] - '0');
      if (ev > 100000) fail();
    }
    exp = eneg ? -ev : ev;
  }
  if (i != n) fail();

  Int mant = int_from_digits(digits);
  long net = exp - scale;
  Rat r;
  if (net >= 0)
    r = Rat(mant * pow10(static_cast<unsigned>(net)), 1);
  else
    r = Rat(mant, pow10(static_cast<unsigned>(-net)));
  return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();

  // Count factors of 2 and 5 in the denominator.
  Int rest = den;
  unsigned a = 0, b = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++a;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++b;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  unsigned k = std::max(a, b);
  Int scaled = num * pow10(k) / den;  // exact by construction
  bool neg = scaled < 0;
  std::string d = (neg ? Int(-scaled) : scaled).str();
  if (d.size() <= k) d.insert(0, k - d.size() + 1, '0');
  std::string out = d.substr(0, d.size() - k) + "." + d.substr(d.size() - k);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return neg ? "-" + out : out;
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite");
  if (v == 0.0) return Rat(0);
  int e = 0;
  double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
  Int mant(static_cast<long long>(std::ldexp(m, 53)));
  int shift = e - 53;
  if (shift >= 0) return Rat(mant << shift, 1);
  return Rat(mant, Int(1) << (-shift));
}

Rat rat_quantize(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rat_quantize: non-finite");
  if (std::fabs(v) < 1e-300) return Rat(0);
  if (std::fabs(v) >= std::ldexp(1.0, 960)) throw std::invalid_argument("rat_quantize: magnitude too large");
  Rat exact = rat_from_double(v);
  Int two64 = Int(1) << 64;
  Int scaled_num = numerator(exact) * two64;
  Int den = denominator(exact);
  // Round to nearest (ties away from zero).
  Int half = den / 2;
  Int q;
  if (scaled_num >= 0)
    q = (scaled_num + half) / den;
  else
    q = (scaled_num - half) / den;
  return Rat(q, two64);
}

RatVec primitive(const RatVec& v, bool canonical_sign) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  std::vector<Int> ints(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) return RatVec(v.size(), Rat(0));
  int sign = 1;
  if (canonical_sign) {
    for (const auto& x : ints)
      if (x != 0) {
        if (x < 0) sign = -1;
        break;
      }
  }
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(sign * ints[i] / g, 1);
  return out;
}

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
  return out;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double norm_inf(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

}  // namespace crn
