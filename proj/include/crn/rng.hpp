#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace crn {

// SplitMix64. Bit-identical streams on every platform, so seeded reports
// are byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool flip() { return (next() & 1) != 0; }

  double gaussian() {
    double u1 = 1.0 - uniform();  // (0,1], keeps the log finite
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  std::vector<double> unit_vector(int n) {
    std::vector<double> v(n);
    for (;;) {
      double s = 0;
      for (int i = 0; i < n; ++i) {
        v[i] = gaussian();
        s += v[i] * v[i];
      }
      if (s > 1e-12) {
        double inv = 1.0 / std::sqrt(s);
        for (auto& c : v) c *= inv;
        return v;
      }
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace crn
