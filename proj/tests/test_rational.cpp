#include "crn/rational.hpp"

#include "crn/rng.hpp"
#include "doctest.h"

using namespace crn;

TEST_CASE("rat_from_string parses decimals, fractions and exponents exactly") {
  CHECK(rat_from_string("-2.3") == Rat(-23, 10));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("3") == 3);
  CHECK(rat_from_string("+3") == 3);
  CHECK(rat_from_string("1e-2") == Rat(1, 100));
  CHECK(rat_from_string("2.5e3") == 2500);
  CHECK(rat_from_string("-23/10") == Rat(-23, 10));
  CHECK(rat_from_string("6/4") == Rat(3, 2));
  CHECK(rat_from_string("0.1") == Rat(1, 10));  // exact, unlike binary floats
  CHECK(rat_from_string("3.1") == Rat(31, 10));
}

TEST_CASE("rat_from_string rejects malformed input") {
  for (const char* bad : {"", "abc", "1.2.3", "1/", "/2", "1//2", "2x", "--1", "1e", ".", "1/0"}) {
    CHECK_THROWS_AS(rat_from_string(bad), std::invalid_argument);
  }
}

TEST_CASE("rat_to_string is canonical and round-trips") {
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(-5)) == "-5");
  CHECK(rat_to_string(Rat(1, 4)) == "0.25");
  CHECK(rat_to_string(Rat(-23, 10)) == "-2.3");
  CHECK(rat_to_string(Rat(1, 3)) == "1/3");
  CHECK(rat_to_string(Rat(-7, 12)) == "-7/12");
  CHECK(rat_to_string(Rat(0)) == "0");

  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    long num = static_cast<long>(rng.below(20001)) - 10000;
    long den = static_cast<long>(rng.below(999)) + 1;
    Rat r(num, den);
    CHECK(rat_from_string(rat_to_string(r)) == r);
  }
}

TEST_CASE("rat_from_double is the exact dyadic value") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-0.75) == Rat(-3, 4));
  CHECK(rat_from_double(3.0) == 3);
  CHECK(rat_from_double(0.1) != Rat(1, 10));  // 0.1 is not dyadic
  CHECK(rat_to_double(rat_from_double(0.1)) == 0.1);
  CHECK_THROWS(rat_from_double(std::numeric_limits<double>::infinity()));
  CHECK_THROWS(rat_from_double(std::numeric_limits<double>::quiet_NaN()));
}

TEST_CASE("rat_quantize lands on the 2^-64 grid and flushes denormal-scale noise") {
  Int grid = Int(1) << 64;
  Rat step = Rat(1, grid);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    double v = rng.uniform(-50, 50);
    Rat q = rat_quantize(v);
    Rat ratio = q / step;
    CHECK(denominator(ratio) == 1);
    CHECK(abs(q - rat_from_double(v)) <= step / 2);
  }
  CHECK(rat_quantize(1e-301) == 0);
  CHECK(rat_quantize(0.0) == 0);
}

TEST_CASE("primitive rescales to coprime integers") {
  RatVec v{Rat(2), Rat(-4), Rat(6)};
  CHECK(primitive(v, false) == RatVec{1, -2, 3});
  RatVec w{Rat(-1, 2), Rat(1, 3)};
  CHECK(primitive(w, false) == RatVec{-3, 2});
  CHECK(primitive(w, true) == RatVec{3, -2});  // first nonzero made positive
  RatVec z{Rat(0), Rat(-5)};
  CHECK(primitive(z, true) == RatVec{0, 1});
}

TEST_CASE("vector helpers") {
  RatVec a{1, 2, 3}, b{4, 5, 6};
  CHECK(dot(a, b) == 32);
  CHECK(vsub(b, a) == RatVec{3, 3, 3});
  CHECK(is_zero(RatVec{0, 0}));
  CHECK(!is_zero(RatVec{0, 1}));
  CHECK(to_doubles(RatVec{Rat(1, 2), Rat(-3)}) == std::vector<double>{0.5, -3.0});
  CHECK(norm2({3, 4}) == doctest::Approx(5));
  CHECK(norm_inf({3, -7, 2}) == 7);
}
