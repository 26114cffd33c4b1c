#include <doctest.h>

#include <cmath>

#include "dslab/rational.hpp"

using namespace dslab;

TEST_CASE("rational parsing and printing round-trips") {
  CHECK(rational_to_string(parse_rational("2/5")) == "2/5");
  CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_to_string(parse_rational("7")) == "7");
  CHECK(parse_rational("1/3") + parse_rational("2/5") == Rat(11, 15));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
}

TEST_CASE("integer powers and roots") {
  CHECK(rat_pow_int(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow_int(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_pow_int(Rat(5), 0) == 1);
  bool exact = false;
  CHECK(floor_root(Int(27), 3, &exact) == 3);
  CHECK(exact);
  CHECK(floor_root(Int(26), 3, &exact) == 2);
  CHECK(!exact);
}

TEST_CASE("exact rational powers") {
  CHECK(*rat_pow_exact(Rat(4, 9), Rat(1, 2)) == Rat(2, 3));
  CHECK(*rat_pow_exact(Rat(8, 27), Rat(-1, 3)) == Rat(3, 2));
  CHECK(!rat_pow_exact(Rat(2), Rat(1, 2)).has_value());
  CHECK(*rat_pow_exact(Rat(-8), Rat(1, 3)) == Rat(-2));
  CHECK(!rat_pow_exact(Rat(-4), Rat(1, 2)).has_value());
}

TEST_CASE("fixed-point powers are exact on perfect powers and monotone") {
  // k^{-1/2}
  CHECK(fixed_point_power(1, -1, 2) == Rat(1));
  CHECK(fixed_point_power(4, -1, 2) == Rat(1, 2));
  CHECK(fixed_point_power(9, -1, 2) == Rat(1, 3));
  Rat prev = fixed_point_power(1, -1, 2);
  for (unsigned long k = 2; k <= 200; ++k) {
    Rat cur = fixed_point_power(k, -1, 2);
    CHECK(cur <= prev);
    CHECK(cur > 0);
    double err = std::abs(to_double(cur) - 1.0 / std::sqrt(double(k)));
    CHECK(err < 1e-15);
    prev = cur;
  }
}

TEST_CASE("Pow2Value canonicalization and arithmetic") {
  Pow2Value a(Rat(12));  // 3 * 2^2
  CHECK(a.mantissa() == 3);
  CHECK(a.exp2() == 2);
  Pow2Value b(Rat(3, 8));  // 3 * 2^-3
  CHECK(b.exp2() == -3);
  CHECK((a * b) == Pow2Value(Rat(9, 2)));
  CHECK((a / b) == Pow2Value(Rat(32)));
  CHECK(*a.add(b) == Pow2Value(Rat(99, 8)));
  CHECK(*b.add(a) == Pow2Value(Rat(99, 8)));
  CHECK(*a.add(Pow2Value(Rat(-12))) == Pow2Value());
  CHECK(a.add(Pow2Value(Rat(1), Rat(1, 2))) == std::nullopt);

  // 2^{-3n/2} style values compare exactly
  Pow2Value h3 = Pow2Value::pow2(Rat(-9, 2));
  Pow2Value h4 = Pow2Value::pow2(Rat(-6));
  CHECK(h4 < h3);
  CHECK(h3 < Pow2Value(Rat(1)));
  CHECK(*h3.pow(Rat(2)) == Pow2Value::pow2(Rat(-9)));
  CHECK(h3.as_rational() == std::nullopt);
  CHECK(*h4.as_rational() == Rat(1, 64));

  // mixed-sign ordering
  CHECK(Pow2Value(Rat(-5)) < Pow2Value(Rat(0)));
  CHECK(Pow2Value(Rat(0)) < Pow2Value(Rat(1, 1024)));
  CHECK(Pow2Value(Rat(-1)) < Pow2Value(Rat(-1, 2)));
}

TEST_CASE("Pow2Value powers with fractional exponents") {
  Pow2Value v(Rat(9, 16));
  CHECK(*v.pow(Rat(1, 2)) == Pow2Value(Rat(3, 4)));
  CHECK(Pow2Value(Rat(3)).pow(Rat(1, 2)) == std::nullopt);
  Pow2Value d(Rat(4));
  CHECK(*d.pow(Rat(-3, 2)) == Pow2Value::pow2(Rat(-3)));
}
