#ifndef DSLAB_RATIONAL_HPP
#define DSLAB_RATIONAL_HPP

// Exact arithmetic layer: arbitrary-precision rationals (GMP) plus the
// radical values m*2^t (rational m, rational t) that show up in L_p and
// Hardy norms at fractional exponents.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dslab {

using Rat = mpq_class;
using Int = mpz_class;

// "num/den" or "num"; throws std::invalid_argument on malformed input or
// zero denominator.
Rat parse_rational(const std::string& text);

// Canonical form: "num/den", or just "num" when the denominator is 1.
std::string rational_to_string(const Rat& value);

double to_double(const Rat& value);

Rat rat_abs(const Rat& value);

// 2^e for possibly negative integer e.
Rat pow2_rat(long e);

Rat rat_pow_int(const Rat& base, long e);

// Floor of the v-th root; exact flag set when root^v == x. Requires x >= 0.
Int floor_root(const Int& x, unsigned long v, bool* exact = nullptr);

// base^(num/den) when the result is rational, nullopt otherwise.
// Negative base is accepted only for odd den.
std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& exponent);

// k^(u/v) rounded down to `frac_bits` fractional bits, as an exact rational;
// returns the exact value whenever k is a perfect v-th power. k >= 1.
Rat fixed_point_power(unsigned long k, long u, unsigned long v,
                      unsigned frac_bits = 64);

// Value m * 2^t with rational m and rational t, canonicalized so that the
// mantissa carries no factor of two. Closed under *, /, integer-shift
// addition and rational powers (when representable); ordering is exact.
class Pow2Value {
 public:
  Pow2Value() : mantissa_(0), exp2_(0) {}
  explicit Pow2Value(const Rat& value) { assign(value, Rat(0)); }
  Pow2Value(const Rat& mantissa, const Rat& exp2) { assign(mantissa, exp2); }

  static Pow2Value pow2(const Rat& exp2) { return Pow2Value(Rat(1), exp2); }

  const Rat& mantissa() const { return mantissa_; }
  const Rat& exp2() const { return exp2_; }
  bool is_zero() const { return mantissa_ == 0; }
  int sign() const { return sgn(mantissa_); }

  // Exact iff the exponent is an integer (the value is then plain rational).
  std::optional<Rat> as_rational() const;

  double to_double() const;
  std::string to_string() const;  // "m*2^(t)" diagnostic form

  Pow2Value operator*(const Pow2Value& other) const;
  Pow2Value operator/(const Pow2Value& other) const;
  Pow2Value abs() const;

  // Defined when the exponents differ by an integer.
  std::optional<Pow2Value> add(const Pow2Value& other) const;

  std::optional<Pow2Value> pow(const Rat& exponent) const;

  bool operator==(const Pow2Value& other) const;
  bool operator!=(const Pow2Value& other) const { return !(*this == other); }
  bool operator<(const Pow2Value& other) const;
  bool operator>(const Pow2Value& other) const { return other < *this; }
  bool operator<=(const Pow2Value& other) const { return !(other < *this); }
  bool operator>=(const Pow2Value& other) const { return !(*this < other); }

 private:
  void assign(const Rat& mantissa, const Rat& exp2);

  Rat mantissa_;  // odd numerator and denominator (or 0)
  Rat exp2_;
};

}  // namespace dslab

#endif  // DSLAB_RATIONAL_HPP
