#include "dslab/rational.hpp"

#include <cctype>
#include <cmath>

namespace dslab {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '+') {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& value) { return value.get_str(); }

double to_double(const Rat& value) { return value.get_d(); }

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat pow2_rat(long e) {
  Rat r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Rat rat_pow_int(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
  if (e < 0) {
    if (out == 0) throw std::domain_error("0 raised to a negative power");
    out = 1 / out;
  }
  out.canonicalize();
  return out;
}

Int floor_root(const Int& x, unsigned long v, bool* exact) {
  if (x < 0) throw std::domain_error("floor_root of a negative value");
  if (v == 0) throw std::domain_error("floor_root with zero index");
  Int r;
  int is_exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), v);
  if (exact) *exact = (is_exact != 0);
  return r;
}

std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& exponent) {
  long u = 0, v = 1;
  if (!exponent.get_num().fits_slong_p() || !exponent.get_den().fits_ulong_p())
    return std::nullopt;
  u = exponent.get_num().get_si();
  v = static_cast<long>(exponent.get_den().get_ui());
  if (base == 0) {
    if (u < 0) return std::nullopt;
    return u == 0 ? Rat(1) : Rat(0);
  }
  bool negative = base < 0;
  if (negative && v % 2 == 0) return std::nullopt;
  Rat p = rat_pow_int(rat_abs(base), u);
  bool num_exact = false, den_exact = false;
  Int rn = floor_root(p.get_num(), static_cast<unsigned long>(v), &num_exact);
  Int rd = floor_root(p.get_den(), static_cast<unsigned long>(v), &den_exact);
  if (!num_exact || !den_exact) return std::nullopt;
  Rat out(rn, rd);
  out.canonicalize();
  // (-b)^(u/v) with odd v keeps the sign of b^u.
  if (negative && u % 2 != 0) out = -out;
  return out;
}

Rat fixed_point_power(unsigned long k, long u, unsigned long v,
                      unsigned frac_bits) {
  if (k == 0) throw std::domain_error("fixed_point_power with k = 0");
  if (v == 0) throw std::domain_error("fixed_point_power with v = 0");
  if (u == 0 || k == 1) return Rat(1);
  Int kz(static_cast<unsigned long>(k));
  bool kroot_exact = false;
  Int t = floor_root(kz, v, &kroot_exact);
  if (kroot_exact) return rat_pow_int(Rat(t), u);  // k = t^v, value t^u exact

  unsigned long mag = static_cast<unsigned long>(u < 0 ? -u : u);
  Int kpow;
  mpz_pow_ui(kpow.get_mpz_t(), kz.get_mpz_t(), mag);
  Int scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
               static_cast<unsigned long>(frac_bits) * v);
  Int arg;
  if (u < 0) {
    mpz_fdiv_q(arg.get_mpz_t(), scale.get_mpz_t(), kpow.get_mpz_t());
  } else {
    arg = kpow * scale;
  }
  Int root = floor_root(arg, v);
  Rat out(root, Int(1));
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), frac_bits);
  out.canonicalize();
  return out;
}

void Pow2Value::assign(const Rat& mantissa, const Rat& exp2) {
  if (mantissa == 0) {
    mantissa_ = 0;
    exp2_ = 0;
    return;
  }
  mantissa_ = mantissa;
  exp2_ = exp2;
  const mpz_class num = ::abs(mantissa_.get_num());
  const mpz_class den = mantissa_.get_den();
  unsigned long tn = mpz_scan1(num.get_mpz_t(), 0);
  unsigned long td = mpz_scan1(den.get_mpz_t(), 0);
  if (tn > 0) {
    mpq_div_2exp(mantissa_.get_mpq_t(), mantissa_.get_mpq_t(), tn);
    exp2_ += static_cast<long>(tn);
  }
  if (td > 0) {
    mpq_mul_2exp(mantissa_.get_mpq_t(), mantissa_.get_mpq_t(), td);
    exp2_ -= static_cast<long>(td);
  }
  mantissa_.canonicalize();
  exp2_.canonicalize();
}

std::optional<Rat> Pow2Value::as_rational() const {
  if (is_zero()) return Rat(0);
  if (exp2_.get_den() != 1) return std::nullopt;
  if (!exp2_.get_num().fits_slong_p()) return std::nullopt;
  return mantissa_ * pow2_rat(exp2_.get_num().get_si());
}

double Pow2Value::to_double() const {
  if (is_zero()) return 0.0;
  return mantissa_.get_d() * std::exp2(exp2_.get_d());
}

std::string Pow2Value::to_string() const {
  return rational_to_string(mantissa_) + "*2^(" + rational_to_string(exp2_) +
         ")";
}

Pow2Value Pow2Value::operator*(const Pow2Value& other) const {
  if (is_zero() || other.is_zero()) return Pow2Value();
  return Pow2Value(mantissa_ * other.mantissa_, exp2_ + other.exp2_);
}

Pow2Value Pow2Value::operator/(const Pow2Value& other) const {
  if (other.is_zero()) throw std::domain_error("Pow2Value division by zero");
  if (is_zero()) return Pow2Value();
  return Pow2Value(mantissa_ / other.mantissa_, exp2_ - other.exp2_);
}

Pow2Value Pow2Value::abs() const {
  Pow2Value out = *this;
  if (out.mantissa_ < 0) out.mantissa_ = -out.mantissa_;
  return out;
}

std::optional<Pow2Value> Pow2Value::add(const Pow2Value& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  Rat delta = exp2_ - other.exp2_;
  if (delta.get_den() != 1 || !delta.get_num().fits_slong_p())
    return std::nullopt;
  long shift = delta.get_num().get_si();
  Rat sum = mantissa_ * pow2_rat(shift) + other.mantissa_;
  return Pow2Value(sum, other.exp2_);
}

std::optional<Pow2Value> Pow2Value::pow(const Rat& exponent) const {
  if (is_zero()) {
    if (exponent <= 0) return std::nullopt;
    return Pow2Value();
  }
  if (!exponent.get_num().fits_slong_p() ||
      !exponent.get_den().fits_ulong_p()) {
    return std::nullopt;
  }
  auto m = rat_pow_exact(mantissa_, exponent);
  if (!m) return std::nullopt;
  return Pow2Value(*m, exp2_ * exponent);
}

bool Pow2Value::operator==(const Pow2Value& other) const {
  return mantissa_ == other.mantissa_ && exp2_ == other.exp2_;
}

bool Pow2Value::operator<(const Pow2Value& other) const {
  int sa = sign(), sb = other.sign();
  if (sa != sb) return sa < sb;
  if (sa == 0) return false;
  if (exp2_ == other.exp2_) return mantissa_ < other.mantissa_;
  // Compare |m_a| * 2^(ta - tb) against |m_b|, raising to the exponent
  // denominator to clear the fractional power of two.
  Rat delta = exp2_ - other.exp2_;
  if (!delta.get_den().fits_ulong_p() || !delta.get_num().fits_slong_p())
    throw std::overflow_error("Pow2Value comparison exponent too large");
  unsigned long d = delta.get_den().get_ui();
  long c = delta.get_num().get_si();
  Rat lhs = rat_pow_int(rat_abs(mantissa_), static_cast<long>(d));
  if (c >= 0) {
    mpq_mul_2exp(lhs.get_mpq_t(), lhs.get_mpq_t(),
                 static_cast<unsigned long>(c));
  } else {
    mpq_div_2exp(lhs.get_mpq_t(), lhs.get_mpq_t(),
                 static_cast<unsigned long>(-c));
  }
  Rat rhs = rat_pow_int(rat_abs(other.mantissa_), static_cast<long>(d));
  bool abs_less = lhs < rhs;
  return sa > 0 ? abs_less : rhs < lhs;
}

}  // namespace dslab
