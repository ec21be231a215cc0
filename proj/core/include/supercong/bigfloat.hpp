#pragma once

// Fixed-precision binary floating point, a thin RAII layer over MPFR.
// Every result is rounded to nearest at the precision of its left operand.

#include <mpfr.h>

#include <string>

#include "supercong/residue.hpp"

namespace supercong {

class BigFloat {
 public:
  static constexpr long kMinPrecision = 64;

  /// Zero at the given precision (bits); precision is clamped to >= 64.
  explicit BigFloat(long precision_bits);
  BigFloat(long precision_bits, const Integer& value);
  BigFloat(long precision_bits, const Rational& value);
  BigFloat(long precision_bits, long value);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_srcptr raw() const { return value_; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& other);
  BigFloat& operator-=(const BigFloat& other);
  BigFloat& operator*=(const BigFloat& other);
  BigFloat& operator/=(const BigFloat& other);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  BigFloat abs() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Closest double; for ratios and logging only.
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10 |x| as a double; -inf for zero.
  double log10_abs() const;

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  /// 10^{-k} at the given precision.
  static BigFloat pow10_neg(long precision_bits, long k);

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits plus `guard` extra bits.
long bits_for_digits(long digits, long guard = 64);

}  // namespace supercong
