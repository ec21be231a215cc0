#include "supercong/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace supercong {

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, std::max(precision_bits, kMinPrecision));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long precision_bits, const Integer& value) : BigFloat(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long precision_bits, const Rational& value) : BigFloat(precision_bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long precision_bits, long value) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& other) {
  mpfr_add(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& other) {
  mpfr_sub(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& other) {
  mpfr_mul(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& other) {
  mpfr_div(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::abs() const {
  BigFloat out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

double BigFloat::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log10(2.0);
}

std::string BigFloat::to_string(int digits) const {
  digits = std::max(digits, 1);
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  const std::string format = "%." + std::to_string(digits - 1) + "Re";
  mpfr_snprintf(buffer.data(), buffer.size(), format.c_str(), value_);
  return buffer.data();
}

BigFloat BigFloat::pow10_neg(long precision_bits, long k) {
  BigFloat out(precision_bits);
  mpfr_set_ui(out.value_, 10, MPFR_RNDN);
  mpfr_pow_si(out.value_, out.value_, -k, MPFR_RNDN);
  return out;
}

long bits_for_digits(long digits, long guard) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0))) + guard;
}

}  // namespace supercong
