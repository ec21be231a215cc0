#pragma once

// Residue-ring arithmetic modulo p^K for an odd prime p, plus the scaled
// p-adic carrier used to divide exactly inside those rings.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation would leave Z/p^K (non-unit inversion, negative
/// valuation, division by the zero element).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Describes Z/p^K. Cheap to copy; the modulus is shared.
class RingDescriptor {
 public:
  /// Throws std::invalid_argument unless p is an odd prime and K >= 1.
  RingDescriptor(std::uint64_t p, unsigned exponent);

  std::uint64_t prime() const noexcept { return data_->p; }
  unsigned exponent() const noexcept { return data_->exponent; }
  const Integer& modulus() const noexcept { return data_->modulus; }

  /// Canonical representative of x in [0, p^K).
  Integer reduce(const Integer& x) const;
  void reduce_in_place(Integer& x) const;

  /// Same prime, different exponent.
  RingDescriptor with_exponent(unsigned exponent) const { return {prime(), exponent}; }

  /// "p^K"
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) noexcept {
    return a.prime() == b.prime() && a.exponent() == b.exponent();
  }

 private:
  struct Data {
    std::uint64_t p;
    unsigned exponent;
    Integer modulus;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of Z/p^K stored as its canonical representative.
class Residue {
 public:
  Residue(RingDescriptor ring, const Integer& value);
  static Residue zero(RingDescriptor ring) { return {std::move(ring), 0}; }
  static Residue one(RingDescriptor ring) { return {std::move(ring), 1}; }

  const RingDescriptor& ring() const noexcept { return ring_; }
  const Integer& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return sgn(rep_) == 0; }

  /// p-adic valuation of the representative, capped at K (K means zero).
  unsigned valuation() const;

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue& operator+=(const Residue& other);
  Residue& operator*=(const Residue& other);

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_ == b.ring_ && a.rep_ == b.rep_;
  }

 private:
  RingDescriptor ring_;
  Integer rep_;
};

/// Legendre symbol (m/p) for an odd prime p, by Euler's criterion.
int legendre(const Integer& m, std::uint64_t p);

/// u^{-1} mod p^K; throws ArithmeticError when p | u.
Residue inv_mod(const Integer& u, const RingDescriptor& ring);

/// The image of a rational number whose denominator is prime to p.
Residue reduce_rational(const Rational& q, const RingDescriptor& ring);

struct PadicSplit {
  unsigned long valuation;
  Integer unit;  // keeps the sign of the input
};

/// n = p^v * u with p not dividing u. Throws std::invalid_argument for n = 0.
PadicSplit split_padic(const Integer& n, std::uint64_t p);

/// p-adic valuation of a nonzero integer.
unsigned long padic_valuation(const Integer& n, std::uint64_t p);

/// The value p^v * u, with the unit known modulo p^K. Represents its value
/// modulo p^{K+v}; the valuation carries the headroom so the unit width stays
/// fixed at K digits.
class PadicScaled {
 public:
  static PadicScaled zero(RingDescriptor ring);
  static PadicScaled one(RingDescriptor ring);
  static PadicScaled from_integer(RingDescriptor ring, const Integer& n);

  /// Throws std::invalid_argument if p | unit.
  PadicScaled(RingDescriptor ring, unsigned long valuation, const Integer& unit);

  const RingDescriptor& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return is_zero_; }
  unsigned long valuation() const noexcept { return valuation_; }
  const Integer& unit() const noexcept { return unit_; }

  friend PadicScaled operator*(const PadicScaled& a, const PadicScaled& b);
  /// Throws ArithmeticError on a zero divisor or a negative resulting valuation.
  friend PadicScaled operator/(const PadicScaled& a, const PadicScaled& b);
  PadicScaled& operator*=(const PadicScaled& other);
  PadicScaled& operator/=(const PadicScaled& other);
  PadicScaled operator-() const;

  /// p^v * u mod p^K; zero once v >= K.
  Residue to_residue() const;

 private:
  PadicScaled(RingDescriptor ring) : ring_(std::move(ring)) {}

  RingDescriptor ring_;
  bool is_zero_ = true;
  unsigned long valuation_ = 0;
  Integer unit_ = 0;
};

}  // namespace supercong
