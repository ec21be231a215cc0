#pragma once

// Exact arithmetic in Q(sqrt 5) and Q(sqrt 6).

#include <string>
#include <vector>

#include "supercong/residue.hpp"

namespace supercong {

/// a + b*sqrt(d) with rational a, b and d in {5, 6}. Rationals are kept
/// canonical, so equality is structural.
class QuadraticNumber {
 public:
  /// Throws std::invalid_argument unless d is 5 or 6.
  QuadraticNumber(int d, Rational a, Rational b = 0);

  int radicand() const noexcept { return d_; }
  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadraticNumber operator-() const { return {d_, -a_, -b_}; }
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x);

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "a + b*sqrt(d)"
  std::string to_string() const;

 private:
  int d_;
  Rational a_;
  Rational b_;
};

QuadraticNumber conjugate(const QuadraticNumber& x);
/// a^2 - d*b^2
Rational norm(const QuadraticNumber& x);
/// a + b*sqrt(d) + a - b*sqrt(d)
Rational trace(const QuadraticNumber& x);
/// Throws ArithmeticError for zero.
QuadraticNumber inverse(const QuadraticNumber& x);
/// Binary exponentiation; negative exponents go through inverse().
QuadraticNumber pow(const QuadraticNumber& x, long k);

/// (1 + sqrt 5) / 2
QuadraticNumber golden_ratio();
/// (sqrt 3 - sqrt 2)^2 = 5 - 2 sqrt 6
QuadraticNumber rho();
/// 5 + 2 sqrt 6 = 1 / rho
QuadraticNumber rho_inverse();

/// U_n = ((5+2√6)^{2n} - (5-2√6)^{2n}) / (40√6), evaluated in Q(√6).
Integer u_closed_form(unsigned long n);
/// V_n = ((5+2√6)^{2n} + (5-2√6)^{2n}) / 2
Integer v_closed_form(unsigned long n);

/// Exact checks of the identities tying phi, rho and U/V to the recurrences.
/// Returns a description of each failed identity (empty when all hold).
std::vector<std::string> check_structural_identities(unsigned long uv_limit = 200,
                                                     unsigned long phi_limit = 300);

}  // namespace supercong
