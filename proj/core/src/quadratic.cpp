#include "supercong/quadratic.hpp"

#include <stdexcept>

#include "supercong/sequences.hpp"

namespace supercong {

namespace {

void require_same_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.radicand() != y.radicand()) {
    throw std::invalid_argument("quadratic numbers from different fields: sqrt " +
                                std::to_string(x.radicand()) + " vs sqrt " +
                                std::to_string(y.radicand()));
  }
}

Integer as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw ArithmeticError(std::string(what) + " is not an integer");
  return q.get_num();
}

}  // namespace

QuadraticNumber::QuadraticNumber(int d, Rational a, Rational b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d != 5 && d != 6) throw std::invalid_argument("radicand must be 5 or 6");
  a_.canonicalize();
  b_.canonicalize();
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return {x.d_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return {x.d_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return {x.d_, x.a_ * y.a_ + x.d_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadraticNumber operator*(const Rational& s, const QuadraticNumber& x) {
  return {x.d_, s * x.a_, s * x.b_};
}

std::string QuadraticNumber::to_string() const {
  std::string out = a_.get_str();
  if (sgn(b_) >= 0) {
    out += " + " + b_.get_str();
  } else {
    out += " - " + Rational(-b_).get_str();
  }
  return out + "*sqrt(" + std::to_string(d_) + ")";
}

QuadraticNumber conjugate(const QuadraticNumber& x) {
  return {x.radicand(), x.rational_part(), -x.surd_part()};
}

Rational norm(const QuadraticNumber& x) {
  return x.rational_part() * x.rational_part() -
         x.radicand() * x.surd_part() * x.surd_part();
}

Rational trace(const QuadraticNumber& x) { return 2 * x.rational_part(); }

QuadraticNumber inverse(const QuadraticNumber& x) {
  const Rational n = norm(x);
  // d is not a square, so the norm vanishes only at zero.
  if (sgn(n) == 0) throw ArithmeticError("inverse of zero in a quadratic field");
  return Rational(1 / n) * conjugate(x);
}

QuadraticNumber pow(const QuadraticNumber& x, long k) {
  QuadraticNumber base = k < 0 ? inverse(x) : x;
  unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  QuadraticNumber result(x.radicand(), 1);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

QuadraticNumber golden_ratio() { return {5, Rational(1, 2), Rational(1, 2)}; }

QuadraticNumber rho() { return {6, 5, -2}; }

QuadraticNumber rho_inverse() { return {6, 5, 2}; }

Integer u_closed_form(unsigned long n) {
  const QuadraticNumber x = pow(rho_inverse(), 2 * static_cast<long>(n));
  const QuadraticNumber diff = x - conjugate(x);
  const QuadraticNumber u = diff * inverse(QuadraticNumber(6, 0, 40));
  if (!u.is_rational()) throw ArithmeticError("U_n closed form is not rational");
  return as_integer(u.rational_part(), "U_n");
}

Integer v_closed_form(unsigned long n) {
  const QuadraticNumber x = pow(rho_inverse(), 2 * static_cast<long>(n));
  const QuadraticNumber v = Rational(1, 2) * (x + conjugate(x));
  if (!v.is_rational()) throw ArithmeticError("V_n closed form is not rational");
  return as_integer(v.rational_part(), "V_n");
}

std::vector<std::string> check_structural_identities(unsigned long uv_limit,
                                                     unsigned long phi_limit) {
  std::vector<std::string> failures;

  const QuadraticNumber r = rho();
  const QuadraticNumber one(6, 1);
  if (!(one - 10 * r + r * r == QuadraticNumber(6, 0))) {
    failures.emplace_back("rho is not a root of 1 - 10t + t^2");
  }
  if (!(r * rho_inverse() == one)) failures.emplace_back("rho * (5 + 2 sqrt 6) != 1");

  SecondOrderStream u_stream(companion_spec(Companion::U));
  SecondOrderStream v_stream(companion_spec(Companion::V));
  const QuadraticNumber step = pow(rho_inverse(), 2);
  QuadraticNumber power(6, 1);
  for (unsigned long n = 0; n <= uv_limit; ++n) {
    // U_n, V_n from the running power (5+2√6)^{2n} = V_n + 20 U_n √6.
    const bool u_ok = power.surd_part() == Rational(20 * u_stream.value());
    const bool v_ok = power.rational_part() == Rational(v_stream.value());
    if (!u_ok || !v_ok) {
      failures.push_back("U/V closed form disagrees with recurrence at n=" + std::to_string(n));
      break;
    }
    power = power * step;
    u_stream.advance();
    v_stream.advance();
  }
  if (u_closed_form(uv_limit) != companion_terms(Companion::U, uv_limit + 1).back() ||
      v_closed_form(uv_limit) != companion_terms(Companion::V, uv_limit + 1).back()) {
    failures.push_back("U/V closed form disagrees with recurrence at n=" + std::to_string(uv_limit));
  }

  const QuadraticNumber phi = golden_ratio();
  QuadraticNumber phi_power(5, 1);
  for (unsigned long m = 0; m <= phi_limit; ++m) {
    auto [f, l] = fib_lucas(m);
    if (!(phi_power == QuadraticNumber(5, Rational(l, 2), Rational(f, 2)))) {
      failures.push_back("phi^m != (L_m + F_m sqrt 5)/2 at m=" + std::to_string(m));
      break;
    }
    phi_power = phi_power * phi;
  }

  return failures;
}

}  // namespace supercong
