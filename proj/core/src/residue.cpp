#include "supercong/residue.hpp"

#include "supercong/primes.hpp"

namespace supercong {

namespace {

Integer to_integer(std::uint64_t x) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Integer(static_cast<unsigned long>(x));
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  if (!(a == b)) {
    throw std::invalid_argument("residue ring mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

RingDescriptor::RingDescriptor(std::uint64_t p, unsigned exponent) {
  if (p <= 2 || !is_prime(p)) {
    throw std::invalid_argument("ring prime must be an odd prime, got " + std::to_string(p));
  }
  if (exponent == 0) throw std::invalid_argument("ring exponent must be >= 1");
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), exponent);
  data_ = std::make_shared<const Data>(Data{p, exponent, std::move(modulus)});
}

Integer RingDescriptor::reduce(const Integer& x) const {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus().get_mpz_t());
  return r;
}

void RingDescriptor::reduce_in_place(Integer& x) const {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus().get_mpz_t());
}

std::string RingDescriptor::to_string() const {
  return std::to_string(prime()) + "^" + std::to_string(exponent());
}

Residue::Residue(RingDescriptor ring, const Integer& value)
    : ring_(std::move(ring)), rep_(ring_.reduce(value)) {}

unsigned Residue::valuation() const {
  if (is_zero()) return ring_.exponent();
  return static_cast<unsigned>(padic_valuation(rep_, ring_.prime()));
}

Residue Residue::operator-() const { return {ring_, -rep_}; }

Residue operator+(const Residue& a, const Residue& b) {
  require_same_ring(a.ring_, b.ring_);
  return {a.ring_, a.rep_ + b.rep_};
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_ring(a.ring_, b.ring_);
  return {a.ring_, a.rep_ - b.rep_};
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_ring(a.ring_, b.ring_);
  return {a.ring_, a.rep_ * b.rep_};
}

Residue& Residue::operator+=(const Residue& other) {
  require_same_ring(ring_, other.ring_);
  rep_ += other.rep_;
  if (rep_ >= ring_.modulus()) rep_ -= ring_.modulus();
  return *this;
}

Residue& Residue::operator*=(const Residue& other) {
  require_same_ring(ring_, other.ring_);
  rep_ *= other.rep_;
  ring_.reduce_in_place(rep_);
  return *this;
}

int legendre(const Integer& m, std::uint64_t p) {
  if (p <= 2) throw std::invalid_argument("legendre symbol needs an odd prime");
  const Integer modulus = to_integer(p);
  Integer base;
  mpz_mod(base.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  if (sgn(base) == 0) return 0;
  Integer power;
  mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
              modulus.get_mpz_t());
  if (power == 1) return 1;
  if (power == modulus - 1) return -1;
  throw std::invalid_argument("legendre symbol: " + std::to_string(p) + " is not prime");
}

Residue inv_mod(const Integer& u, const RingDescriptor& ring) {
  Integer inverse;
  if (mpz_invert(inverse.get_mpz_t(), u.get_mpz_t(), ring.modulus().get_mpz_t()) == 0) {
    throw ArithmeticError("inv_mod: " + u.get_str() + " is not a unit modulo " + ring.to_string());
  }
  return {ring, inverse};
}

Residue reduce_rational(const Rational& q, const RingDescriptor& ring) {
  Residue num(ring, q.get_num());
  return num * inv_mod(q.get_den(), ring);
}

PadicSplit split_padic(const Integer& n, std::uint64_t p) {
  if (sgn(n) == 0) throw std::invalid_argument("split_padic: zero has no unit part");
  PadicSplit out{0, 0};
  const Integer prime = to_integer(p);
  out.valuation = mpz_remove(out.unit.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  return out;
}

unsigned long padic_valuation(const Integer& n, std::uint64_t p) {
  return split_padic(n, p).valuation;
}

PadicScaled PadicScaled::zero(RingDescriptor ring) { return PadicScaled(std::move(ring)); }

PadicScaled PadicScaled::one(RingDescriptor ring) { return {std::move(ring), 0, 1}; }

PadicScaled PadicScaled::from_integer(RingDescriptor ring, const Integer& n) {
  if (sgn(n) == 0) return zero(std::move(ring));
  auto [v, u] = split_padic(n, ring.prime());
  return {std::move(ring), v, u};
}

PadicScaled::PadicScaled(RingDescriptor ring, unsigned long valuation, const Integer& unit)
    : ring_(std::move(ring)), is_zero_(false), valuation_(valuation), unit_(ring_.reduce(unit)) {
  if (mpz_divisible_ui_p(unit_.get_mpz_t(), static_cast<unsigned long>(ring_.prime())) != 0) {
    throw std::invalid_argument("PadicScaled unit must be prime to p");
  }
}

PadicScaled operator*(const PadicScaled& a, const PadicScaled& b) {
  PadicScaled out = a;
  out *= b;
  return out;
}

PadicScaled operator/(const PadicScaled& a, const PadicScaled& b) {
  PadicScaled out = a;
  out /= b;
  return out;
}

PadicScaled& PadicScaled::operator*=(const PadicScaled& other) {
  require_same_ring(ring_, other.ring_);
  if (is_zero_) return *this;
  if (other.is_zero_) {
    *this = zero(ring_);
    return *this;
  }
  valuation_ += other.valuation_;
  unit_ *= other.unit_;
  ring_.reduce_in_place(unit_);
  return *this;
}

PadicScaled& PadicScaled::operator/=(const PadicScaled& other) {
  require_same_ring(ring_, other.ring_);
  if (other.is_zero_) throw ArithmeticError("PadicScaled: division by zero");
  if (is_zero_) return *this;
  if (other.valuation_ > valuation_) {
    throw ArithmeticError("PadicScaled: quotient has negative valuation");
  }
  valuation_ -= other.valuation_;
  unit_ *= inv_mod(other.unit_, ring_).rep();
  ring_.reduce_in_place(unit_);
  return *this;
}

PadicScaled PadicScaled::operator-() const {
  if (is_zero_) return *this;
  return {ring_, valuation_, -unit_};
}

Residue PadicScaled::to_residue() const {
  if (is_zero_ || valuation_ >= ring_.exponent()) return Residue::zero(ring_);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(ring_.prime()), valuation_);
  return {ring_, scale * unit_};
}

}  // namespace supercong
