#include "supercong/sequences.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace supercong {

std::pair<Integer, Integer> fib_lucas(unsigned long n) {
  // Invariant: (f, l) = (F_k, L_k) for k = the prefix of n's bits read so far.
  Integer f = 0;
  Integer l = 2;
  unsigned long k = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    f *= l;
    l *= l;
    l += (k % 2 == 0) ? -2 : 2;
    k *= 2;
    if ((n >> bit) & 1UL) {
      Integer next_f = (f + l) / 2;
      l = (5 * f + l) / 2;
      f = std::move(next_f);
      ++k;
    }
  }
  return {std::move(f), std::move(l)};
}

Integer fib(unsigned long n) { return fib_lucas(n).first; }

Integer lucas(unsigned long n) { return fib_lucas(n).second; }

Integer binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

const SecondOrderSpec& companion_spec(Companion which) {
  // Coefficients read off the generating-function denominators
  // 1 - 47t + t^2, 1 - 1364t - t^2 and 1 - 98t + t^2.
  static const std::array<SecondOrderSpec, 6> specs = {{
      {0, 21, 47, -1},        // F_{8n}
      {2, 47, 47, -1},        // L_{8n}
      {0, 610, 1364, 1},      // F_{15n}
      {2, 1364, 1364, 1},     // L_{15n}
      {0, 1, 98, -1},         // U_n
      {1, 49, 98, -1},        // V_n
  }};
  return specs.at(static_cast<std::size_t>(which));
}

std::string_view companion_name(Companion which) {
  switch (which) {
    case Companion::F8: return "f8";
    case Companion::L8: return "l8";
    case Companion::F15: return "f15";
    case Companion::L15: return "l15";
    case Companion::U: return "u";
    case Companion::V: return "v";
  }
  return "?";
}

SecondOrderStream::SecondOrderStream(SecondOrderSpec spec, std::optional<RingDescriptor> ring)
    : spec_(std::move(spec)), ring_(std::move(ring)), current_(spec_.a0), next_(spec_.a1) {
  if (ring_) {
    ring_->reduce_in_place(current_);
    ring_->reduce_in_place(next_);
  }
}

void SecondOrderStream::advance() {
  Integer after = spec_.c1 * next_ + spec_.c0 * current_;
  if (ring_) ring_->reduce_in_place(after);
  current_ = std::move(next_);
  next_ = std::move(after);
  ++index_;
}

std::vector<Integer> companion_terms(Companion which, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  SecondOrderStream stream(companion_spec(which));
  for (std::size_t i = 0; i < count; ++i, stream.advance()) out.push_back(stream.value());
  return out;
}

void AperyStream::advance() {
  const Integer n = index_;
  const Integer n3 = n * n * n;
  Integer next = (34 * n3 + 51 * n * n + 27 * n + 5) * current_ - n3 * previous_;
  const Integer m = n + 1;
  mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), Integer(m * m * m).get_mpz_t());
  previous_ = std::move(current_);
  current_ = std::move(next);
  ++index_;
}

Integer apery(unsigned long n) {
  AperyStream stream;
  while (stream.index() < n) stream.advance();
  return stream.value();
}

Integer apery_by_double_sum(unsigned long n) {
  Integer total = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    const Integer term = binom(n, k) * binom(n + k, k);
    total += term * term;
  }
  return total;
}

std::string_view kernel_name(KernelId id) {
  switch (id) {
    case KernelId::K1: return "K1";
    case KernelId::K2: return "K2";
    case KernelId::K3: return "K3";
  }
  return "?";
}

KernelRatio kernel_ratio(KernelId id, unsigned long n) {
  const long m = static_cast<long>(n);
  KernelRatio r;
  switch (id) {
    case KernelId::K1:
      // (2(2n+1)/(n+1))^3 / 2^12
      r.numerator.assign(3, 2 * (2 * m + 1));
      r.denominator.assign(3, m + 1);
      r.denominator.push_back(4096);
      return r;
    case KernelId::K2:
      // -(2(2n+1)/(n+1))^4 * (3n+1)(3n+2)(3n+3) / ((n+1)(2n+1)(2n+2)) / 2^6
      r.sign = -1;
      r.numerator.assign(4, 2 * (2 * m + 1));
      r.numerator.insert(r.numerator.end(), {3 * m + 1, 3 * m + 2, 3 * m + 3});
      r.denominator.assign(4, m + 1);
      r.denominator.insert(r.denominator.end(), {m + 1, 2 * m + 1, 2 * m + 2, 64});
      return r;
    case KernelId::K3:
      break;
  }
  throw std::invalid_argument("kernel K3 has no first-order term ratio");
}

namespace {

Integer product(const std::vector<long>& factors) {
  Integer out = 1;
  for (long f : factors) out *= f;
  return out;
}

}  // namespace

ExactKernelStream::ExactKernelStream(KernelId id) : id_(id) {}

void ExactKernelStream::advance() {
  if (id_ == KernelId::K3) {
    apery_.advance();
    value_ = apery_.value();
  } else {
    const KernelRatio r = kernel_ratio(id_, index_);
    Rational ratio(r.sign * product(r.numerator), product(r.denominator));
    ratio.canonicalize();
    value_ *= ratio;
  }
  ++index_;
}

ModularKernelStream::ModularKernelStream(KernelId id, RingDescriptor ring)
    : id_(id), ring_(ring), value_(PadicScaled::one(std::move(ring))) {}

void ModularKernelStream::advance() {
  if (id_ == KernelId::K3) {
    apery_.advance();
    value_ = PadicScaled::from_integer(ring_, apery_.value());
  } else {
    const KernelRatio r = kernel_ratio(id_, index_);
    value_ *= PadicScaled::from_integer(ring_, r.sign * product(r.numerator));
    value_ /= PadicScaled::from_integer(ring_, product(r.denominator));
  }
  ++index_;
}

}  // namespace supercong
