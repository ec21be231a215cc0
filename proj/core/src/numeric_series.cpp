#include "supercong/numeric_series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "supercong/sequences.hpp"
#include "supercong/truncated_sums.hpp"

namespace supercong {

namespace {

constexpr long kGuardBits = 32;

// arccot(x) * 2^bits, truncating each division; the error is at most two
// units per term.
Integer arccot_fixed(unsigned long x, unsigned long bits) {
  Integer unity = 1;
  unity <<= bits;
  const Integer x2 = Integer(x) * x;
  Integer power = unity / x;
  Integer sum = 0;
  for (unsigned long k = 0; sgn(power) != 0; ++k) {
    const Integer term = power / (2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
  }
  return sum;
}

Rational fixed_to_rational(const Integer& mantissa, unsigned long bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational out(mantissa, scale);
  out.canonicalize();
  return out;
}

QuadraticNumber q5(long a, long b) { return {5, a, b}; }

std::vector<SeriesSpec> make_registry() {
  const QuadraticNumber phi = golden_ratio();
  const QuadraticNumber phi_conj = conjugate(phi);
  const QuadraticNumber one5(5, 1);

  std::vector<SeriesSpec> out;
  // Ramanujan's irrational series and its conjugate companion. The
  // coefficient of n is 30 +- 42 sqrt 5; with it, E1 - E2 is sqrt 5 times
  // the S1 summand and E1 + E2 is minus the S2 summand.
  out.push_back({SeriesId::E1, "e1", SeriesKernel::K1, {q5(-1, 5), q5(30, 42)},
                 pow(phi_conj, 8), one5, {32, 1, 1}, 3.5e-4});
  out.push_back({SeriesId::E2, "e2", SeriesKernel::K1, {q5(-1, -5), q5(30, -42)},
                 pow(phi, 8), one5, {-96, 1, 1}, 0.75});
  out.push_back({SeriesId::E3, "e3", SeriesKernel::S1Terms, {one5}, one5, one5,
                 {128, 1, 5}, 0.75});
  out.push_back({SeriesId::E4, "e4", SeriesKernel::S2Terms, {one5}, one5, one5,
                 {64, 1, 1}, 0.75});
  // (1/phi)^{15n} (-1)^n = (phi')^{15n}, which absorbs the sign of K2.
  out.push_back({SeriesId::E8, "e8", SeriesKernel::K2,
                 {Rational(3) * q5(56, -25), Rational(9) * q5(101, -45),
                  Rational(20) * q5(61, -27)},
                 pow(phi_conj, 15), one5, {3, 2, 1}, 0.021, true});
  out.push_back({SeriesId::ECZ, "ecz", SeriesKernel::K3,
                 {QuadraticNumber(6, 4, -1), QuadraticNumber(6, 8)}, pow(rho(), 2), rho(),
                 {1, 1, 2}, 0.36});
  return out;
}

}  // namespace

BigFloat pi_at_precision(long precision_bits) {
  const unsigned long bits = static_cast<unsigned long>(std::max(precision_bits, BigFloat::kMinPrecision) + kGuardBits);
  const Integer pi = 16 * arccot_fixed(5, bits) - 4 * arccot_fixed(239, bits);
  return {precision_bits, fixed_to_rational(pi, bits)};
}

BigFloat pi_oracle(long digits) { return pi_at_precision(bits_for_digits(digits)); }

BigFloat sqrt_at_precision(unsigned long d, long precision_bits) {
  const unsigned long bits = static_cast<unsigned long>(std::max(precision_bits, BigFloat::kMinPrecision) + kGuardBits);
  Integer scaled = d;
  scaled <<= 2 * bits;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return {precision_bits, fixed_to_rational(root, bits)};
}

BigFloat sqrt_oracle(unsigned long d, long digits) {
  return sqrt_at_precision(d, bits_for_digits(digits));
}

std::string ClosedForm::to_string() const {
  std::string out = scale.get_str() + "/(pi";
  if (pi_power != 1) out += "^" + std::to_string(pi_power);
  if (radicand != 1) out += "*sqrt(" + std::to_string(radicand) + ")";
  return out + ")";
}

std::span<const SeriesSpec> builtin_series() {
  static const std::vector<SeriesSpec> registry = make_registry();
  return registry;
}

const SeriesSpec& find_series(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& spec : builtin_series()) {
    if (spec.name == lowered) return spec;
  }
  throw std::invalid_argument("unknown series: " + std::string(name));
}

BigFloat to_bigfloat(const QuadraticNumber& x, long precision_bits) {
  BigFloat out(precision_bits, x.rational_part());
  if (!x.is_rational()) {
    out += BigFloat(precision_bits, x.surd_part()) *
           sqrt_at_precision(static_cast<unsigned long>(x.radicand()), precision_bits);
  }
  return out;
}

struct SeriesTermStream::State {
  SeriesSpec spec;
  long precision;
  std::optional<ExactKernelStream> kernel;
  std::optional<ExactTermStream> terms;
  BigFloat base;
  BigFloat base_power;
  BigFloat prefactor;
  BigFloat root;
  unsigned long index = 0;

  State(const SeriesSpec& s, long bits)
      : spec(s),
        precision(bits),
        base(to_bigfloat(s.base, bits)),
        base_power(bits, 1L),
        prefactor(to_bigfloat(s.prefactor, bits)),
        root(sqrt_at_precision(static_cast<unsigned long>(s.weight.front().radicand()), bits)) {
    switch (s.kernel) {
      case SeriesKernel::K1: kernel.emplace(KernelId::K1); break;
      case SeriesKernel::K2: kernel.emplace(KernelId::K2); break;
      case SeriesKernel::K3: kernel.emplace(KernelId::K3); break;
      case SeriesKernel::S1Terms: terms.emplace(sum_spec(SumId::S1)); break;
      case SeriesKernel::S2Terms: terms.emplace(sum_spec(SumId::S2)); break;
    }
  }

  BigFloat weight() const {
    // Exact polynomial in Q(sqrt d) first, one rounding at the end.
    Rational a = 0;
    Rational b = 0;
    for (std::size_t j = spec.weight.size(); j-- > 0;) {
      a = a * index + spec.weight[j].rational_part();
      b = b * index + spec.weight[j].surd_part();
    }
    BigFloat out(precision, a);
    if (sgn(b) != 0) out += BigFloat(precision, b) * root;
    return out;
  }
};

SeriesTermStream::SeriesTermStream(const SeriesSpec& spec, long precision_bits)
    : state_(std::make_unique<State>(spec, precision_bits)) {}

SeriesTermStream::~SeriesTermStream() = default;
SeriesTermStream::SeriesTermStream(SeriesTermStream&&) noexcept = default;
SeriesTermStream& SeriesTermStream::operator=(SeriesTermStream&&) noexcept = default;

unsigned long SeriesTermStream::index() const noexcept { return state_->index; }

BigFloat SeriesTermStream::value() const {
  const State& s = *state_;
  BigFloat kernel = s.terms ? BigFloat(s.precision, s.terms->value())
                            : BigFloat(s.precision, s.kernel->value());
  return s.prefactor * kernel * s.weight() * s.base_power;
}

void SeriesTermStream::advance() {
  State& s = *state_;
  if (s.terms) {
    s.terms->advance();
  } else {
    s.kernel->advance();
  }
  s.base_power *= s.base;
  ++s.index;
}

SeriesEvaluation eval_series(const SeriesSpec& spec, long digits) {
  if (digits < 10) throw std::invalid_argument("eval_series: digits must be >= 10");
  const double r = spec.ratio_bound;
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("eval_series: ratio bound must be in (0, 1)");

  const double estimated_terms = static_cast<double>(digits + 10) / -std::log10(r) + 64.0;
  const long precision = bits_for_digits(digits) + 64 +
                         static_cast<long>(std::ceil(std::log2(estimated_terms)));
  const unsigned long max_terms = static_cast<unsigned long>(estimated_terms * 4.0) + 1000;

  const BigFloat target = BigFloat::pow10_neg(precision, digits + 5);
  BigFloat tail_factor(precision, Rational(r) / Rational(1 - r));

  SeriesTermStream stream(spec, precision);
  BigFloat sum(precision);
  std::optional<BigFloat> previous;
  bool settled = false;
  double max_tail_ratio = 0.0;

  for (unsigned long n = 0; n < max_terms; ++n, stream.advance()) {
    const BigFloat term = stream.value();
    sum += term;
    const BigFloat magnitude = term.abs();
    if (previous && !previous->is_zero()) {
      const double ratio = (magnitude / *previous).to_double();
      if (settled && ratio > r) {
        throw std::runtime_error("series " + spec.name + ": term ratio " + std::to_string(ratio) +
                                 " at n=" + std::to_string(n) + " exceeds bound " +
                                 std::to_string(r));
      }
      if (ratio <= r) settled = true;
      if (settled) max_tail_ratio = std::max(max_tail_ratio, ratio);
    }
    if (settled) {
      BigFloat tail = magnitude * tail_factor;
      if (tail < target) {
        return {std::move(sum), n + 1, std::move(tail), precision, max_tail_ratio};
      }
    }
    previous = magnitude;
  }
  throw std::runtime_error("series " + spec.name + ": tail bound did not shrink within " +
                           std::to_string(max_terms) + " terms");
}

BigFloat partial_sum(const SeriesSpec& spec, unsigned long terms, long precision_bits) {
  SeriesTermStream stream(spec, precision_bits);
  BigFloat sum(precision_bits);
  for (unsigned long n = 0; n < terms; ++n, stream.advance()) sum += stream.value();
  return sum;
}

BigFloat closed_form_value(const ClosedForm& limit, long precision_bits) {
  const BigFloat pi = pi_at_precision(precision_bits);
  BigFloat denominator(precision_bits, 1L);
  for (int i = 0; i < limit.pi_power; ++i) denominator *= pi;
  if (limit.radicand != 1) denominator *= sqrt_at_precision(limit.radicand, precision_bits);
  return BigFloat(precision_bits, limit.scale) / denominator;
}

LimitReport verify_limit(const SeriesSpec& spec, long digits) {
  SeriesEvaluation eval = eval_series(spec, digits);
  BigFloat limit = closed_form_value(spec.limit, eval.precision_bits);
  BigFloat error = (eval.value - limit).abs();

  long matched = 0;
  if (error.is_zero()) {
    matched = static_cast<long>(std::floor(static_cast<double>(eval.precision_bits) * std::log10(2.0)));
  } else {
    matched = std::max(0L, static_cast<long>(std::floor(-error.log10_abs())));
  }
  const bool pass = error < BigFloat::pow10_neg(eval.precision_bits, digits - 2);
  return {spec.name, digits,        std::move(eval.value), std::move(limit), std::move(error),
          matched,   eval.terms_used, std::move(eval.tail_bound), pass};
}

std::vector<std::string> check_conjugate_combination(unsigned long n_max) {
  const SeriesSpec& e1 = find_series("e1");
  const SeriesSpec& e2 = find_series("e2");
  const QuadraticNumber sqrt5(5, 0, 1);
  std::vector<std::string> failures;

  auto weight_at = [](const SeriesSpec& spec, unsigned long n) {
    QuadraticNumber w(5, 0);
    for (std::size_t j = spec.weight.size(); j-- > 0;) {
      w = QuadraticNumber(5, n) * w + spec.weight[j];
    }
    return w;
  };

  ExactKernelStream kernel(KernelId::K1);
  ExactTermStream s1(sum_spec(SumId::S1));
  ExactTermStream s2(sum_spec(SumId::S2));
  QuadraticNumber base1(5, 1);
  QuadraticNumber base2(5, 1);
  for (unsigned long n = 0; n <= n_max; ++n) {
    const QuadraticNumber t1 = kernel.value() * (weight_at(e1, n) * base1);
    const QuadraticNumber t2 = kernel.value() * (weight_at(e2, n) * base2);
    if (!(t1 - t2 == sqrt5 * QuadraticNumber(5, s1.value()))) {
      failures.push_back("E1 - E2 != sqrt(5) * S1 term at n=" + std::to_string(n));
      break;
    }
    if (!(t1 + t2 == QuadraticNumber(5, -s2.value()))) {
      failures.push_back("E1 + E2 != -S2 term at n=" + std::to_string(n));
      break;
    }
    kernel.advance();
    s1.advance();
    s2.advance();
    base1 = base1 * e1.base;
    base2 = base2 * e2.base;
  }
  return failures;
}

}  // namespace supercong
