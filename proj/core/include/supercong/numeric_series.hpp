#pragma once

// High-precision evaluation of the convergent series for 1/pi and 1/pi^2,
// checked against closed forms built from an independent pi.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/bigfloat.hpp"
#include "supercong/quadratic.hpp"

namespace supercong {

/// pi to `digits` decimal digits via Machin's formula
/// pi = 16 arctan(1/5) - 4 arctan(1/239), in fixed-point integers.
BigFloat pi_oracle(long digits);
BigFloat pi_at_precision(long precision_bits);

/// sqrt(d) to `digits` decimal digits by an integer square root of d * 4^b.
BigFloat sqrt_oracle(unsigned long d, long digits);
BigFloat sqrt_at_precision(unsigned long d, long precision_bits);

enum class SeriesId { E1, E2, E3, E4, E8, ECZ };

enum class SeriesKernel {
  K1,       // C(2n,n)^3 / 2^{12n}
  K2,       // (-1)^n C(2n,n)^4 C(3n,n) / 2^{6n}
  K3,       // Apéry A_n
  S1Terms,  // the summands of S1
  S2Terms,  // the summands of S2
};

/// scale / (pi^pi_power * sqrt(radicand)); radicand 1 means no surd.
struct ClosedForm {
  Rational scale;
  int pi_power;
  unsigned long radicand;

  std::string to_string() const;
};

/// term(n) = prefactor * kernel(n) * weight(n) * base^n
struct SeriesSpec {
  SeriesId id;
  std::string name;
  SeriesKernel kernel;
  std::vector<QuadraticNumber> weight;  // coefficients of n^0, n^1, ...
  QuadraticNumber base;
  QuadraticNumber prefactor;
  ClosedForm limit;
  /// Bound on |term(n+1)/term(n)| once the terms settle into geometric decay.
  double ratio_bound;
  bool conjectural = false;
};

std::span<const SeriesSpec> builtin_series();
/// Case-insensitive lookup by name ("e1", "ecz", ...).
const SeriesSpec& find_series(std::string_view name);

/// Real value of a + b sqrt(d) at the given precision.
BigFloat to_bigfloat(const QuadraticNumber& x, long precision_bits);

/// Terms of a series in order, at a fixed working precision.
class SeriesTermStream {
 public:
  SeriesTermStream(const SeriesSpec& spec, long precision_bits);
  ~SeriesTermStream();
  SeriesTermStream(SeriesTermStream&&) noexcept;
  SeriesTermStream& operator=(SeriesTermStream&&) noexcept;

  unsigned long index() const noexcept;
  BigFloat value() const;
  void advance();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

struct SeriesEvaluation {
  BigFloat value;
  unsigned long terms_used;
  /// Certified bound on the omitted tail.
  BigFloat tail_bound;
  long precision_bits;
  /// Largest |term(n+1)/term(n)| seen after the geometric regime began.
  double max_tail_ratio;
};

/// Sums until |term| * r / (1 - r) < 10^{-(digits+5)}. Throws std::runtime_error
/// if an observed ratio exceeds the series' ratio bound after the decay has set in.
SeriesEvaluation eval_series(const SeriesSpec& spec, long digits);

/// Sum of the first `terms` terms at the given precision.
BigFloat partial_sum(const SeriesSpec& spec, unsigned long terms, long precision_bits);

/// The claimed limit at the given precision.
BigFloat closed_form_value(const ClosedForm& limit, long precision_bits);

struct LimitReport {
  std::string series;
  long digits;
  BigFloat value;
  BigFloat limit;
  BigFloat abs_error;
  long digits_matched;
  unsigned long terms_used;
  BigFloat tail_bound;
  bool pass;
};

/// pass iff |sum - limit| < 10^{-(digits-2)}.
LimitReport verify_limit(const SeriesSpec& spec, long digits);

/// Exact check in Q(sqrt 5) that the E1 and E2 summands combine into the
/// rational S1 and S2 summands: E1 - E2 = sqrt(5) S1 and E1 + E2 = -S2,
/// term by term for n <= n_max. Returns failures.
std::vector<std::string> check_conjugate_combination(unsigned long n_max = 100);

}  // namespace supercong
