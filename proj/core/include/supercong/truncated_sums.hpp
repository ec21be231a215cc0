#pragma once

// The six truncated sums S1..S6: kernel(n) times a weight built from a pair
// of companion sequences, summed over n = 0 .. N-1, either exactly or in
// Z/p^K.

#include <array>
#include <span>
#include <string_view>

#include "supercong/residue.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

enum class SumId { S1, S2, S3, S4, S5, S6 };

inline constexpr std::array<SumId, 6> kAllSums = {SumId::S1, SumId::S2, SumId::S3,
                                                  SumId::S4, SumId::S5, SumId::S6};

std::string_view sum_name(SumId id);

/// Coefficient pair (f, l) contributing f * first + l * second.
struct WeightPair {
  long f = 0;
  long l = 0;
};

/// weight(n) = sum_j n^j * (coeffs[j].f * first(n) + coeffs[j].l * second(n))
struct SumSpec {
  SumId id;
  KernelId kernel;
  Companion first;
  Companion second;
  std::array<WeightPair, 3> coeffs;
};

const SumSpec& sum_spec(SumId id);
std::span<const SumSpec> builtin_sum_specs();

/// The n-th summand, exactly.
Rational term_exact(const SumSpec& spec, unsigned long n);

/// Exact summands in order, one kernel/companion step per advance().
class ExactTermStream {
 public:
  explicit ExactTermStream(const SumSpec& spec);
  unsigned long index() const noexcept { return kernel_.index(); }
  Rational value() const;
  void advance();

 private:
  SumSpec spec_;
  ExactKernelStream kernel_;
  SecondOrderStream first_;
  SecondOrderStream second_;
};

/// sum_{n<N} term(n) as a reduced rational.
Rational sum_exact(const SumSpec& spec, unsigned long length);

/// sum_{n<N} term(n) in Z/p^K, streamed through PadicScaled kernel values
/// with the companions reduced on the fly.
Residue sum_mod(const SumSpec& spec, unsigned long length, const RingDescriptor& ring);

}  // namespace supercong
