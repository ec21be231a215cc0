#pragma once

// Integer sequences behind the truncated sums: Fibonacci/Lucas and their
// rarefied companions, the U/V pair, Apéry numbers, and the hypergeometric
// kernels streamed term by term.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/residue.hpp"

namespace supercong {

Integer fib(unsigned long n);
Integer lucas(unsigned long n);
/// (F_n, L_n) in one fast-doubling pass.
std::pair<Integer, Integer> fib_lucas(unsigned long n);

/// C(n, k); zero when k > n.
Integer binom(unsigned long n, unsigned long k);

/// a_{n+1} = c1 * a_n + c0 * a_{n-1}
struct SecondOrderSpec {
  Integer a0;
  Integer a1;
  long c1;
  long c0;
};

enum class Companion { F8, L8, F15, L15, U, V };

const SecondOrderSpec& companion_spec(Companion which);
std::string_view companion_name(Companion which);

/// Sequential iterator over a second-order recurrence. With a ring, every term
/// is kept reduced modulo p^K.
class SecondOrderStream {
 public:
  explicit SecondOrderStream(SecondOrderSpec spec,
                             std::optional<RingDescriptor> ring = std::nullopt);

  unsigned long index() const noexcept { return index_; }
  const Integer& value() const noexcept { return current_; }
  void advance();

 private:
  SecondOrderSpec spec_;
  std::optional<RingDescriptor> ring_;
  unsigned long index_ = 0;
  Integer current_;
  Integer next_;
};

/// First `count` terms of a companion sequence.
std::vector<Integer> companion_terms(Companion which, std::size_t count);

/// Apéry numbers by the three-term recurrence
/// (n+1)^3 A_{n+1} = (34n^3 + 51n^2 + 27n + 5) A_n - n^3 A_{n-1}.
class AperyStream {
 public:
  AperyStream() = default;
  unsigned long index() const noexcept { return index_; }
  const Integer& value() const noexcept { return current_; }
  void advance();

 private:
  unsigned long index_ = 0;
  Integer previous_ = 0;
  Integer current_ = 1;
};

Integer apery(unsigned long n);

/// Sum_k C(n,k)^2 C(n+k,k)^2, the defining double sum. Reference only.
Integer apery_by_double_sum(unsigned long n);

enum class KernelId {
  K1,  // C(2n,n)^3 / 2^{12n}
  K2,  // (-1)^n C(2n,n)^4 C(3n,n) / 2^{6n}
  K3,  // Apéry A_n
};

std::string_view kernel_name(KernelId id);

/// Factors of kernel(n+1)/kernel(n) for the hypergeometric kernels; the ratio
/// is sign * prod(numerator) / prod(denominator).
struct KernelRatio {
  int sign = 1;
  std::vector<long> numerator;
  std::vector<long> denominator;
};

/// Throws std::invalid_argument for K3, which has no first-order ratio.
KernelRatio kernel_ratio(KernelId id, unsigned long n);

/// Kernel values as exact rationals.
class ExactKernelStream {
 public:
  explicit ExactKernelStream(KernelId id);

  KernelId id() const noexcept { return id_; }
  unsigned long index() const noexcept { return index_; }
  const Rational& value() const noexcept { return value_; }
  void advance();

 private:
  KernelId id_;
  unsigned long index_ = 0;
  Rational value_ = 1;
  AperyStream apery_;
};

/// Kernel values in Z/p^K, carried as PadicScaled so every division by a
/// multiple of p stays exact.
class ModularKernelStream {
 public:
  ModularKernelStream(KernelId id, RingDescriptor ring);

  KernelId id() const noexcept { return id_; }
  unsigned long index() const noexcept { return index_; }
  const PadicScaled& value() const noexcept { return value_; }
  void advance();

 private:
  KernelId id_;
  RingDescriptor ring_;
  unsigned long index_ = 0;
  PadicScaled value_;
  AperyStream apery_;
};

}  // namespace supercong
