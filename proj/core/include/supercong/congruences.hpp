#pragma once

// Supercongruence harness. Each family compares S(N(p, s)) with
// (m/p) * p^e * S(N(p, s-1)) modulo p^{c*s} and records how far the two
// sides agree.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/residue.hpp"
#include "supercong/truncated_sums.hpp"

namespace supercong {

enum class Truncation {
  Full,  // N = p^s
  Half,  // N = (p^s + 1) / 2
};

std::string_view truncation_name(Truncation mode);

struct CongruenceFamily {
  std::string id;
  SumId sum;
  /// Argument m of the Legendre symbol (m/p); empty when no symbol appears.
  std::optional<long> legendre_arg;
  unsigned p_power;
  unsigned modulus_multiplier;
  Truncation mode;
  /// (p, s) pairs at which the congruence is known to fail.
  std::vector<std::pair<std::uint64_t, unsigned>> exceptions;

  bool is_exception(std::uint64_t p, unsigned s) const;
};

std::span<const CongruenceFamily> builtin_families();
/// Throws std::invalid_argument for an unknown id such as "F7-full".
const CongruenceFamily& find_family(std::string_view id);

/// Truncation length for p^s under the given mode; s = 0 gives 1 either way.
unsigned long truncation_length(Truncation mode, std::uint64_t p, unsigned s);

struct CongruenceOutcome {
  std::string family;
  std::uint64_t p = 0;
  unsigned s = 0;
  unsigned long n_lhs = 0;
  unsigned long n_rhs = 0;
  RingDescriptor ring;
  Residue lhs;
  Residue rhs;
  /// v_p(lhs - rhs), capped at the modulus exponent.
  unsigned excess = 0;
  bool holds = false;
  bool expected_exception = false;
  bool symbol_zero = false;

  /// Holds, or fails where a failure is expected.
  bool as_expected() const { return holds != expected_exception; }
  /// Unexpected failure at a prime where the Legendre symbol vanishes. Reported
  /// separately; does not fail the aggregate verdict.
  bool is_anomaly() const { return !as_expected() && symbol_zero && !expected_exception; }
};

CongruenceOutcome check_case(const CongruenceFamily& family, std::uint64_t p, unsigned s);

/// Same case evaluated in a caller-chosen ring of the same prime.
CongruenceOutcome check_case_in(const CongruenceFamily& family, std::uint64_t p, unsigned s,
                                unsigned exponent);

/// As check_case_in, with the sum definition supplied by the caller.
CongruenceOutcome check_case_with(const CongruenceFamily& family, const SumSpec& spec,
                                  std::uint64_t p, unsigned s, unsigned exponent);

/// Every (family, p, s) with odd prime p <= p_max and 1 <= s <= s_max, ordered
/// by family, then p, then s. Cases are spread over `jobs` threads; the result
/// does not depend on the thread count.
std::vector<CongruenceOutcome> run_sweep(std::span<const CongruenceFamily> families,
                                         std::uint64_t p_max, unsigned s_max,
                                         unsigned jobs = 1);

/// True when every outcome is as expected or is an anomaly.
bool aggregate_verdict(std::span<const CongruenceOutcome> outcomes);

/// S_i(1) against the fixture constants 10, 2, 300, 672, 13, 32; returns
/// mismatch descriptions.
std::vector<std::string> base_consistency(std::span<const SumSpec> specs = builtin_sum_specs());

}  // namespace supercong
