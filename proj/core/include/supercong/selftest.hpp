#pragma once

// Built-in consistency suite: structural identities, base values, the
// exact/modular equivalence grid and the per-module invariants.

#include <span>
#include <string>
#include <vector>

#include "supercong/truncated_sums.hpp"

namespace supercong {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool pass() const;
};

struct SelftestOptions {
  /// Sum definitions under test; the built-in table unless overridden.
  std::span<const SumSpec> sums = builtin_sum_specs();
  /// Largest N in the exact/modular equivalence grid.
  unsigned long grid_length = 120;
  /// Digits for the series limit checks; 0 skips them.
  long series_digits = 30;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

/// The (p, K) rings of the exact/modular equivalence grid.
std::vector<RingDescriptor> equivalence_grid_rings();

/// Compares sum_mod against the reduced sum_exact for every N <= max_length
/// and every ring; returns mismatch descriptions.
std::vector<std::string> oracle_equivalence(std::span<const SumSpec> sums,
                                            unsigned long max_length,
                                            std::span<const RingDescriptor> rings);

}  // namespace supercong
