#include "supercong/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "supercong/congruences.hpp"
#include "supercong/numeric_series.hpp"
#include "supercong/primes.hpp"
#include "supercong/quadratic.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

using Failures = std::vector<std::string>;

SelftestCheck make_check(std::string name, const std::function<Failures()>& body) {
  SelftestCheck check{std::move(name), false, {}};
  try {
    const Failures failures = body();
    check.pass = failures.empty();
    if (!failures.empty()) {
      check.detail = failures.front();
      if (failures.size() > 1) check.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
    }
  } catch (const std::exception& e) {
    check.detail = std::string("exception: ") + e.what();
  }
  return check;
}

Failures rarefied_consistency() {
  Failures out;
  struct Pair {
    Companion which;
    unsigned long stride;
    bool is_lucas;
  };
  constexpr Pair pairs[] = {{Companion::F8, 8, false},
                            {Companion::L8, 8, true},
                            {Companion::F15, 15, false},
                            {Companion::L15, 15, true}};
  for (const auto& [which, stride, is_lucas] : pairs) {
    SecondOrderStream stream(companion_spec(which));
    for (unsigned long n = 0; n <= 500; ++n, stream.advance()) {
      const Integer expected = is_lucas ? lucas(stride * n) : fib(stride * n);
      if (stream.value() != expected) {
        out.push_back(std::string(companion_name(which)) + " stream differs at n=" + std::to_string(n));
        break;
      }
    }
  }
  return out;
}

Failures cassini() {
  Failures out;
  Integer f_prev = 1;  // F_{-1}
  Integer f = 0;
  Integer l_prev = -1;  // L_{-1}
  Integer l = 2;
  for (unsigned long m = 0; m <= 10'000; ++m) {
    const Integer lhs = l * l - 5 * f * f;
    const long sign = (m % 2 == 0) ? 4 : -4;
    if (lhs != sign) {
      out.push_back("L_m^2 - 5 F_m^2 != 4(-1)^m at m=" + std::to_string(m));
      break;
    }
    Integer f_next = f + f_prev;
    Integer l_next = l + l_prev;
    f_prev = std::move(f);
    f = std::move(f_next);
    l_prev = std::move(l);
    l = std::move(l_next);
  }
  return out;
}

Failures pell_norm() {
  Failures out;
  SecondOrderStream u(companion_spec(Companion::U));
  SecondOrderStream v(companion_spec(Companion::V));
  for (unsigned long n = 0; n <= 500; ++n, u.advance(), v.advance()) {
    if (v.value() * v.value() - 2400 * u.value() * u.value() != 1) {
      out.push_back("V_n^2 - 2400 U_n^2 != 1 at n=" + std::to_string(n));
      break;
    }
  }
  return out;
}

Failures apery_against_double_sum() {
  Failures out;
  AperyStream stream;
  for (unsigned long n = 0; n <= 200; ++n, stream.advance()) {
    if (stream.value() != apery_by_double_sum(n)) {
      out.push_back("Apery recurrence differs from double sum at n=" + std::to_string(n));
      break;
    }
  }
  return out;
}

Failures kernel_streams() {
  Failures out;
  const std::pair<std::uint64_t, unsigned> rings[] = {{3, 6}, {5, 6}, {7, 4}, {11, 3}};
  for (KernelId id : {KernelId::K1, KernelId::K2, KernelId::K3}) {
    for (const auto& [p, k] : rings) {
      const RingDescriptor ring(p, k);
      ExactKernelStream exact(id);
      ModularKernelStream modular(id, ring);
      for (unsigned long n = 0; n <= 300; ++n, exact.advance(), modular.advance()) {
        if (!(modular.value().to_residue() == reduce_rational(exact.value(), ring))) {
          out.push_back(std::string(kernel_name(id)) + " modular stream differs mod " +
                        ring.to_string() + " at n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  return out;
}

Failures legendre_by_squares() {
  Failures out;
  for (auto p : odd_primes_up_to(199)) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::uint64_t m = 0; m < p; ++m) {
      const int expected = m == 0 ? 0 : (squares.contains(m) ? 1 : -1);
      if (legendre(Integer(static_cast<unsigned long>(m)), p) != expected) {
        out.push_back("legendre(" + std::to_string(m) + ", " + std::to_string(p) + ") is wrong");
        return out;
      }
    }
  }
  return out;
}

Failures inverses() {
  Failures out;
  std::mt19937_64 rng(20260205);
  for (const auto& ring : equivalence_grid_rings()) {
    gmp_randclass draw(gmp_randinit_default);
    draw.seed(static_cast<unsigned long>(rng()));
    for (int i = 0; i < 1000; ++i) {
      Integer u = draw.get_z_range(ring.modulus());
      if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ring.prime())) != 0) ++u;
      if (!(Residue(ring, u) * inv_mod(u, ring) == Residue::one(ring))) {
        out.push_back("inverse of " + u.get_str() + " mod " + ring.to_string() + " is wrong");
        return out;
      }
    }
  }
  return out;
}

Failures mini_sweep(std::span<const SumSpec> sums) {
  Failures out;
  for (const auto& family : builtin_families()) {
    const auto spec = std::find_if(sums.begin(), sums.end(),
                                   [&](const SumSpec& s) { return s.id == family.sum; });
    if (spec == sums.end()) continue;
    for (auto p : odd_primes_up_to(13)) {
      const auto outcome = check_case_with(family, *spec, p, 1, family.modulus_multiplier);
      if (!outcome.as_expected()) {
        out.push_back(family.id + " at p=" + std::to_string(p) + " s=1: excess " +
                      std::to_string(outcome.excess) + " of " +
                      std::to_string(family.modulus_multiplier));
      }
    }
  }
  return out;
}

Failures series_limits(long digits) {
  Failures out;
  for (const auto& spec : builtin_series()) {
    const LimitReport report = verify_limit(spec, digits);
    if (!report.pass) {
      out.push_back(spec.name + " matches only " + std::to_string(report.digits_matched) + " digits");
    }
  }
  return out;
}

}  // namespace

bool SelftestReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.pass; });
}

std::vector<RingDescriptor> equivalence_grid_rings() {
  return {{3, 6}, {5, 5}, {7, 4}, {11, 3}, {13, 3}};
}

std::vector<std::string> oracle_equivalence(std::span<const SumSpec> sums,
                                            unsigned long max_length,
                                            std::span<const RingDescriptor> rings) {
  Failures out;
  for (const auto& spec : sums) {
    std::vector<Rational> partial{0};
    ExactTermStream terms(spec);
    for (unsigned long n = 0; n < max_length; ++n, terms.advance()) {
      Rational next = partial.back() + terms.value();
      next.canonicalize();
      partial.push_back(std::move(next));
    }
    for (const auto& ring : rings) {
      for (unsigned long n = 0; n <= max_length; ++n) {
        const Residue modular = sum_mod(spec, n, ring);
        const Residue exact = reduce_rational(partial[n], ring);
        if (modular.rep().get_str() != exact.rep().get_str()) {
          out.push_back(std::string(sum_name(spec.id)) + "(" + std::to_string(n) + ") mod " +
                        ring.to_string() + ": modular " + modular.rep().get_str() + " vs exact " +
                        exact.rep().get_str());
          break;
        }
      }
    }
  }
  return out;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  auto add = [&](std::string name, const std::function<Failures()>& body) {
    report.checks.push_back(make_check(std::move(name), body));
  };
  add("structural_identities", [] { return check_structural_identities(); });
  add("conjugate_combination", [] { return check_conjugate_combination(); });
  add("base_consistency", [&] { return base_consistency(options.sums); });
  add("oracle_equivalence", [&] {
    const auto rings = equivalence_grid_rings();
    return oracle_equivalence(options.sums, options.grid_length, rings);
  });
  add("rarefied_consistency", rarefied_consistency);
  add("cassini", cassini);
  add("pell_norm", pell_norm);
  add("apery_double_sum", apery_against_double_sum);
  add("kernel_streams", kernel_streams);
  add("legendre", legendre_by_squares);
  add("inverses", inverses);
  add("congruences_small_primes", [&] { return mini_sweep(options.sums); });
  if (options.series_digits > 0) {
    add("series_limits", [&] { return series_limits(options.series_digits); });
  }
  return report;
}

}  // namespace supercong
