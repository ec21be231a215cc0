#include "supercong/congruences.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "supercong/primes.hpp"

namespace supercong {

namespace {

// Sums are allowed up to 10^6 terms; a little slack for the rhs sum.
constexpr unsigned long kMaxTruncation = 10'000'000;

const std::vector<CongruenceFamily>& registry() {
  using T = Truncation;
  static const std::vector<CongruenceFamily> families = {
      {"F1-full", SumId::S1, -5, 1, 3, T::Full, {}},
      {"F1-half", SumId::S1, -5, 1, 3, T::Half, {}},
      {"F2-full", SumId::S2, -1, 1, 3, T::Full, {}},
      {"F2-half", SumId::S2, -1, 1, 3, T::Half, {}},
      {"F3-full", SumId::S3, 5, 2, 5, T::Full, {}},
      {"F3-half", SumId::S3, 5, 2, 4, T::Half, {}},
      {"F4-full", SumId::S4, std::nullopt, 2, 5, T::Full, {}},
      {"F4-half", SumId::S4, std::nullopt, 2, 4, T::Half, {}},
      {"F5-full", SumId::S5, -3, 1, 3, T::Full, {}},
      {"F6-full", SumId::S6, -2, 1, 3, T::Full, {{3, 1}}},
  };
  return families;
}

Integer prime_power(std::uint64_t p, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
  return out;
}

}  // namespace

std::string_view truncation_name(Truncation mode) {
  return mode == Truncation::Full ? "full" : "half";
}

bool CongruenceFamily::is_exception(std::uint64_t p, unsigned s) const {
  return std::find(exceptions.begin(), exceptions.end(), std::pair{p, s}) != exceptions.end();
}

std::span<const CongruenceFamily> builtin_families() { return registry(); }

const CongruenceFamily& find_family(std::string_view id) {
  for (const auto& family : registry()) {
    if (family.id == id) return family;
  }
  throw std::invalid_argument("unknown congruence family: " + std::string(id));
}

unsigned long truncation_length(Truncation mode, std::uint64_t p, unsigned s) {
  Integer n = prime_power(p, s);
  if (mode == Truncation::Half) n = (n + 1) / 2;
  if (n > kMaxTruncation) {
    throw std::invalid_argument("truncation length " + n.get_str() + " exceeds the supported bound");
  }
  return n.get_ui();
}

CongruenceOutcome check_case(const CongruenceFamily& family, std::uint64_t p, unsigned s) {
  return check_case_in(family, p, s, family.modulus_multiplier * s);
}

CongruenceOutcome check_case_in(const CongruenceFamily& family, std::uint64_t p, unsigned s,
                                unsigned exponent) {
  return check_case_with(family, sum_spec(family.sum), p, s, exponent);
}

CongruenceOutcome check_case_with(const CongruenceFamily& family, const SumSpec& spec,
                                  std::uint64_t p, unsigned s, unsigned exponent) {
  if (s == 0) throw std::invalid_argument("check_case: s must be >= 1");
  const RingDescriptor ring(p, exponent);

  const unsigned long n_lhs = truncation_length(family.mode, p, s);
  const unsigned long n_rhs = truncation_length(family.mode, p, s - 1);

  const Residue lhs = sum_mod(spec, n_lhs, ring);
  const int symbol = family.legendre_arg ? legendre(*family.legendre_arg, p) : 1;
  const Residue factor(ring, symbol * prime_power(p, family.p_power));
  const Residue rhs = factor * sum_mod(spec, n_rhs, ring);

  const unsigned excess = (lhs - rhs).valuation();
  return CongruenceOutcome{
      .family = family.id,
      .p = p,
      .s = s,
      .n_lhs = n_lhs,
      .n_rhs = n_rhs,
      .ring = ring,
      .lhs = lhs,
      .rhs = rhs,
      .excess = excess,
      .holds = excess == exponent,
      .expected_exception = family.is_exception(p, s),
      .symbol_zero = symbol == 0,
  };
}

std::vector<CongruenceOutcome> run_sweep(std::span<const CongruenceFamily> families,
                                         std::uint64_t p_max, unsigned s_max, unsigned jobs) {
  if (p_max < 3) throw std::invalid_argument("run_sweep: p_max must be >= 3");

  struct Case {
    const CongruenceFamily* family;
    std::uint64_t p;
    unsigned s;
  };
  std::vector<Case> cases;
  const auto primes = odd_primes_up_to(p_max);
  for (const auto& family : families) {
    for (auto p : primes) {
      for (unsigned s = 1; s <= s_max; ++s) cases.push_back({&family, p, s});
    }
  }

  std::vector<std::optional<CongruenceOutcome>> slots(cases.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        slots[i] = check_case(*cases[i].family, cases[i].p, cases[i].s);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned workers = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(cases.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CongruenceOutcome> outcomes;
  outcomes.reserve(slots.size());
  for (auto& slot : slots) outcomes.push_back(std::move(*slot));
  return outcomes;
}

bool aggregate_verdict(std::span<const CongruenceOutcome> outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CongruenceOutcome& o) { return o.as_expected() || o.is_anomaly(); });
}

std::vector<std::string> base_consistency(std::span<const SumSpec> specs) {
  static constexpr std::array<long, 6> kBaseValues = {10, 2, 300, 672, 13, 32};
  std::vector<std::string> mismatches;
  for (const auto& spec : specs) {
    const Rational value = sum_exact(spec, 1);
    const long expected = kBaseValues.at(static_cast<std::size_t>(spec.id));
    if (value != expected) {
      mismatches.push_back(std::string(sum_name(spec.id)) + "(1) = " + value.get_str() +
                           ", expected " + std::to_string(expected));
    }
  }
  return mismatches;
}

}  // namespace supercong
