#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"
#include "supercong/congruences.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

TEST(Congruences, Registry) {
  EXPECT_EQ(builtin_families().size(), 10u);
  const auto& f3 = find_family("F3-half");
  EXPECT_EQ(f3.sum, SumId::S3);
  EXPECT_EQ(f3.modulus_multiplier, 4u);
  EXPECT_EQ(f3.p_power, 2u);
  EXPECT_FALSE(find_family("F4-full").legendre_arg.has_value());
  EXPECT_TRUE(find_family("F6-full").is_exception(3, 1));
  EXPECT_FALSE(find_family("F6-full").is_exception(3, 2));
  EXPECT_THROW(find_family("F7-full"), std::invalid_argument);
}

TEST(Congruences, TruncationLengths) {
  EXPECT_EQ(truncation_length(Truncation::Full, 5, 2), 25u);
  EXPECT_EQ(truncation_length(Truncation::Half, 5, 2), 13u);
  EXPECT_EQ(truncation_length(Truncation::Half, 7, 0), 1u);
  EXPECT_EQ(truncation_length(Truncation::Full, 7, 0), 1u);
}

TEST(Congruences, FirstFamilyAtThree) {
  const auto out = check_case(find_family("F1-full"), 3, 1);
  EXPECT_EQ(out.ring.modulus(), 27);
  EXPECT_EQ(out.n_lhs, 3u);
  EXPECT_EQ(out.n_rhs, 1u);
  EXPECT_EQ(out.rhs.rep(), 3);
  EXPECT_EQ(out.lhs.rep(), 3);
  EXPECT_TRUE(out.holds);
  EXPECT_TRUE(out.as_expected());
}

TEST(Congruences, HalfTruncationAtThree) {
  const auto out = check_case(find_family("F2-half"), 3, 1);
  EXPECT_EQ(out.n_lhs, 2u);
  EXPECT_EQ(out.lhs.rep(), 21);
  EXPECT_EQ(out.rhs.rep(), 21);
  EXPECT_TRUE(out.holds);
}

TEST(Congruences, SoleExceptionIsReported) {
  const auto out = check_case(find_family("F6-full"), 3, 1);
  EXPECT_FALSE(out.holds);
  EXPECT_TRUE(out.expected_exception);
  EXPECT_TRUE(out.as_expected());
  EXPECT_EQ(out.lhs.rep(), 24);
  EXPECT_EQ(out.rhs.rep(), 15);
  EXPECT_EQ(out.excess, 2u);

  const std::array<CongruenceFamily, 1> only{find_family("F6-full")};
  const auto sweep = run_sweep(only, 3, 1);
  ASSERT_EQ(sweep.size(), 1u);
  EXPECT_TRUE(aggregate_verdict(sweep));
}

TEST(Congruences, ExceptionThatHoldsIsNotAsExpected) {
  CongruenceFamily family = find_family("F1-full");
  family.exceptions = {{5, 1}};
  const auto out = check_case(family, 5, 1);
  EXPECT_TRUE(out.holds);
  EXPECT_TRUE(out.expected_exception);
  EXPECT_FALSE(out.as_expected());
  EXPECT_FALSE(out.is_anomaly());
  const std::vector<CongruenceOutcome> outcomes{out};
  EXPECT_FALSE(aggregate_verdict(outcomes));
}

TEST(Congruences, SweepShapeAndOrder) {
  const std::array<CongruenceFamily, 2> fams{find_family("F1-full"), find_family("F2-full")};
  const auto out = run_sweep(fams, 7, 1);
  ASSERT_EQ(out.size(), 6u);
  EXPECT_EQ(out[0].family, "F1-full");
  EXPECT_EQ(out[0].p, 3u);
  EXPECT_EQ(out[2].p, 7u);
  EXPECT_EQ(out[2].lhs.rep(), 70);
  EXPECT_EQ(out[2].rhs.rep(), 70);
  EXPECT_EQ(out[3].family, "F2-full");
  EXPECT_TRUE(aggregate_verdict(out));

  EXPECT_THROW(run_sweep(fams, 2, 1), std::invalid_argument);
  EXPECT_TRUE(aggregate_verdict(std::vector<CongruenceOutcome>{}));
}

TEST(Congruences, ResultIndependentOfThreadCount) {
  const auto one = run_sweep(builtin_families(), 40, 1, 1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    const auto many = run_sweep(builtin_families(), 40, 1, jobs);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].family, many[i].family);
      EXPECT_EQ(one[i].p, many[i].p);
      EXPECT_EQ(one[i].lhs, many[i].lhs);
      EXPECT_EQ(one[i].rhs, many[i].rhs);
      EXPECT_EQ(one[i].excess, many[i].excess);
    }
  }
}

// The excess is capped by the modulus exponent and reaches it exactly when the
// congruence holds.
TEST(Congruences, ExcessBoundedByModulusExponent) {
  for (const auto& out : run_sweep(builtin_families(), 60, 2, 4)) {
    const unsigned cap = out.ring.exponent();
    EXPECT_LE(out.excess, cap);
    EXPECT_EQ(out.excess == cap, out.holds) << out.family << " p=" << out.p << " s=" << out.s;
  }
}

// Holding mod p^K implies holding mod p^{K-1}.
TEST(Congruences, LiftingIsMonotone) {
  for (const auto& family : builtin_families()) {
    for (auto p : odd_primes_up_to(23)) {
      const auto top = check_case(family, p, 1);
      for (unsigned k = top.ring.exponent(); k-- > 1;) {
        const auto lower = check_case_in(family, p, 1, k);
        EXPECT_EQ(lower.excess, std::min(top.excess, k));
        if (top.holds) {
          EXPECT_TRUE(lower.holds);
        }
      }
    }
  }
}

// Residues from the harness match brute-force sums reduced by hand.
TEST(Congruences, SidesMatchBruteForce) {
  for (const auto& family : builtin_families()) {
    const auto& spec = sum_spec(family.sum);
    for (auto p : odd_primes_up_to(13)) {
      const auto out = check_case(family, p, 1);
      const mpq_class lhs = oracle::naive_sum(spec, out.n_lhs);
      EXPECT_EQ(out.lhs.rep(), oracle::naive_reduce(lhs, out.ring.modulus()))
          << family.id << " p=" << p;
    }
  }
}

TEST(Congruences, SymbolZeroCasesFlagged) {
  EXPECT_TRUE(check_case(find_family("F1-full"), 5, 1).symbol_zero);
  EXPECT_TRUE(check_case(find_family("F5-full"), 3, 1).symbol_zero);
  EXPECT_FALSE(check_case(find_family("F4-full"), 5, 1).symbol_zero);
}

TEST(Congruences, BaseConsistency) {
  EXPECT_TRUE(base_consistency().empty());
  auto specs = std::vector<SumSpec>(builtin_sum_specs().begin(), builtin_sum_specs().end());
  // F_0 = 0, so only the Lucas weight reaches the n = 0 term
  specs[4].coeffs[0].l += 1;
  EXPECT_EQ(base_consistency(specs).size(), 1u);
}

TEST(Congruences, CorruptedWeightsBreakTheCongruence) {
  SumSpec broken = sum_spec(SumId::S2);
  broken.coeffs[1].l += 1;
  const auto& family = find_family("F2-full");
  int failures = 0;
  for (auto p : odd_primes_up_to(31)) {
    if (!check_case_with(family, broken, p, 1, family.modulus_multiplier).holds) ++failures;
  }
  EXPECT_GT(failures, 5);
}
