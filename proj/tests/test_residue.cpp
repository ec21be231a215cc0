#include <gtest/gtest.h>

#include <random>

#include "supercong/primes.hpp"
#include "supercong/residue.hpp"

using namespace supercong;

TEST(Legendre, KnownValues) {
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(10, 5), 0);
  // squares mod 7 are {1, 2, 4}
  EXPECT_EQ(legendre(5, 7), -1);
}

TEST(Legendre, RejectsNonOddPrimes) {
  EXPECT_THROW(legendre(3, 2), std::invalid_argument);
  EXPECT_THROW(legendre(2, 9), std::invalid_argument);
}

TEST(Legendre, EulerCriterionForSmallPrimes) {
  for (auto p : odd_primes_up_to(199)) {
    const Integer mod(static_cast<unsigned long>(p));
    for (unsigned long m = 0; m < p; ++m) {
      Integer power;
      mpz_powm_ui(power.get_mpz_t(), Integer(m).get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
      const int symbol = legendre(Integer(m), p);
      EXPECT_EQ(Integer(symbol + static_cast<long>(p)) % mod, power) << "m=" << m << " p=" << p;
    }
  }
}

TEST(Ring, ConstructionValidation) {
  EXPECT_THROW(RingDescriptor(2, 3), std::invalid_argument);
  EXPECT_THROW(RingDescriptor(9, 3), std::invalid_argument);
  EXPECT_THROW(RingDescriptor(5, 0), std::invalid_argument);
  const RingDescriptor ring(3, 4);
  EXPECT_EQ(ring.modulus(), 81);
  EXPECT_EQ(ring.to_string(), "3^4");
}

TEST(InvMod, KnownValues) {
  EXPECT_EQ(inv_mod(2, RingDescriptor(3, 3)).rep(), 14);
  EXPECT_EQ(inv_mod(1, RingDescriptor(7, 2)).rep(), 1);
  EXPECT_THROW(inv_mod(3, RingDescriptor(3, 2)), ArithmeticError);
}

TEST(InvMod, RandomUnits) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{3u, 6u}, {5u, 5u}, {7u, 4u}, {11u, 3u}, {13u, 3u}, {97u, 6u}}) {
    const RingDescriptor ring(p, k);
    const unsigned long m = ring.modulus().get_ui();
    for (int i = 0; i < 1000; ++i) {
      unsigned long u = rng() % m;
      if (u % p == 0) ++u;
      const Residue inv = inv_mod(Integer(u), ring);
      EXPECT_EQ((Integer(u) * inv.rep()) % ring.modulus(), 1);
    }
  }
}

TEST(SplitPadic, KnownValues) {
  auto a = split_padic(12, 3);
  EXPECT_EQ(a.valuation, 1u);
  EXPECT_EQ(a.unit, 4);
  auto b = split_padic(-7, 7);
  EXPECT_EQ(b.valuation, 1u);
  EXPECT_EQ(b.unit, -1);
  auto c = split_padic(100, 3);
  EXPECT_EQ(c.valuation, 0u);
  EXPECT_EQ(c.unit, 100);
  EXPECT_THROW(split_padic(0, 3), std::invalid_argument);
}

TEST(PadicScaled, KnownValues) {
  const RingDescriptor r34(3, 4);
  const auto prod = PadicScaled(r34, 1, 2) * PadicScaled(r34, 2, 5);
  EXPECT_EQ(prod.valuation(), 3u);
  EXPECT_EQ(prod.unit(), 10);

  const RingDescriptor r33(3, 3);
  EXPECT_TRUE(PadicScaled(r33, 5, 1).to_residue().is_zero());

  const auto quot = PadicScaled(r33, 2, 8) / PadicScaled(r33, 1, 2);
  EXPECT_EQ(quot.valuation(), 1u);
  EXPECT_EQ(quot.unit(), 4);
}

TEST(PadicScaled, ErrorPaths) {
  const RingDescriptor ring(5, 3);
  EXPECT_THROW(PadicScaled(ring, 0, 10), std::invalid_argument);
  EXPECT_THROW(PadicScaled::one(ring) / PadicScaled::zero(ring), ArithmeticError);
  EXPECT_THROW(PadicScaled::one(ring) / PadicScaled(ring, 1, 1), ArithmeticError);
  EXPECT_TRUE((PadicScaled::zero(ring) * PadicScaled(ring, 2, 3)).is_zero());
  EXPECT_THROW(PadicScaled::one(ring) * PadicScaled::one(RingDescriptor(5, 4)),
               std::invalid_argument);
}

// padic_to_residue(split(a) * split(b)) = a*b mod p^K against plain integers.
TEST(PadicScaled, RoundTripAgainstIntegers) {
  std::mt19937_64 rng(1234);
  for (auto [p, k] : {std::pair{3u, 6u}, {5u, 5u}, {7u, 4u}, {11u, 3u}, {13u, 3u}}) {
    const RingDescriptor ring(p, k);
    gmp_randclass draw(gmp_randinit_default);
    draw.seed(static_cast<unsigned long>(rng()));
    for (int i = 0; i < 10'000; ++i) {
      // Bias toward multiples of p so valuations actually vary.
      Integer a = draw.get_z_bits(40) * (i % 3 == 0 ? p * p : 1);
      Integer b = draw.get_z_bits(40) * (i % 5 == 0 ? p : 1);
      if (i % 2 == 1) a = -a;
      const auto pa = PadicScaled::from_integer(ring, a);
      const auto pb = PadicScaled::from_integer(ring, b);
      Integer expected = a * b;
      mpz_mod(expected.get_mpz_t(), expected.get_mpz_t(), ring.modulus().get_mpz_t());
      ASSERT_EQ((pa * pb).to_residue().rep(), expected) << a << " * " << b;
      if (!pb.is_zero() && pb.valuation() <= pa.valuation() && sgn(b) != 0 && a % b == 0) {
        Integer q = a / b;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), ring.modulus().get_mpz_t());
        ASSERT_EQ((pa / pb).to_residue().rep(), q);
      }
    }
  }
}

TEST(Residue, ValuationAndArithmetic) {
  const RingDescriptor ring(3, 4);
  EXPECT_EQ(Residue(ring, 0).valuation(), 4u);
  EXPECT_EQ(Residue(ring, 18).valuation(), 2u);
  EXPECT_EQ(Residue(ring, -1).rep(), 80);
  EXPECT_EQ((Residue(ring, 50) + Residue(ring, 40)).rep(), 9);
  EXPECT_EQ((Residue(ring, 5) - Residue(ring, 7)).rep(), 79);
  EXPECT_EQ(reduce_rational(Rational(1, 2), RingDescriptor(3, 3)).rep(), 14);
}

TEST(Primes, Sieve) {
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(odd_primes_up_to(7), (std::vector<std::uint64_t>{3, 5, 7}));
  EXPECT_TRUE(odd_primes_up_to(2).empty());
  for (auto p : primes_up_to(1000)) EXPECT_TRUE(is_prime(p));
  EXPECT_EQ(primes_up_to(1000).size(), 168u);
}
