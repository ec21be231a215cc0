#pragma once

// Brute-force reference implementations for tests. Nothing here goes through
// the streaming or p-adic code paths under test.

#include <gmpxx.h>

#include <cstdint>

#include "supercong/truncated_sums.hpp"

namespace supercong::oracle {

inline mpz_class naive_binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    num *= n + 1 - i;
    den *= i;
  }
  return num / den;
}

// Plain iteration of a_{m+1} = a_m + a_{m-1}.
inline mpz_class naive_fibonacci_like(mpz_class a, mpz_class b, unsigned long n) {
  for (unsigned long i = 0; i < n; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline mpz_class naive_fib(unsigned long n) { return naive_fibonacci_like(0, 1, n); }
inline mpz_class naive_lucas(unsigned long n) { return naive_fibonacci_like(2, 1, n); }

// U_n, V_n from their defining power (5 + 2 sqrt 6)^{2n} = V_n + 20 U_n sqrt 6,
// multiplied out in integer pairs.
inline std::pair<mpz_class, mpz_class> naive_uv(unsigned long n) {
  mpz_class a = 1;  // rational part
  mpz_class b = 0;  // coefficient of sqrt 6
  for (unsigned long i = 0; i < 2 * n; ++i) {
    mpz_class na = 5 * a + 12 * b;
    mpz_class nb = 2 * a + 5 * b;
    a = na;
    b = nb;
  }
  return {b / 20, a};
}

inline mpz_class naive_apery(unsigned long n) {
  mpz_class total = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    mpz_class t = naive_binom(n, k) * naive_binom(n + k, k);
    total += t * t;
  }
  return total;
}

inline mpq_class naive_kernel(KernelId id, unsigned long n) {
  switch (id) {
    case KernelId::K1: {
      mpz_class c = naive_binom(2 * n, n);
      mpz_class den = 1;
      den <<= 12 * n;
      mpq_class out(c * c * c, den);
      out.canonicalize();
      return out;
    }
    case KernelId::K2: {
      mpz_class c = naive_binom(2 * n, n);
      mpz_class num = c * c * c * c * naive_binom(3 * n, n);
      if (n % 2 == 1) num = -num;
      mpz_class den = 1;
      den <<= 6 * n;
      mpq_class out(num, den);
      out.canonicalize();
      return out;
    }
    case KernelId::K3:
      return naive_apery(n);
  }
  return 0;
}

// The n-th summand straight from the definition.
inline mpq_class naive_term(const SumSpec& spec, unsigned long n) {
  mpz_class first;
  mpz_class second;
  switch (spec.kernel) {
    case KernelId::K1:
      first = naive_fib(8 * n);
      second = naive_lucas(8 * n);
      break;
    case KernelId::K2:
      first = naive_fib(15 * n);
      second = naive_lucas(15 * n);
      break;
    case KernelId::K3: {
      auto [u, v] = naive_uv(n);
      first = u;
      second = v;
      break;
    }
  }
  mpz_class weight = 0;
  mpz_class power = 1;
  for (const auto& c : spec.coeffs) {
    weight += power * (c.f * first + c.l * second);
    power *= n;
  }
  mpq_class out = naive_kernel(spec.kernel, n) * mpq_class(weight);
  out.canonicalize();
  return out;
}

inline mpq_class naive_sum(const SumSpec& spec, unsigned long length) {
  mpq_class total = 0;
  for (unsigned long n = 0; n < length; ++n) total += naive_term(spec, n);
  total.canonicalize();
  return total;
}

// q mod m for a rational with denominator prime to m.
inline mpz_class naive_reduce(const mpq_class& q, const mpz_class& m) {
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t());
  mpz_class r = q.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace supercong::oracle
