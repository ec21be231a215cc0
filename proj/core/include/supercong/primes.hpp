#pragma once

#include <cstdint>
#include <vector>

namespace supercong {

/// All primes <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Odd primes <= limit, ascending.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit);

/// Deterministic trial division; meant for the small primes used here.
bool is_prime(std::uint64_t n);

}  // namespace supercong
