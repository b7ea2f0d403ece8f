#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ffdyn {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t m);

/// Factorization of m >= 1 by trial division, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t m);

/// Number of positive divisors of m, prod (e_i + 1). Throws on m == 0.
std::uint64_t divisor_count(std::uint64_t m);

/// Number of squarefree divisors of m, 2^omega(m). Throws on m == 0.
std::uint64_t squarefree_divisor_count(std::uint64_t m);

/// Returns (p, k) with q == p^k, k >= 1, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Sieve of Eratosthenes; all primes strictly below `bound`.
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

/// Every prime power q with lo <= q <= hi, ascending. Built by sieving primes
/// up to hi and taking their powers.
std::vector<std::uint64_t> prime_powers_in_range(std::uint64_t lo, std::uint64_t hi);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace ffdyn
