#pragma once

#include <cstdint>
#include <vector>

#include "primod/prime_level.hpp"

namespace primod::oracle {

/// Brute-force ground truth for tests and the verify command. Shares no
/// code with the reconstruction and enumeration paths.

inline constexpr std::uint64_t kDefaultMemoryBound = 100'000'000;

/// Classic sieve of Eratosthenes over 0..limit.
class SieveTable {
 public:
  /// Throws BudgetError when limit < 2 or limit > bound.
  explicit SieveTable(std::uint64_t limit, std::uint64_t bound = kDefaultMemoryBound);

  std::uint64_t limit() const noexcept { return limit_; }

  /// k must be at most limit.
  bool is_prime(std::uint64_t k) const;

  /// All primes up to limit, ascending.
  std::vector<std::uint64_t> primes() const;

  /// Number of primes in the inclusive range [lo, hi].
  std::uint64_t prime_count(std::uint64_t lo, std::uint64_t hi) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> is_prime_;
};

inline SieveTable sieve(std::uint64_t limit) { return SieveTable(limit); }

/// Primality by plain trial division; used to cross-check the sieve.
bool is_prime_trial(std::uint64_t k);

/// All k in [1, P) with gcd(k, P) = 1, ascending, by direct gcd per k.
/// Throws BudgetError when the primorial exceeds the bound.
std::vector<std::uint64_t> coprime_list(const PrimeLevel& level,
                                        std::uint64_t bound = kDefaultMemoryBound);

}  // namespace primod::oracle
