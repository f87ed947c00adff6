#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "primod/bigint.hpp"

namespace primod {

/// Default guard against accidentally huge levels. Conversion and basis
/// computation stay cheap far beyond this; enumeration has its own budget.
inline constexpr unsigned kDefaultLevelCap = 16;

class PrimeLevel;
using LevelPtr = std::shared_ptr<const PrimeLevel>;

/// The first n primes together with their product. Immutable after
/// construction; shared freely across threads.
class PrimeLevel {
 public:
  unsigned n() const noexcept { return static_cast<unsigned>(primes_.size()); }

  /// All n primes in increasing order, p_1 = 2 first.
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }

  /// i-th prime of the level, position in 1..n.
  std::uint64_t prime(std::size_t position) const;

  /// Exact product of the level's primes.
  const BigInt& primorial() const noexcept { return primorial_; }

 private:
  friend LevelPtr make_level(unsigned n, unsigned cap);

  explicit PrimeLevel(std::vector<std::uint64_t> primes);

  std::vector<std::uint64_t> primes_;
  BigInt primorial_;
};

/// Builds the level for the first n primes. Throws LevelRangeError for n = 0
/// or n > cap.
LevelPtr make_level(unsigned n, unsigned cap = kDefaultLevelCap);

/// Smallest prime greater than the level's largest prime, p_{n+1}.
std::uint64_t next_prime(const PrimeLevel& level);

/// Smallest prime strictly greater than k, by trial division.
std::uint64_t next_prime_after(std::uint64_t k);

/// True when the two levels describe the same prime set.
inline bool same_level(const PrimeLevel& a, const PrimeLevel& b) noexcept {
  return a.n() == b.n();
}

}  // namespace primod
