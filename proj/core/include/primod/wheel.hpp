#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "primod/bigint.hpp"
#include "primod/crt.hpp"
#include "primod/prime_level.hpp"
#include "primod/residue_tuple.hpp"

namespace primod {

/// Ceiling on how many candidates an enumeration may produce unless the
/// caller explicitly lifts it (CLI --force).
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Number of relative-prime tuples at the level: product of (p_i - 1).
BigInt coprime_count(const PrimeLevel& level);

/// Throws BudgetError when the level's coprime count exceeds the budget.
/// An empty budget means unlimited.
void check_enumeration_budget(const PrimeLevel& level,
                              const std::optional<BigInt>& budget);

/// Streams every relative-prime tuple of a level exactly once, in the
/// canonical descending-odometer order: start with every position at its
/// largest nonzero residue (1, 2, 4, ..., p_n - 1), repeatedly decrement the
/// last position, and on hitting 1 reset it and borrow leftward, finishing
/// at (1, 1, ..., 1).
class CoprimeEnumerator {
 public:
  /// Full canonical enumeration of the level.
  static CoprimeEnumerator full(LevelPtr level);

  /// Resumes the canonical order at `start` (inclusive). The tuple must be
  /// relative prime.
  static CoprimeEnumerator resume(ResidueTuple start);

  /// Enumerates only tuples whose first prefix.size() positions equal
  /// `prefix` (each entry nonzero), the remaining positions running the
  /// odometer. Used to partition work across threads; concatenating the
  /// partitions for prefix values p_2-1 down to 1 reproduces the full order.
  static CoprimeEnumerator with_prefix(LevelPtr level, std::vector<Residue> prefix);

  /// Next tuple, or nullopt when exhausted.
  std::optional<ResidueTuple> next();

 private:
  CoprimeEnumerator(LevelPtr level, std::vector<Residue> cursor, std::size_t fixed);

  LevelPtr level_;
  std::vector<Residue> cursor_;
  std::size_t fixed_;
  bool done_ = false;
};

/// Budget-checked canonical enumeration (the stream entry point).
CoprimeEnumerator enumerate_coprime(
    LevelPtr level,
    std::optional<BigInt> budget = BigInt(kDefaultEnumerationBudget));

enum class CandidateKind { unit, prime, coprime_composite };

std::string_view to_string(CandidateKind kind);

/// A relative-prime tuple with its reconstructed value and classification.
/// `guaranteed` marks values in [p_{n+1}, p_{n+1}^2), where coprimality to
/// the first n primes already implies primality.
struct CandidateRecord {
  ResidueTuple tuple;
  BigInt value;
  CandidateKind kind;
  bool guaranteed;
};

/// Classifies one relative-prime tuple. Primality is decided by trial
/// division of the reconstructed value against `oracle_primes`, which must
/// contain every prime up to the square root of the primorial. Throws
/// NotCoprimeError for tuples with a zero residue.
CandidateRecord classify(const ResidueTuple& t, const CrtBasis& basis,
                         std::span<const std::uint64_t> oracle_primes);

/// All candidates whose value is composite, in canonical enumeration order.
/// Every member's smallest prime factor exceeds p_n.
std::vector<CandidateRecord> pm_prime_set(
    const LevelPtr& level, const CrtBasis& basis,
    std::span<const std::uint64_t> oracle_primes,
    std::optional<BigInt> budget = BigInt(kDefaultEnumerationBudget));

/// The counting quantities of a level. band_prime_count covers primes q
/// with p_{n+1} <= q < P; below_primorial_count covers the level's whole
/// value range, i.e. primes q <= P (P itself is prime only at n = 1).
struct CountReport {
  unsigned level_n;
  BigInt phi_count;              // product of (p_i - 1)
  BigInt pm_prime_count;         // coprime composites
  BigInt band_prime_count;       // phi_count - 1 - pm_prime_count
  BigInt below_primorial_count;  // n + phi_count - 1 - pm_prime_count
};

CountReport count_report(
    const LevelPtr& level, const CrtBasis& basis,
    std::span<const std::uint64_t> oracle_primes,
    std::optional<BigInt> budget = BigInt(kDefaultEnumerationBudget));

}  // namespace primod
