#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "primod/bigint.hpp"
#include "primod/prime_level.hpp"
#include "primod/residue_tuple.hpp"

namespace primod {

/// Multiplicative inverse of a modulo the prime p, in [1, p), by extended
/// Euclid. Throws NoInverseError when a is divisible by p.
std::uint64_t mod_inverse(const BigInt& a, std::uint64_t p);

/// Reconstruction weights of a level: coefficients[i] is the unique integer
/// in (0, P) congruent to 1 mod p_{i+1} and to 0 mod every other level
/// prime. These are the values the unary tuples map back to.
class CrtBasis {
 public:
  explicit CrtBasis(LevelPtr level);

  const PrimeLevel& level() const noexcept { return *level_; }
  const LevelPtr& level_ptr() const noexcept { return level_; }

  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }

  /// Coefficient at a 1-based position.
  const BigInt& coefficient(std::size_t position) const;

 private:
  LevelPtr level_;
  std::vector<BigInt> coefficients_;
};

using BasisPtr = std::shared_ptr<const CrtBasis>;

/// Basis for the level, computed once per level and cached. Safe for
/// concurrent callers.
BasisPtr crt_basis(const LevelPtr& level);

/// Maps a tuple back to its canonical integer: (sum of t_i * v_i) mod P.
/// Inverse of to_residues on [0, P). Throws LevelMismatchError when tuple
/// and basis levels differ.
CanonicalInteger reconstruct(const ResidueTuple& t, const CrtBasis& basis);

/// Residues of the reconstructed value modulo the next `extra` primes beyond
/// the level, appended to the tuple's own residues: a sequence of length
/// n + extra. Unique for the tuple because the reconstructed value is below
/// the primorial. `extra` must be at least 1.
std::vector<Residue> extend_residues(const ResidueTuple& t, const CrtBasis& basis,
                                     std::size_t extra);

}  // namespace primod
