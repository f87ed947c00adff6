#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primod/bigint.hpp"
#include "primod/prime_level.hpp"

namespace primod {

using Residue = std::uint64_t;

/// A residue tuple modulo the level's primes: residues[i] in [0, p_{i+1}).
/// Always stored normalized. Immutable value type; arithmetic returns new
/// tuples.
class ResidueTuple {
 public:
  /// Throws DomainError unless residues has length n with every entry below
  /// its modulus.
  ResidueTuple(LevelPtr level, std::vector<Residue> residues);

  const PrimeLevel& level() const noexcept { return *level_; }
  const LevelPtr& level_ptr() const noexcept { return level_; }

  std::span<const Residue> residues() const noexcept { return residues_; }

  /// Residue at a 1-based position.
  Residue at(std::size_t position) const;

  /// True iff no residue is zero, i.e. the represented value is coprime to
  /// the primorial.
  bool relative_prime() const noexcept;

  /// Renders as "(t1,t2,...,tn)".
  std::string to_string() const;

 private:
  LevelPtr level_;
  std::vector<Residue> residues_;
};

/// Componentwise sum mod each prime. Throws LevelMismatchError for operands
/// of different levels.
ResidueTuple operator+(const ResidueTuple& a, const ResidueTuple& b);

/// Componentwise product mod each prime. Throws LevelMismatchError for
/// operands of different levels.
ResidueTuple operator*(const ResidueTuple& a, const ResidueTuple& b);

/// Componentwise equality. Comparing across levels is a LevelMismatchError
/// rather than false.
bool operator==(const ResidueTuple& a, const ResidueTuple& b);
bool operator!=(const ResidueTuple& a, const ResidueTuple& b);

/// Reduces a nonnegative integer to its residue tuple (k mod p_1, ...,
/// k mod p_n). Values at or above the primorial are accepted and wrap.
/// Negative k throws DomainError.
ResidueTuple to_residues(const BigInt& k, LevelPtr level);

/// Tuple with residue 1 at the given 1-based position and 0 elsewhere.
ResidueTuple unary(LevelPtr level, std::size_t position);

/// Tuple of all zeros (the class of the primorial itself).
ResidueTuple zero_tuple(LevelPtr level);

/// An exact integer in canonical range [0, P) tied to its level. The
/// all-zeros tuple reconstructs to 0; rendering that class as P instead is a
/// presentation choice left to callers.
class CanonicalInteger {
 public:
  CanonicalInteger(BigInt value, LevelPtr level);

  const BigInt& value() const noexcept { return value_; }
  const PrimeLevel& level() const noexcept { return *level_; }
  const LevelPtr& level_ptr() const noexcept { return level_; }

 private:
  BigInt value_;
  LevelPtr level_;
};

}  // namespace primod
