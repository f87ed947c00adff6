#include "primod/crt.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "primod/error.hpp"

namespace primod {

std::uint64_t mod_inverse(const BigInt& a, std::uint64_t p) {
  const std::int64_t reduced = BigInt(a % p).convert_to<std::int64_t>();
  if (reduced == 0) {
    throw NoInverseError("no inverse: " + a.str() + " is divisible by " +
                         std::to_string(p));
  }
  // Extended Euclid on (p, a mod p); p prime, so the gcd is 1.
  std::int64_t old_r = static_cast<std::int64_t>(p), r = reduced;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_t < 0) old_t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(old_t);
}

CrtBasis::CrtBasis(LevelPtr level) : level_(std::move(level)) {
  const BigInt& primorial = level_->primorial();
  coefficients_.reserve(level_->n());
  for (std::uint64_t p : level_->primes()) {
    const BigInt cofactor = primorial / p;
    // cofactor * inv is 1 mod p and 0 mod every other prime; with
    // inv < p it already lies in (0, P), no final reduction needed.
    coefficients_.push_back(cofactor * mod_inverse(cofactor, p));
  }
}

const BigInt& CrtBasis::coefficient(std::size_t position) const {
  if (position < 1 || position > coefficients_.size()) {
    throw DomainError("coefficient position " + std::to_string(position) +
                      " out of range 1.." + std::to_string(coefficients_.size()));
  }
  return coefficients_[position - 1];
}

BasisPtr crt_basis(const LevelPtr& level) {
  static std::mutex cache_mutex;
  static std::map<unsigned, BasisPtr> cache;

  std::lock_guard lock(cache_mutex);
  auto it = cache.find(level->n());
  if (it == cache.end()) {
    it = cache.emplace(level->n(), std::make_shared<const CrtBasis>(level)).first;
  }
  return it->second;
}

CanonicalInteger reconstruct(const ResidueTuple& t, const CrtBasis& basis) {
  if (!same_level(t.level(), basis.level())) {
    throw LevelMismatchError("tuple level " + std::to_string(t.level().n()) +
                             " does not match basis level " +
                             std::to_string(basis.level().n()));
  }
  // Full exact sum first, one reduction at the end.
  BigInt sum = 0;
  const auto coefficients = basis.coefficients();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    sum += t.residues()[i] * coefficients[i];
  }
  return CanonicalInteger(sum % t.level().primorial(), t.level_ptr());
}

std::vector<Residue> extend_residues(const ResidueTuple& t, const CrtBasis& basis,
                                     std::size_t extra) {
  if (extra < 1) {
    throw DomainError("extension needs at least one additional position");
  }
  const BigInt value = reconstruct(t, basis).value();
  std::vector<Residue> extended(t.residues().begin(), t.residues().end());
  extended.reserve(t.level().n() + extra);
  std::uint64_t p = t.level().primes().back();
  for (std::size_t j = 0; j < extra; ++j) {
    p = next_prime_after(p);
    extended.push_back(BigInt(value % p).convert_to<Residue>());
  }
  return extended;
}

}  // namespace primod
