#include "primod/oracle.hpp"

#include <numeric>
#include <string>

#include "primod/error.hpp"

namespace primod::oracle {

SieveTable::SieveTable(std::uint64_t limit, std::uint64_t bound) : limit_(limit) {
  if (limit < 2 || limit > bound) {
    throw BudgetError("sieve limit " + std::to_string(limit) +
                          " outside [2, " + std::to_string(bound) + "]",
                      BigInt(limit), BigInt(bound));
  }
  is_prime_.assign(limit + 1, true);
  is_prime_[0] = is_prime_[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!is_prime_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) is_prime_[j] = false;
  }
}

bool SieveTable::is_prime(std::uint64_t k) const {
  if (k > limit_) {
    throw DomainError("sieve query " + std::to_string(k) + " beyond limit " +
                      std::to_string(limit_));
  }
  return is_prime_[k];
}

std::vector<std::uint64_t> SieveTable::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= limit_; ++k) {
    if (is_prime_[k]) out.push_back(k);
  }
  return out;
}

std::uint64_t SieveTable::prime_count(std::uint64_t lo, std::uint64_t hi) const {
  std::uint64_t count = 0;
  for (std::uint64_t k = std::max<std::uint64_t>(lo, 2); k <= hi && k <= limit_; ++k) {
    if (is_prime_[k]) ++count;
  }
  return count;
}

bool is_prime_trial(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> coprime_list(const PrimeLevel& level, std::uint64_t bound) {
  if (level.primorial() > bound) {
    throw BudgetError("primorial " + level.primorial().str() +
                          " exceeds memory bound " + std::to_string(bound),
                      level.primorial(), BigInt(bound));
  }
  const auto primorial = level.primorial().convert_to<std::uint64_t>();
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k < primorial; ++k) {
    if (std::gcd(k, primorial) == 1) out.push_back(k);
  }
  return out;
}

}  // namespace primod::oracle
