#include "primod/prime_level.hpp"

#include <string>

#include "primod/error.hpp"

namespace primod {

namespace {

bool trial_prime(std::uint64_t candidate) {
  if (candidate < 2) return false;
  if (candidate % 2 == 0) return candidate == 2;
  for (std::uint64_t d = 3; d * d <= candidate; d += 2) {
    if (candidate % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeLevel::PrimeLevel(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)), primorial_(1) {
  for (std::uint64_t p : primes_) primorial_ *= p;
}

std::uint64_t PrimeLevel::prime(std::size_t position) const {
  if (position < 1 || position > primes_.size()) {
    throw DomainError("prime position " + std::to_string(position) +
                      " out of range 1.." + std::to_string(primes_.size()));
  }
  return primes_[position - 1];
}

LevelPtr make_level(unsigned n, unsigned cap) {
  if (n < 1 || n > cap) {
    throw LevelRangeError("level out of range: " + std::to_string(n) +
                          " not in 1.." + std::to_string(cap));
  }
  std::vector<std::uint64_t> primes;
  primes.reserve(n);
  for (std::uint64_t p = 2; primes.size() < n; ++p) {
    if (trial_prime(p)) primes.push_back(p);
  }
  return LevelPtr(new PrimeLevel(std::move(primes)));
}

std::uint64_t next_prime(const PrimeLevel& level) {
  return next_prime_after(level.primes().back());
}

std::uint64_t next_prime_after(std::uint64_t k) {
  std::uint64_t candidate = k + 1;
  while (!trial_prime(candidate)) ++candidate;
  return candidate;
}

}  // namespace primod
