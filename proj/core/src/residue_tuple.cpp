#include "primod/residue_tuple.hpp"

#include <algorithm>
#include <sstream>

#include "primod/error.hpp"

namespace primod {

namespace {

void require_same_level(const ResidueTuple& a, const ResidueTuple& b) {
  if (!same_level(a.level(), b.level())) {
    throw LevelMismatchError("tuples belong to different levels: " +
                             std::to_string(a.level().n()) + " vs " +
                             std::to_string(b.level().n()));
  }
}

}  // namespace

ResidueTuple::ResidueTuple(LevelPtr level, std::vector<Residue> residues)
    : level_(std::move(level)), residues_(std::move(residues)) {
  if (residues_.size() != level_->n()) {
    throw DomainError("expected " + std::to_string(level_->n()) +
                      " residues, got " + std::to_string(residues_.size()));
  }
  const auto primes = level_->primes();
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] >= primes[i]) {
      throw DomainError("residue at position " + std::to_string(i + 1) +
                        " must be in [0, " + std::to_string(primes[i]) +
                        "), got " + std::to_string(residues_[i]));
    }
  }
}

Residue ResidueTuple::at(std::size_t position) const {
  if (position < 1 || position > residues_.size()) {
    throw DomainError("tuple position " + std::to_string(position) +
                      " out of range 1.." + std::to_string(residues_.size()));
  }
  return residues_[position - 1];
}

bool ResidueTuple::relative_prime() const noexcept {
  return std::ranges::all_of(residues_, [](Residue r) { return r != 0; });
}

std::string ResidueTuple::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i > 0) out << ',';
    out << residues_[i];
  }
  out << ')';
  return out.str();
}

ResidueTuple operator+(const ResidueTuple& a, const ResidueTuple& b) {
  require_same_level(a, b);
  const auto primes = a.level().primes();
  std::vector<Residue> sum(a.level().n());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = (a.residues()[i] + b.residues()[i]) % primes[i];
  }
  return ResidueTuple(a.level_ptr(), std::move(sum));
}

ResidueTuple operator*(const ResidueTuple& a, const ResidueTuple& b) {
  require_same_level(a, b);
  const auto primes = a.level().primes();
  std::vector<Residue> product(a.level().n());
  for (std::size_t i = 0; i < product.size(); ++i) {
    product[i] = (a.residues()[i] * b.residues()[i]) % primes[i];
  }
  return ResidueTuple(a.level_ptr(), std::move(product));
}

bool operator==(const ResidueTuple& a, const ResidueTuple& b) {
  require_same_level(a, b);
  return std::ranges::equal(a.residues(), b.residues());
}

bool operator!=(const ResidueTuple& a, const ResidueTuple& b) { return !(a == b); }

ResidueTuple to_residues(const BigInt& k, LevelPtr level) {
  if (k < 0) {
    throw DomainError("domain is nonnegative integers, got " + k.str());
  }
  std::vector<Residue> residues(level->n());
  const auto primes = level->primes();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    residues[i] = BigInt(k % primes[i]).convert_to<Residue>();
  }
  return ResidueTuple(std::move(level), std::move(residues));
}

ResidueTuple unary(LevelPtr level, std::size_t position) {
  if (position < 1 || position > level->n()) {
    throw DomainError("unary position " + std::to_string(position) +
                      " out of range 1.." + std::to_string(level->n()));
  }
  std::vector<Residue> residues(level->n(), 0);
  residues[position - 1] = 1;
  return ResidueTuple(std::move(level), std::move(residues));
}

ResidueTuple zero_tuple(LevelPtr level) {
  std::vector<Residue> residues(level->n(), 0);
  return ResidueTuple(std::move(level), std::move(residues));
}

CanonicalInteger::CanonicalInteger(BigInt value, LevelPtr level)
    : value_(std::move(value)), level_(std::move(level)) {
  if (value_ < 0 || value_ >= level_->primorial()) {
    throw DomainError("canonical value " + value_.str() + " outside [0, " +
                      level_->primorial().str() + ")");
  }
}

}  // namespace primod
