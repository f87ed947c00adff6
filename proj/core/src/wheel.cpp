#include "primod/wheel.hpp"

#include <string>
#include <utility>

#include "primod/error.hpp"

namespace primod {

BigInt coprime_count(const PrimeLevel& level) {
  BigInt count = 1;
  for (std::uint64_t p : level.primes()) count *= (p - 1);
  return count;
}

void check_enumeration_budget(const PrimeLevel& level,
                              const std::optional<BigInt>& budget) {
  if (!budget) return;
  const BigInt required = coprime_count(level);
  if (required > *budget) {
    throw BudgetError("enumeration of level " + std::to_string(level.n()) +
                          " yields " + required.str() +
                          " candidates, over the budget of " + budget->str(),
                      required, *budget);
  }
}

CoprimeEnumerator::CoprimeEnumerator(LevelPtr level, std::vector<Residue> cursor,
                                     std::size_t fixed)
    : level_(std::move(level)), cursor_(std::move(cursor)), fixed_(fixed) {}

CoprimeEnumerator CoprimeEnumerator::full(LevelPtr level) {
  std::vector<Residue> start;
  start.reserve(level->n());
  for (std::uint64_t p : level->primes()) start.push_back(p - 1);
  return CoprimeEnumerator(std::move(level), std::move(start), 0);
}

CoprimeEnumerator CoprimeEnumerator::resume(ResidueTuple start) {
  if (!start.relative_prime()) {
    throw NotCoprimeError("cannot resume enumeration from " + start.to_string() +
                          ": tuple has a zero residue");
  }
  std::vector<Residue> cursor(start.residues().begin(), start.residues().end());
  return CoprimeEnumerator(start.level_ptr(), std::move(cursor), 0);
}

CoprimeEnumerator CoprimeEnumerator::with_prefix(LevelPtr level,
                                                 std::vector<Residue> prefix) {
  if (prefix.size() > level->n()) {
    throw DomainError("prefix longer than the level");
  }
  std::vector<Residue> cursor = prefix;
  const auto primes = level->primes();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 0 || prefix[i] >= primes[i]) {
      throw DomainError("prefix residue at position " + std::to_string(i + 1) +
                        " must be in [1, " + std::to_string(primes[i]) + ")");
    }
  }
  for (std::size_t i = prefix.size(); i < level->n(); ++i) {
    cursor.push_back(primes[i] - 1);
  }
  return CoprimeEnumerator(std::move(level), std::move(cursor), prefix.size());
}

std::optional<ResidueTuple> CoprimeEnumerator::next() {
  if (done_) return std::nullopt;
  ResidueTuple current(level_, cursor_);
  // Decrement the rightmost movable position; positions at 1 reset to their
  // maximum and carry the borrow leftward. Positions inside the fixed
  // prefix never move.
  const auto primes = level_->primes();
  std::size_t i = cursor_.size();
  for (; i > fixed_; --i) {
    if (cursor_[i - 1] > 1) {
      --cursor_[i - 1];
      break;
    }
    cursor_[i - 1] = primes[i - 1] - 1;
  }
  if (i == fixed_) done_ = true;
  return current;
}

CoprimeEnumerator enumerate_coprime(LevelPtr level, std::optional<BigInt> budget) {
  check_enumeration_budget(*level, budget);
  return CoprimeEnumerator::full(std::move(level));
}

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::unit:
      return "unit";
    case CandidateKind::prime:
      return "prime";
    case CandidateKind::coprime_composite:
      return "coprime_composite";
  }
  return "unknown";
}

namespace {

bool trial_division_prime(const BigInt& value,
                          std::span<const std::uint64_t> oracle_primes) {
  if (value < 2) return false;
  const auto root = isqrt(value).convert_to<std::uint64_t>();
  if (root >= 2) {
    // The ascending list must hold every prime up to the root, i.e. no
    // prime may hide between its last entry and the root.
    const bool covered = !oracle_primes.empty() &&
                         (oracle_primes.back() >= root ||
                          next_prime_after(oracle_primes.back()) > root);
    if (!covered) {
      throw DomainError("oracle prime list covers up to " +
                        std::to_string(oracle_primes.empty() ? 0 : oracle_primes.back()) +
                        ", need " + std::to_string(root));
    }
  }
  for (std::uint64_t q : oracle_primes) {
    if (q > root) break;
    if (value % q == 0) return false;
  }
  return true;
}

}  // namespace

CandidateRecord classify(const ResidueTuple& t, const CrtBasis& basis,
                         std::span<const std::uint64_t> oracle_primes) {
  if (!t.relative_prime()) {
    throw NotCoprimeError("not a candidate: " + t.to_string() +
                          " has a zero residue");
  }
  BigInt value = reconstruct(t, basis).value();
  CandidateKind kind;
  if (value == 1) {
    kind = CandidateKind::unit;
  } else if (trial_division_prime(value, oracle_primes)) {
    kind = CandidateKind::prime;
  } else {
    kind = CandidateKind::coprime_composite;
  }
  const BigInt p_next = next_prime(t.level());
  const bool guaranteed = value >= p_next && value < p_next * p_next;
  return CandidateRecord{t, std::move(value), kind, guaranteed};
}

std::vector<CandidateRecord> pm_prime_set(const LevelPtr& level, const CrtBasis& basis,
                                          std::span<const std::uint64_t> oracle_primes,
                                          std::optional<BigInt> budget) {
  check_enumeration_budget(*level, budget);
  std::vector<CandidateRecord> composites;
  auto stream = CoprimeEnumerator::full(level);
  while (auto t = stream.next()) {
    auto record = classify(*t, basis, oracle_primes);
    if (record.kind == CandidateKind::coprime_composite) {
      composites.push_back(std::move(record));
    }
  }
  return composites;
}

CountReport count_report(const LevelPtr& level, const CrtBasis& basis,
                         std::span<const std::uint64_t> oracle_primes,
                         std::optional<BigInt> budget) {
  check_enumeration_budget(*level, budget);
  BigInt composites = 0;
  auto stream = CoprimeEnumerator::full(level);
  while (auto t = stream.next()) {
    if (classify(*t, basis, oracle_primes).kind == CandidateKind::coprime_composite) {
      ++composites;
    }
  }
  const BigInt phi = coprime_count(*level);
  CountReport report;
  report.level_n = level->n();
  report.phi_count = phi;
  report.pm_prime_count = composites;
  report.band_prime_count = phi - 1 - composites;
  report.below_primorial_count = level->n() + phi - 1 - composites;
  return report;
}

}  // namespace primod
