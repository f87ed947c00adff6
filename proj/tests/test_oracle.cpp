#include <doctest.h>

#include <numeric>

#include "primod/error.hpp"
#include "primod/oracle.hpp"
#include "primod/prime_level.hpp"

using namespace primod;

TEST_CASE("sieve lists the primes below 30") {
  auto table = oracle::sieve(30);
  CHECK(table.primes() == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("sieve prime counts") {
  CHECK(oracle::sieve(10).prime_count(2, 10) == 4);
  CHECK(oracle::sieve(210).prime_count(2, 209) == 46);
  CHECK(oracle::sieve(30).prime_count(2, 29) == 10);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
  auto table = oracle::sieve(10'000);
  for (std::uint64_t k = 0; k <= 10'000; ++k) {
    CAPTURE(k);
    REQUIRE(table.is_prime(k) == oracle::is_prime_trial(k));
  }
}

TEST_CASE("sieve rejects out-of-bounds limits") {
  CHECK_THROWS_AS(oracle::SieveTable(1), BudgetError);
  CHECK_THROWS_AS(oracle::SieveTable(1000, 999), BudgetError);
  CHECK_THROWS_AS(oracle::sieve(100).is_prime(101), DomainError);
}

TEST_CASE("coprime_list for small levels") {
  CHECK(oracle::coprime_list(*make_level(2)) == std::vector<std::uint64_t>{1, 5});
  CHECK(oracle::coprime_list(*make_level(3)) ==
        std::vector<std::uint64_t>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(oracle::coprime_list(*make_level(4)).size() == 48);
}

TEST_CASE("coprime_list length equals the totient product") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto level = make_level(n);
    BigInt phi = 1;
    for (auto p : level->primes()) phi *= (p - 1);
    CAPTURE(n);
    CHECK(BigInt(oracle::coprime_list(*level).size()) == phi);
  }
}

TEST_CASE("coprime_list refuses primorials beyond the memory bound") {
  CHECK_THROWS_AS(oracle::coprime_list(*make_level(10)), BudgetError);
  auto err = [] {
    try {
      oracle::coprime_list(*make_level(4), 100);
    } catch (const BudgetError& e) {
      return e;
    }
    return BudgetError("not thrown", 0, 0);
  }();
  CHECK(err.required() == 210);
  CHECK(err.allowed() == 100);
}
