#include <doctest.h>

#include <random>
#include <set>

#include "primod/error.hpp"
#include "primod/residue_tuple.hpp"
#include "test_util.hpp"

using namespace primod;
using testutil::residues_of;

namespace {

ResidueTuple tuple_of(const LevelPtr& level, std::vector<Residue> residues) {
  return ResidueTuple(level, std::move(residues));
}

}  // namespace

TEST_CASE("to_residues reduces modulo each level prime") {
  auto three = make_level(3);
  CHECK(residues_of(to_residues(7, three)) == std::vector<Residue>{1, 1, 2});
  CHECK(residues_of(to_residues(30, three)) == std::vector<Residue>{0, 0, 0});
  CHECK(residues_of(to_residues(1, make_level(5))) ==
        std::vector<Residue>{1, 1, 1, 1, 1});
}

TEST_CASE("to_residues accepts values beyond the primorial and rejects negatives") {
  auto three = make_level(3);
  CHECK(to_residues(37, three) == to_residues(7, three));
  CHECK_THROWS_AS(to_residues(BigInt(-1), three), DomainError);
}

TEST_CASE("addition is componentwise modulo each prime") {
  auto two = make_level(2);
  CHECK(residues_of(tuple_of(two, {0, 2}) + tuple_of(two, {1, 0})) ==
        std::vector<Residue>{1, 2});

  auto three = make_level(3);
  CHECK(zero_tuple(three) + to_residues(7, three) == to_residues(7, three));
  // 29 + 1 = 30 wraps to the zero tuple.
  CHECK(tuple_of(three, {1, 2, 4}) + tuple_of(three, {1, 1, 1}) ==
        to_residues(30, three));
}

TEST_CASE("multiplication is componentwise modulo each prime") {
  auto two = make_level(2);
  CHECK(residues_of(tuple_of(two, {0, 2}) * tuple_of(two, {1, 0})) ==
        std::vector<Residue>{0, 0});

  auto four = make_level(4);
  CHECK(to_residues(1, four) * to_residues(13, four) == to_residues(13, four));
  CHECK(residues_of(to_residues(11, four) * to_residues(11, four)) ==
        std::vector<Residue>{1, 1, 1, 2});
}

TEST_CASE("relative_prime means no zero residue") {
  auto four = make_level(4);
  CHECK(tuple_of(four, {1, 2, 4, 6}).relative_prime());
  CHECK_FALSE(tuple_of(make_level(3), {1, 0, 3}).relative_prime());
  CHECK(tuple_of(four, {1, 1, 1, 1}).relative_prime());
}

TEST_CASE("unary tuples have a single 1") {
  auto four = make_level(4);
  CHECK(residues_of(unary(four, 1)) == std::vector<Residue>{1, 0, 0, 0});
  CHECK(residues_of(unary(four, 4)) == std::vector<Residue>{0, 0, 0, 1});
  CHECK(residues_of(unary(make_level(1), 1)) == std::vector<Residue>{1});
  CHECK_THROWS_AS(unary(four, 0), DomainError);
  CHECK_THROWS_AS(unary(four, 5), DomainError);
}

TEST_CASE("construction validates length and residue ranges") {
  auto three = make_level(3);
  CHECK_THROWS_AS(tuple_of(three, {1, 1}), DomainError);
  CHECK_THROWS_WITH_AS(tuple_of(three, {1, 3, 0}), doctest::Contains("position 2"),
                       DomainError);
}

TEST_CASE("cross-level operations are errors, not false") {
  auto a = to_residues(7, make_level(3));
  auto b = to_residues(7, make_level(4));
  CHECK_THROWS_AS((void)(a == b), LevelMismatchError);
  CHECK_THROWS_AS(a + b, LevelMismatchError);
  CHECK_THROWS_AS(a * b, LevelMismatchError);
}

TEST_CASE("tuple rendering") {
  CHECK(to_residues(7, make_level(3)).to_string() == "(1,1,2)");
  CHECK(to_residues(0, make_level(1)).to_string() == "(0)");
}

TEST_CASE("reduction is a ring homomorphism (exhaustive at small levels)") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto level = make_level(n);
    const auto primorial = level->primorial().convert_to<std::uint64_t>();
    for (std::uint64_t m = 0; m < primorial; ++m) {
      auto fm = to_residues(m, level);
      for (std::uint64_t k = 0; k < primorial; ++k) {
        auto fk = to_residues(k, level);
        REQUIRE(to_residues(m + k, level) == fm + fk);
        REQUIRE(to_residues(m * k, level) == fm * fk);
      }
    }
  }
}

TEST_CASE("reduction is injective below the primorial (exhaustive at n <= 4)") {
  for (unsigned n = 1; n <= 4; ++n) {
    auto level = make_level(n);
    const auto primorial = level->primorial().convert_to<std::uint64_t>();
    std::set<std::vector<Residue>> image;
    for (std::uint64_t k = 0; k < primorial; ++k) {
      image.insert(residues_of(to_residues(k, level)));
    }
    CAPTURE(n);
    CHECK(image.size() == primorial);
  }
}

TEST_CASE("every tuple decomposes into unary summands") {
  auto check_decomposition = [](const LevelPtr& level, const ResidueTuple& t) {
    auto sum = zero_tuple(level);
    for (std::size_t i = 1; i <= level->n(); ++i) {
      auto u = unary(level, i);
      for (Residue c = 0; c < t.at(i); ++c) sum = sum + u;
    }
    return sum == t;
  };

  auto three = make_level(3);
  const auto primorial = three->primorial().convert_to<std::uint64_t>();
  for (std::uint64_t k = 0; k < primorial; ++k) {
    REQUIRE(check_decomposition(three, to_residues(k, three)));
  }

  auto six = make_level(6);
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::uint64_t> dist(0, 30029);
  for (int trial = 0; trial < 200; ++trial) {
    REQUIRE(check_decomposition(six, to_residues(dist(rng), six)));
  }
}

TEST_CASE("ring axioms hold") {
  auto check_triple = [](const ResidueTuple& a, const ResidueTuple& b,
                         const ResidueTuple& c) {
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
  };

  SUBCASE("exhaustive at n = 2") {
    auto level = make_level(2);
    for (std::uint64_t x = 0; x < 6; ++x)
      for (std::uint64_t y = 0; y < 6; ++y)
        for (std::uint64_t z = 0; z < 6; ++z)
          check_triple(to_residues(x, level), to_residues(y, level),
                       to_residues(z, level));
  }

  SUBCASE("random triples at n = 6") {
    auto level = make_level(6);
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> dist(0, 30029);
    for (int trial = 0; trial < 500; ++trial) {
      check_triple(to_residues(dist(rng), level), to_residues(dist(rng), level),
                   to_residues(dist(rng), level));
    }
  }
}

TEST_CASE("canonical integers stay inside [0, P)") {
  auto three = make_level(3);
  CHECK(CanonicalInteger(29, three).value() == 29);
  CHECK_THROWS_AS(CanonicalInteger(30, three), DomainError);
  CHECK_THROWS_AS(CanonicalInteger(BigInt(-1), three), DomainError);
}
