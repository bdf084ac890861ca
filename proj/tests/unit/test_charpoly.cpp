#include <doctest.h>

#include "helpers.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/charpoly.hpp"

using namespace symwalk;
using symwalk::testing::ct;
using symwalk::testing::q;

TEST_CASE("q_[2] is x2 + C(x1,2) - x1") {
  auto poly = character_polynomial(Partition{2});
  CHECK(poly.to_string() == "x2 + C(x1,2) - x1");
  // Stored in the falling-factorial basis: (x1)_2 carries 1/2.
  const auto& terms = poly.terms();
  REQUIRE(terms.size() == 3);
  CHECK(terms.at({0, 1}) == 1);
  CHECK(terms.at({2}) == q(1, 2));
  CHECK(terms.at({1}) == -1);
  CHECK(poly.evaluate(ct("1^2 4")) == -1);
  CHECK(poly.evaluate(CycleType::identity(8)) == 20);
  CHECK(poly.max_variable_index() == 2);
}

TEST_CASE("small character polynomials") {
  auto q1 = character_polynomial(Partition{1});
  CHECK(q1.to_string() == "x1 - 1");
  for (int n = 2; n <= 9; ++n) CHECK(q1.evaluate(CycleType::identity(n)) == n - 1);
  CHECK(q1.max_variable_index() == 1);

  auto empty = character_polynomial(Partition{});
  CHECK(empty.to_string() == "1");
  CHECK(empty.evaluate(ct("3 4")) == 1);
  CHECK(empty.max_variable_index() == 0);
  CHECK_THROWS_AS(CharPolynomial{}.max_variable_index(), DomainError);

  CHECK(character_polynomial(Partition{2, 1}).max_variable_index() == 3);
  CHECK_THROWS_AS(character_polynomial(Partition{5, 4}), ResourceError);
}

TEST_CASE("evaluation reproduces characters and the top variable is h21") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      if (n - lambda.part(0) > 6) continue;
      auto poly = character_polynomial_of(lambda);
      for (const auto& alpha : enumerate_cycle_types(n)) {
        INFO(lambda.to_string(), " at ", alpha.to_string());
        CHECK(poly.evaluate(alpha) == character(lambda, alpha));
      }
      if (lambda.length() > 1) {
        CHECK(poly.max_variable_index() == subhook_lengths(lambda).h21);
      }
    }
  }
}

TEST_CASE("[n-3,2,1] cannot tell 2^2 from 4") {
  for (int n = 6; n <= 12; ++n) {
    std::string fixed = "1^" + std::to_string(n - 4);
    Partition lambda{n - 3, 2, 1};
    CHECK(character(lambda, ct(fixed + " 2^2")) == character(lambda, ct(fixed + " 4")));
  }
}

TEST_CASE("evaluation is integral on every count vector") {
  for (const auto& mu : enumerate_partitions_unchecked(6)) {
    auto poly = character_polynomial(mu);
    for (int a1 = 0; a1 <= 5; ++a1) {
      for (int a2 = 0; a2 <= 3; ++a2) {
        std::vector<int> counts{a1, a2, 1, 0, 2, 1};
        CHECK_NOTHROW(poly.evaluate(counts));
      }
    }
  }
}

TEST_CASE("zero coefficients are dropped") {
  CharPolynomial::Terms terms{{{1}, q(0)}, {{0, 1}, q(3)}, {{0, 1, 0}, q(-3)}};
  CharPolynomial poly(terms);
  CHECK(poly.is_zero());
  CHECK(poly.to_string() == "0");
}
