#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "helpers.hpp"
#include "symwalk/partitions.hpp"

using namespace symwalk;
using symwalk::testing::ct;
using symwalk::testing::pt;

TEST_CASE("partition construction and text form") {
  Partition p{4, 2};
  CHECK(p.size() == 6);
  CHECK(p.length() == 2);
  CHECK(p.to_string() == "4,2");
  CHECK(pt("4,2") == p);
  CHECK(Partition::from_unsorted({2, 4}) == p);
  CHECK_THROWS_AS(Partition({2, 4}), DomainError);
  CHECK_THROWS_AS(Partition({3, 0}), DomainError);
  CHECK_THROWS_AS(pt("4,x"), DomainError);
}

TEST_CASE("cycle type construction and text form") {
  auto a = ct("1^2 4");
  CHECK(a.degree() == 6);
  CHECK(a.count(1) == 2);
  CHECK(a.count(4) == 1);
  CHECK(a.count(2) == 0);
  CHECK(a.to_string() == "1^2 4");
  CHECK(ct("4 1^2") == a);
  CHECK(CycleType::from_partition(Partition{4, 1, 1}) == a);
  CHECK(a.cycle_lengths() == Partition{4, 1, 1});
  CHECK(CycleType::identity(5).to_string() == "1^5");
  CHECK_THROWS_AS(ct(""), DomainError);
  CHECK_THROWS_AS(ct("0^2"), DomainError);
}

TEST_CASE("enumerate_partitions examples") {
  auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Partition{1});

  auto four = enumerate_partitions(4);
  std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(four == expected);

  CHECK(enumerate_partitions(10).size() == 42);
  CHECK_THROWS_AS(enumerate_partitions(0), DomainError);
  CHECK_THROWS_AS(enumerate_partitions(41), DomainError);
}

TEST_CASE("enumerated counts match the pentagonal recurrence and are distinct") {
  auto counts = symwalk::testing::partition_counts(kMaxEnumerationDegree);
  for (int n = 1; n <= 30; ++n) {
    auto parts = enumerate_partitions(n);
    CHECK(static_cast<long>(parts.size()) == counts[static_cast<std::size_t>(n)]);
    std::set<Partition> unique(parts.begin(), parts.end());
    CHECK(unique.size() == parts.size());
    CHECK(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
  }
  CHECK(static_cast<long>(enumerate_partitions(40).size()) == counts[40]);
  CHECK(counts[40] == 37338);
}

TEST_CASE("conjugate") {
  CHECK((Partition{4, 2}).conjugate() == Partition{2, 2, 1, 1});
  CHECK((Partition{7}).conjugate() == Partition{1, 1, 1, 1, 1, 1, 1});
  CHECK((Partition{3, 1, 1}).conjugate() == Partition{3, 1, 1});
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == n);
    }
  }
}

TEST_CASE("subhook lengths and detectors") {
  CHECK(subhook_lengths(Partition{4, 2}) == SubhookLengths{2, 4});
  CHECK(subhook_lengths(Partition{9}) == SubhookLengths{0, 8});
  for (int n = 3; n <= 10; ++n) {
    for (int i = 0; i < n; ++i) {
      CHECK(subhook_lengths(hook(n, i)) == SubhookLengths{i, n - i - 1});
    }
  }
  CHECK(is_i_cycle_detector(Partition{4, 2}, 2));
  CHECK_FALSE(is_i_cycle_detector(Partition{4, 2}, 3));
  CHECK_FALSE(is_i_cycle_detector(Partition{8}, 1));
  CHECK_THROWS_AS(is_i_cycle_detector(Partition{4, 2}, 0), DomainError);
  CHECK_THROWS_AS(is_i_cycle_detector(Partition{4, 2}, 7), DomainError);
}

TEST_CASE("detector predicate is conjugation symmetric and empty past n/2") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      for (int i = 1; i <= n; ++i) {
        CHECK(is_i_cycle_detector(p, i) == is_i_cycle_detector(p.conjugate(), i));
        if (2 * i > n) CHECK_FALSE(is_i_cycle_detector(p, i));
      }
    }
  }
}

TEST_CASE("named shapes") {
  CHECK(two_row(6, 2) == Partition{4, 2});
  CHECK(two_row_with_tail(8, 3, 1) == Partition{5, 2, 1});
  CHECK(two_row_with_tail(8, 3, 0) == Partition{5, 3});
  CHECK(hook(6, 2) == Partition{4, 1, 1});
  CHECK(hook(6, 0) == Partition{6});
}

TEST_CASE("frobenius coordinates") {
  auto f = frobenius_coordinates(Partition{4, 2});
  CHECK(f.arms == std::vector<int>{3, 0});
  CHECK(f.legs == std::vector<int>{1, 0});
  auto g = frobenius_coordinates(Partition{3, 3, 3});
  CHECK(g.arms == std::vector<int>{2, 1, 0});
  CHECK(g.legs == std::vector<int>{2, 1, 0});
}

TEST_CASE("z_alpha, sign and class sizes") {
  CHECK(z_alpha(ct("1^2 4")) == 8);
  CHECK(ct("1^2 4").class_size() == 90);
  CHECK(z_alpha(CycleType::identity(6)) == 720);
  CHECK(CycleType::identity(6).class_size() == 1);
  CHECK(z_alpha(ct("7")) == 7);
  CHECK(ct("7").class_size() == 720);
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& c : enumerate_cycle_types(n)) {
      CHECK(factorial(static_cast<unsigned>(n)) % z_alpha(c) == 0);
      total += c.class_size();
      int expect = ((n - c.num_cycles()) % 2 == 0) ? 1 : -1;
      CHECK(c.sign() == expect);
    }
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("compare examples") {
  CHECK(compare(OrderKind::CL, ct("1^3 3"), ct("1 5")) == Comparison::Greater);
  CHECK(compare(OrderKind::Majorization, Partition{5, 1}, Partition{3, 1, 1, 1}) ==
        Comparison::Greater);
  CHECK(compare(OrderKind::CL, ct("1 5"), ct("1^3 3")) == Comparison::Less);
  CHECK(compare(OrderKind::AltCL, ct("2^3"), ct("1^2 4")) == Comparison::Less);
  CHECK(compare(OrderKind::Majorization, Partition{3, 3}, Partition{4, 1, 1}) ==
        Comparison::Incomparable);
  CHECK(compare(OrderKind::CL, ct("3"), ct("3")) == Comparison::Equal);
  CHECK_THROWS_AS(compare(OrderKind::CL, ct("3"), ct("4")), DomainError);
  CHECK(first_difference(ct("1^2 4"), ct("1^2 2^2")) == 2);
}

TEST_CASE("order kinds parse and print") {
  for (auto k : {OrderKind::CL, OrderKind::NegCL, OrderKind::AltCL, OrderKind::Majorization,
                 OrderKind::ReverseLex, OrderKind::LulovLex}) {
    CHECK(parse_order_kind(to_string(k)) == k);
    CHECK(is_total(k) == (k != OrderKind::Majorization));
  }
  CHECK_THROWS(parse_order_kind("bogus"));
}

TEST_CASE("total kinds are strict total orders on cycle types") {
  const OrderKind kinds[] = {OrderKind::CL, OrderKind::NegCL, OrderKind::AltCL,
                             OrderKind::ReverseLex, OrderKind::LulovLex};
  for (int n = 1; n <= 10; ++n) {
    auto classes = enumerate_cycle_types(n);
    for (auto kind : kinds) {
      for (const auto& a : classes) {
        for (const auto& b : classes) {
          auto ab = compare(kind, a, b);
          auto ba = compare(kind, b, a);
          REQUIRE(ab != Comparison::Incomparable);
          CHECK((ab == Comparison::Equal) == (a == b));
          if (ab == Comparison::Greater) CHECK(ba == Comparison::Less);
          if (ab != Comparison::Greater) continue;
          for (const auto& c : classes) {
            if (compare(kind, b, c) == Comparison::Greater) {
              CHECK(compare(kind, a, c) == Comparison::Greater);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("majorization reverses under conjugation; reverse-lex extends it") {
  for (int n = 1; n <= 10; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        auto m = compare(OrderKind::Majorization, a, b);
        if (m == Comparison::Greater) {
          CHECK(compare(OrderKind::Majorization, b.conjugate(), a.conjugate()) ==
                Comparison::Greater);
          CHECK(compare(OrderKind::ReverseLex, a, b) == Comparison::Greater);
        }
        CHECK((m == Comparison::Equal) == (a == b));
      }
    }
  }
}

TEST_CASE("extremes examples") {
  auto cl = extremes(OrderKind::CL, 8, ClassParity::Even);
  CHECK(cl.max == CycleType::identity(8));
  CHECK(cl.min == ct("4^2"));
  CHECK(extremes(OrderKind::AltCL, 8, ClassParity::Any).min == ct("2^4"));
  auto neg = extremes(OrderKind::NegCL, 7, ClassParity::Any);
  CHECK(neg.max == ct("7"));
  CHECK(neg.min == CycleType::identity(7));
  // Odd n: the two middle parts are (n-1)/2 and (n+1)/2.
  CHECK(extremes(OrderKind::CL, 7, ClassParity::Odd).min == ct("3 4"));
  CHECK_THROWS_AS(extremes(OrderKind::CL, 3, ClassParity::Any), DomainError);
  CHECK_THROWS_AS(extremes(OrderKind::Majorization, 6, ClassParity::Any),
                  UnsupportedError);
}

TEST_CASE("extremes agree with brute force") {
  for (int n = 4; n <= 12; ++n) {
    for (auto kind : {OrderKind::CL, OrderKind::NegCL, OrderKind::AltCL}) {
      for (auto parity : {ClassParity::Any, ClassParity::Even, ClassParity::Odd}) {
        std::vector<CycleType> pool;
        for (const auto& c : enumerate_cycle_types(n)) {
          if (matches(parity, c)) pool.push_back(c);
        }
        auto greater = OrderGreater{kind};
        auto best = *std::min_element(pool.begin(), pool.end(), greater);
        auto worst = *std::max_element(pool.begin(), pool.end(), greater);
        auto e = extremes(kind, n, parity);
        INFO("n=", n, " kind=", to_string(kind), " parity=", to_string(parity));
        CHECK(e.max == best);
        CHECK(e.min == worst);
      }
    }
  }
}

TEST_CASE("hashing is consistent with equality") {
  std::unordered_set<CycleType> seen;
  for (const auto& c : enumerate_cycle_types(9)) seen.insert(c);
  for (const auto& c : enumerate_cycle_types(9)) CHECK(seen.count(c) == 1);
  auto all = enumerate_partitions(9);
  std::unordered_set<Partition> ps(all.begin(), all.end());
  CHECK(ps.size() == 30);
}
