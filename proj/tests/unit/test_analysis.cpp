#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "symwalk/analysis.hpp"
#include "symwalk/characters.hpp"

using namespace symwalk;
using symwalk::testing::ct;
using symwalk::testing::q;

namespace {

WalkSpec transposition(int n) { return builtin_walk(WalkKind::Transposition, n); }
WalkSpec three_cycle(int n) { return builtin_walk(WalkKind::ThreeCycle, n); }
WalkSpec n_cycle(int n) { return builtin_walk(WalkKind::NCycle, n); }
WalkSpec lazy(int n) { return builtin_walk(WalkKind::LazyTransposition, n, q(1, 2)); }

std::vector<CycleType> sorted_by(OrderKind kind, std::vector<CycleType> classes) {
  std::sort(classes.begin(), classes.end(), OrderGreater{kind});
  return classes;
}

bool admissible(const WalkSpec& w, const CycleType& a, const CycleType& b, long t) {
  auto s = w.support_sign(t);
  return !s || (a.sign() == *s && b.sign() == *s);
}

// Level coefficients recomputed from scratch: |eigenvalue| -> signed sum of
// (chi(a) - chi(b)) d sign(C)^t for a fixed time parity.
std::map<BigRational, BigRational, std::greater<>> levels(const WalkSpec& w,
                                                          const CycleType& a,
                                                          const CycleType& b, int parity) {
  std::map<BigRational, BigRational, std::greater<>> out;
  for (const auto& term : spectrum(w)) {
    if (term.eigenvalue == 0) continue;
    BigInt delta = character(term.lambda, a) - character(term.lambda, b);
    if (delta == 0) continue;
    int s = (term.eigenvalue < 0 && parity == 1) ? -1 : 1;
    out[abs(term.eigenvalue)] += BigRational(delta * term.dim * s);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// sum_{other levels} |K| r^t / (|K_lead| R^t)
BigRational tail_ratio(const std::map<BigRational, BigRational, std::greater<>>& lv, long t) {
  auto it = lv.begin();
  BigRational lead = abs(it->second) * power(it->first, static_cast<unsigned long>(t));
  BigRational tail = 0;
  for (++it; it != lv.end(); ++it) {
    tail += abs(it->second) * power(it->first, static_cast<unsigned long>(t));
  }
  return tail / lead;
}

}  // namespace

TEST_CASE("rank examples") {
  auto r = rank(distribution(transposition(3), 2));
  REQUIRE(r.groups.size() == 1);
  CHECK(r.groups[0] == std::vector<CycleType>{ct("3"), ct("1^3")});
  CHECK(r.group_probs[0] == q(1, 3));
  CHECK(r.restricted_parity == ClassParity::Even);

  auto r0 = rank(distribution(transposition(5), 0));
  REQUIRE(r0.groups.size() == 1);
  CHECK(r0.groups[0] == std::vector<CycleType>{CycleType::identity(5)});

  auto r100 = rank(distribution(transposition(6), 100));
  CHECK(r100.groups.front() == std::vector<CycleType>{CycleType::identity(6)});
  CHECK(r100.groups.back() == std::vector<CycleType>{ct("3^2")});
  for (std::size_t g = 1; g < r100.group_probs.size(); ++g) {
    CHECK(r100.group_probs[g - 1] > r100.group_probs[g]);
  }
  CHECK(r100.restricted_parity == ClassParity::Even);

  auto rl = rank(distribution(lazy(5), 7));
  CHECK(rl.restricted_parity == ClassParity::Any);
  std::size_t total = 0;
  for (const auto& g : rl.groups) total += g.size();
  CHECK(total == enumerate_cycle_types(5).size());
}

TEST_CASE("check_order examples") {
  auto inv = check_order(distribution(transposition(8), 4), OrderKind::CL);
  auto hit = std::find_if(inv.begin(), inv.end(), [](const Inversion& x) {
    return x.alpha == ct("1 7") && x.beta == ct("2^4");
  });
  REQUIRE(hit != inv.end());
  CHECK(hit->p_alpha == 0);
  CHECK(hit->p_beta > 0);

  CHECK(check_order(distribution(transposition(5), 0), OrderKind::CL).empty());
  CHECK(check_order(distribution(transposition(7), 200), OrderKind::CL).empty());
  CHECK_THROWS_AS(check_order(distribution(transposition(5), 3), OrderKind::Majorization),
                  UnsupportedError);
}

TEST_CASE("the CL order is broken at t = 4 in S_8 and restored later") {
  auto w = transposition(8);
  long restored = -1;
  for (long t = 4; t <= 60; t += 2) {
    if (check_order(distribution(w, t), OrderKind::CL).empty()) {
      restored = t;
      break;
    }
  }
  CHECK(restored >= 6);
  CAPTURE(restored);
}

TEST_CASE("certificate examples") {
  auto w6 = transposition(6);
  auto cert = certified_stabilization_time(w6, CycleType::identity(6), ct("1^2 2^2"));
  REQUIRE(cert.certified);
  REQUIRE(cert.t_star.has_value());
  CHECK(cert.eventual_sign == 1);
  CHECK(cert.i == 1);
  for (long t = *cert.t_star; t <= *cert.t_star + 40; ++t) {
    if (!admissible(w6, cert.alpha, cert.beta, t)) continue;
    CHECK(sign(difference(w6, t, cert.alpha, cert.beta)) == 1);
  }

  CHECK_THROWS_AS(certified_stabilization_time(w6, ct("3^2"), ct("3^2")), DomainError);
  CHECK_THROWS_AS(certified_stabilization_time(w6, ct("1 5"), ct("1^4 2")), DomainError);
  CHECK_THROWS_AS(certified_stabilization_time(w6, ct("3^2"), ct("3 4")), DomainError);

  auto w8 = transposition(8);
  auto brk = certified_stabilization_time(w8, ct("1 7"), ct("2^4"));
  REQUIRE(brk.certified);
  CHECK(brk.eventual_sign == 1);
  CHECK(*brk.t_star > 4);
  CHECK(brk.i == 1);
  CHECK(std::find(brk.lead.begin(), brk.lead.end(), Partition{7, 1}) != brk.lead.end());
}

TEST_CASE("certificates are sound over a scan window") {
  std::vector<std::pair<WalkSpec, TimeParity>> cases;
  for (int n = 5; n <= 8; ++n) {
    cases.emplace_back(transposition(n), TimeParity::Even);
    cases.emplace_back(transposition(n), TimeParity::Odd);
    cases.emplace_back(three_cycle(n), TimeParity::Even);
    cases.emplace_back(three_cycle(n), TimeParity::Odd);
    cases.emplace_back(n_cycle(n), TimeParity::Even);
    cases.emplace_back(n_cycle(n), TimeParity::Odd);
    if (n <= 6) cases.emplace_back(lazy(n), TimeParity::Any);
  }
  for (const auto& [w, parity] : cases) {
    auto report = stabilization_report(w, parity);
    for (const auto& cert : report.certificates) {
      if (!cert.certified || *cert.t_star > 200) continue;
      for (long t = *cert.t_star; t <= *cert.t_star + 50; ++t) {
        if (parity == TimeParity::Even && t % 2 != 0) continue;
        if (parity == TimeParity::Odd && t % 2 == 0) continue;
        if (!admissible(w, cert.alpha, cert.beta, t)) continue;
        INFO(w.name(), " n=", w.degree(), " ", cert.alpha.to_string(), " vs ",
             cert.beta.to_string(), " t=", t);
        CHECK(sign(difference(w, t, cert.alpha, cert.beta)) == cert.eventual_sign);
      }
    }
  }
}

TEST_CASE("certified dominance is minimal and its tail ratio shrinks") {
  for (int n = 5; n <= 7; ++n) {
    for (const auto& [w, parity] :
         {std::pair{transposition(n), 0}, std::pair{three_cycle(n), 1}}) {
      auto tp = parity == 0 ? TimeParity::Even : TimeParity::Odd;
      for (const auto& cert : stabilization_report(w, tp).certificates) {
        REQUIRE(cert.certified);
        long t = *cert.t_star;
        CHECK(t % 2 == parity);
        auto lv = levels(w, cert.alpha, cert.beta, parity);
        CHECK(sign(lv.begin()->second) == cert.eventual_sign);
        CHECK(tail_ratio(lv, t) < 1);
        if (t - 2 >= 1) CHECK(tail_ratio(lv, t - 2) >= 1);
        CHECK(tail_ratio(lv, t + 1) <= tail_ratio(lv, t));
        CHECK(tail_ratio(lv, t + 2) <= tail_ratio(lv, t + 1));
      }
    }
  }
}

TEST_CASE("supported classes") {
  CHECK_THROWS_AS(supported_classes(transposition(5), TimeParity::Any), DomainError);
  for (const auto& c : supported_classes(transposition(6), TimeParity::Odd)) {
    CHECK(c.sign() == -1);
  }
  for (const auto& c : supported_classes(three_cycle(6), TimeParity::Odd)) {
    CHECK(c.sign() == 1);
  }
  CHECK(supported_classes(lazy(5), TimeParity::Any).size() == 7);
}

TEST_CASE("stabilization report examples") {
  auto even6 = stabilization_report(transposition(6), TimeParity::Even);
  CHECK(even6.uncertified.empty());
  CHECK(even6.consistent);
  CHECK(even6.order ==
        sorted_by(OrderKind::CL, supported_classes(transposition(6), TimeParity::Even)));

  auto three7 = stabilization_report(three_cycle(7), TimeParity::Any);
  CHECK(three7.uncertified.empty());
  CHECK(three7.order ==
        sorted_by(OrderKind::AltCL, supported_classes(three_cycle(7), TimeParity::Any)));

  auto odd9 = stabilization_report(n_cycle(9), TimeParity::Odd);
  CHECK(odd9.uncertified.empty());
  CHECK(odd9.order ==
        sorted_by(OrderKind::NegCL, supported_classes(n_cycle(9), TimeParity::Odd)));
  for (const auto& c : odd9.order) CHECK(c.sign() == 1);
}

TEST_CASE("three-cycle order depends on time parity when a negative level leads") {
  // In S_6 the two-row detector [4,2] has three-cycle eigenvalue 0, and the
  // [3,3] / [2,2,2] level at -1/5 leads instead, so the sign alternates.
  auto w = three_cycle(6);
  CHECK(eigenvalue(w, Partition{4, 2}) == 0);
  CHECK(eigenvalue(w, Partition{3, 3}) == q(-1, 5));
  auto any = certified_stabilization_time(w, ct("2 4"), ct("3^2"));
  CHECK_FALSE(any.certified);
  CHECK_FALSE(any.reason.empty());
  auto even = certified_stabilization_time(w, ct("2 4"), ct("3^2"), TimeParity::Even);
  auto odd = certified_stabilization_time(w, ct("2 4"), ct("3^2"), TimeParity::Odd);
  REQUIRE(even.certified);
  REQUIRE(odd.certified);
  CHECK(even.eventual_sign == -odd.eventual_sign);
  CHECK(sign(difference(w, 40, ct("2 4"), ct("3^2"))) == even.eventual_sign);
  CHECK(sign(difference(w, 41, ct("2 4"), ct("3^2"))) == odd.eventual_sign);
}

TEST_CASE("distances at t = 0") {
  for (int n = 3; n <= 7; ++n) {
    BigRational nf(factorial(static_cast<unsigned>(n)));
    CHECK(tv_distance(transposition(n), 0) == 1 - 2 / nf);
    CHECK(tv_distance(three_cycle(n), 0) == 1 - 2 / nf);
    CHECK(tv_distance(lazy(n), 0) == 1 - 1 / nf);
    CHECK(separation(transposition(n), 0) == 1);
    CHECK(linf(lazy(n), 0) == nf - 1);
  }
}

TEST_CASE("distance inequalities and monotone lazy TV") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& w : {transposition(n), lazy(n), three_cycle(n), n_cycle(n)}) {
      BigRational prev_tv = 2;
      for (long t = 0; t <= 50; ++t) {
        auto d = distribution(w, t);
        auto tv = tv_distance(w, d);
        auto sep = separation(w, d);
        CHECK(tv >= 0);
        CHECK(sep >= tv);
        CHECK(linf(w, d) >= sep);
        if (w.kind() == WalkKind::LazyTransposition) {
          CHECK(tv <= prev_tv);
          prev_tv = tv;
        }
      }
    }
  }
}

TEST_CASE("stationary mass") {
  auto w = transposition(5);
  CHECK(stationary_mass(w, 2, ct("1 2^2")) == q(1, 60));
  CHECK(stationary_mass(w, 2, ct("1^3 2")) == 0);
  CHECK(stationary_mass(w, 3, ct("1^3 2")) == q(1, 60));
  CHECK(stationary_mass(lazy(5), 3, ct("1^3 2")) == q(1, 120));
}

TEST_CASE("stationary split") {
  auto w8 = transposition(8);
  auto split = stationary_split(w8, 100);
  auto rule = predicted_split(w8);
  for (const auto& c : split.above) CHECK(rule.above(c));
  for (const auto& c : split.below) CHECK(rule.below(c));
  CHECK(split.equal.empty());
  CHECK(std::find(split.above.begin(), split.above.end(), CycleType::identity(8)) !=
        split.above.end());

  // Near (1/2) n log n the fixed-point-free classes are still below uniform.
  auto early = stationary_split(transposition(7), 6);
  for (const auto& c : enumerate_cycle_types(7)) {
    if (c.count(1) != 0 || c.sign() != 1) continue;
    CHECK(std::find(early.below.begin(), early.below.end(), c) != early.below.end());
  }

  CHECK(rule.above(ct("1 2^2 3")) == true);
  CHECK(rule.above(ct("1 2 5")) == false);
  CHECK(rule.above(ct("2 6")) == false);
  CHECK(rule.above(ct("1^2 6")) == true);
  CHECK_NOTHROW(predicted_split(lazy(6)));
  CHECK_THROWS_AS(predicted_split(three_cycle(6)), UnsupportedError);
}

TEST_CASE("time parity names") {
  CHECK(to_string(TimeParity::Any) == "any");
  CHECK(to_string(TimeParity::Even) == "even");
  CHECK(to_string(TimeParity::Odd) == "odd");
}
