#include "symwalk/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symwalk/characters.hpp"
#include "symwalk/parallel.hpp"

namespace symwalk {

// ---------------------------------------------------------------- ranking

RankReport rank(const ClassDistribution& d) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    if (d.probs[k] > 0) idx.push_back(k);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return d.probs[a] > d.probs[b];
  });
  RankReport out;
  out.t = d.t;
  bool any_even = false, any_odd = false;
  for (std::size_t k : idx) {
    (d.classes[k].sign() == 1 ? any_even : any_odd) = true;
    if (out.groups.empty() || out.group_probs.back() != d.probs[k]) {
      out.groups.emplace_back();
      out.group_probs.push_back(d.probs[k]);
    }
    out.groups.back().push_back(d.classes[k]);
  }
  out.restricted_parity = (any_even && !any_odd)   ? ClassParity::Even
                          : (any_odd && !any_even) ? ClassParity::Odd
                                                   : ClassParity::Any;
  return out;
}

std::vector<Inversion> check_order(const ClassDistribution& d, OrderKind kind) {
  if (!is_total(kind)) {
    throw UnsupportedError("check_order needs a total order, got " + to_string(kind));
  }
  // The support is the coset of A_n the walk occupies at time t: if every
  // positive class has one sign, classes of that sign that happen to have
  // probability zero (too few steps to reach them) still take part. When both
  // signs occur, every class does.
  bool pos_even = false, pos_odd = false;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    if (d.probs[k] > 0) (d.classes[k].sign() == 1 ? pos_even : pos_odd) = true;
  }
  auto in_support = [&](std::size_t k) {
    if (pos_even && pos_odd) return true;
    return d.classes[k].sign() == (pos_even ? 1 : -1);
  };
  std::vector<Inversion> out;
  for (std::size_t a = 0; a < d.classes.size(); ++a) {
    if (!in_support(a)) continue;
    for (std::size_t b = 0; b < d.classes.size(); ++b) {
      if (a == b || !in_support(b)) continue;
      if (d.probs[a] < d.probs[b] &&
          compare(kind, d.classes[a], d.classes[b]) == Comparison::Greater) {
        out.push_back({d.classes[a], d.classes[b], d.probs[a], d.probs[b]});
      }
    }
  }
  return out;
}

std::string to_string(TimeParity parity) {
  switch (parity) {
    case TimeParity::Any: return "any";
    case TimeParity::Even: return "even";
    case TimeParity::Odd: return "odd";
  }
  return "?";
}

// ---------------------------------------------------------- certification

namespace {

// Spectral data restricted to partitions with a nonzero eigenvalue, plus
// character columns for the classes of interest.
class CertificationContext {
 public:
  explicit CertificationContext(const WalkSpec& walk) : walk_(walk) {
    for (auto& term : spectrum(walk)) {
      if (term.eigenvalue != 0) terms_.push_back(std::move(term));
    }
  }

  const WalkSpec& walk() const { return walk_; }
  const std::vector<SpectralTerm>& terms() const { return terms_; }

  void prepare(const std::vector<CycleType>& classes) {
    std::vector<std::vector<BigInt>> cols(classes.size());
    parallel_for(classes.size(), [&](std::size_t c) {
      cols[c].reserve(terms_.size());
      for (const auto& term : terms_) cols[c].push_back(character(term.lambda, classes[c]));
    });
    for (std::size_t c = 0; c < classes.size(); ++c) {
      columns_.emplace(classes[c], std::move(cols[c]));
    }
  }

  const std::vector<BigInt>& column(const CycleType& alpha) const {
    return columns_.at(alpha);
  }

 private:
  const WalkSpec& walk_;
  std::vector<SpectralTerm> terms_;
  std::map<CycleType, std::vector<BigInt>> columns_;
};

struct Level {
  BigRational coefficient = 0;
  std::vector<Partition> members;
};

struct ResidueResult {
  bool vanishes = false;
  int sign = 0;
  long t_star = 0;
  BigRational lead_magnitude = 0;
  BigRational next_magnitude = 0;
  std::vector<Partition> lead;
};

// Dominance test at time t: |K_lead| R^t > sum |K_g| r_g^t.
bool dominates(const BigRational& lead_abs, const BigRational& lead_mag,
               const std::vector<std::pair<BigRational, BigRational>>& others,
               long t) {
  BigRational rhs = 0;
  for (const auto& [mag, coeff_abs] : others) {
    rhs += coeff_abs * power(mag, static_cast<unsigned long>(t));
  }
  return lead_abs * power(lead_mag, static_cast<unsigned long>(t)) > rhs;
}

ResidueResult certify_residue(const CertificationContext& ctx,
                              const CycleType& alpha, const CycleType& beta,
                              int residue) {
  const auto& col_a = ctx.column(alpha);
  const auto& col_b = ctx.column(beta);
  // Keyed by |eigenvalue|, largest first.
  std::map<BigRational, Level, std::greater<>> levels;
  for (std::size_t l = 0; l < ctx.terms().size(); ++l) {
    BigInt delta = col_a[l] - col_b[l];
    if (delta == 0) continue;
    const auto& term = ctx.terms()[l];
    BigRational mag = abs(term.eigenvalue);
    int s = (term.eigenvalue < 0 && residue == 1) ? -1 : 1;
    auto& level = levels[mag];
    level.coefficient += BigRational(delta * term.dim * s);
    level.members.push_back(term.lambda);
  }
  std::erase_if(levels, [](const auto& kv) { return kv.second.coefficient == 0; });

  ResidueResult out;
  if (levels.empty()) {
    out.vanishes = true;
    return out;
  }
  auto it = levels.begin();
  out.lead_magnitude = it->first;
  out.sign = sign(it->second.coefficient);
  out.lead = it->second.members;
  BigRational lead_abs = abs(it->second.coefficient);
  std::vector<std::pair<BigRational, BigRational>> others;
  for (++it; it != levels.end(); ++it) {
    others.emplace_back(it->first, abs(it->second.coefficient));
  }
  if (!others.empty()) out.next_magnitude = others.front().first;

  // t = residue + 2m, t >= 1.
  const long m0 = residue == 0 ? 1 : 0;
  auto time_of = [residue](long m) { return residue + 2 * m; };
  auto holds = [&](long m) {
    return dominates(lead_abs, out.lead_magnitude, others, time_of(m));
  };
  if (holds(m0)) {
    out.t_star = time_of(m0);
    return out;
  }
  long lo = m0, step = 1;
  long hi = m0 + step;
  while (!holds(hi)) {
    lo = hi;
    step *= 2;
    hi = m0 + step;
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  out.t_star = time_of(hi);
  return out;
}

std::vector<int> admissible_residues(const WalkSpec& walk, const CycleType& alpha,
                                     const CycleType& beta, TimeParity parity) {
  std::vector<int> residues;
  for (int q : {0, 1}) {
    if (parity == TimeParity::Even && q == 1) continue;
    if (parity == TimeParity::Odd && q == 0) continue;
    // Any t >= 1 of this parity has the same support sign as t = q + 2.
    auto s = walk.support_sign(q + 2);
    if (s && (alpha.sign() != *s || beta.sign() != *s)) continue;
    residues.push_back(q);
  }
  return residues;
}

StabilizationCertificate certify_with(const CertificationContext& ctx,
                                      const CycleType& alpha, const CycleType& beta,
                                      TimeParity parity) {
  StabilizationCertificate cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.i = first_difference(alpha, beta);
  cert.parity = parity;

  auto residues = admissible_residues(ctx.walk(), alpha, beta, parity);
  if (residues.empty()) {
    throw DomainError("classes " + alpha.to_string() + " and " + beta.to_string() +
                      " are never both supported at " + to_string(parity) + " times");
  }
  std::vector<ResidueResult> results;
  for (int q : residues) results.push_back(certify_residue(ctx, alpha, beta, q));

  for (const auto& r : results) {
    if (r.vanishes) {
      cert.reason = "probability difference vanishes identically at admissible times";
      return cert;
    }
  }
  const auto& first = results.front();
  cert.lead = first.lead;
  cert.lead_magnitude = first.lead_magnitude;
  cert.next_magnitude = first.next_magnitude;
  if (results.size() == 1) {
    cert.certified = true;
    cert.eventual_sign = first.sign;
    cert.t_star = first.t_star;
    return cert;
  }
  const auto& second = results.back();
  if (first.sign != second.sign) {
    cert.reason = "eventual sign alternates with the parity of t";
    return cert;
  }
  for (const auto& p : second.lead) {
    if (std::find(cert.lead.begin(), cert.lead.end(), p) == cert.lead.end()) {
      cert.lead.push_back(p);
    }
  }
  cert.lead_magnitude = std::max(first.lead_magnitude, second.lead_magnitude);
  cert.next_magnitude = std::max(first.next_magnitude, second.next_magnitude);
  cert.certified = true;
  cert.eventual_sign = first.sign;
  // Thresholds of opposite parity: from max - 1 on, every time of either
  // parity is past its own threshold.
  cert.t_star = std::max(first.t_star, second.t_star) - 1;
  return cert;
}

}  // namespace

StabilizationCertificate certified_stabilization_time(const WalkSpec& walk,
                                                      const CycleType& alpha,
                                                      const CycleType& beta,
                                                      TimeParity parity) {
  if (alpha.degree() != walk.degree() || beta.degree() != walk.degree()) {
    throw DomainError("certified_stabilization_time: classes do not belong to S_" +
                      std::to_string(walk.degree()));
  }
  if (alpha == beta) {
    throw DomainError("certified_stabilization_time: identical classes");
  }
  CertificationContext ctx(walk);
  ctx.prepare({alpha, beta});
  return certify_with(ctx, alpha, beta, parity);
}

std::vector<CycleType> supported_classes(const WalkSpec& walk, TimeParity parity) {
  auto classes = enumerate_cycle_types(walk.degree());
  auto s = walk.step_sign();
  if (!s) return classes;
  int wanted = 1;
  if (*s == -1) {
    if (parity == TimeParity::Any) {
      throw DomainError("walk " + walk.name() +
                        " alternates cosets; choose even or odd times");
    }
    wanted = parity == TimeParity::Odd ? -1 : 1;
  }
  std::erase_if(classes, [wanted](const CycleType& c) { return c.sign() != wanted; });
  return classes;
}

StabilizationReport stabilization_report(const WalkSpec& walk, TimeParity parity) {
  StabilizationReport report;
  report.parity = parity;
  auto classes = supported_classes(walk, parity);
  CertificationContext ctx(walk);
  ctx.prepare(classes);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) pairs.emplace_back(a, b);
  }
  report.certificates.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    report.certificates[k] =
        certify_with(ctx, classes[pairs[k].first], classes[pairs[k].second], parity);
  });

  std::vector<long> wins(classes.size(), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& cert = report.certificates[k];
    if (!cert.certified) {
      report.uncertified.emplace_back(cert.alpha, cert.beta);
      continue;
    }
    report.t_max = std::max(report.t_max, *cert.t_star);
    ++wins[cert.eventual_sign > 0 ? pairs[k].first : pairs[k].second];
  }

  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return wins[a] > wins[b]; });
  std::vector<std::size_t> position(classes.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& cert = report.certificates[k];
    if (!cert.certified) continue;
    auto [a, b] = pairs[k];
    bool a_first = position[a] < position[b];
    if (a_first != (cert.eventual_sign > 0)) report.consistent = false;
  }
  for (std::size_t idx : order) report.order.push_back(classes[idx]);
  return report;
}

// ------------------------------------------------------------- stationarity

BigRational stationary_mass(const WalkSpec& walk, long t, const CycleType& alpha) {
  const auto n_fact = factorial(static_cast<unsigned>(walk.degree()));
  auto s = walk.support_sign(t);
  if (!s) return BigRational(1, n_fact);
  if (alpha.sign() != *s) return 0;
  BigRational q(2, n_fact);
  q.canonicalize();
  return q;
}

BigRational tv_distance(const WalkSpec& walk, const ClassDistribution& d) {
  BigRational total = 0;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    BigRational gap = d.probs[k] - stationary_mass(walk, d.t, d.classes[k]);
    if (gap > 0) total += gap * BigRational(d.classes[k].class_size());
  }
  return total;
}

BigRational separation(const WalkSpec& walk, const ClassDistribution& d) {
  BigRational worst = 0;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    BigRational pi = stationary_mass(walk, d.t, d.classes[k]);
    if (pi == 0) continue;
    worst = std::max(worst, BigRational((pi - d.probs[k]) / pi));
  }
  return worst;
}

BigRational linf(const WalkSpec& walk, const ClassDistribution& d) {
  BigRational worst = 0;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    BigRational pi = stationary_mass(walk, d.t, d.classes[k]);
    if (pi == 0) continue;
    worst = std::max(worst, BigRational(abs(d.probs[k] - pi) / pi));
  }
  return worst;
}

BigRational tv_distance(const WalkSpec& walk, long t) {
  return tv_distance(walk, distribution(walk, t));
}
BigRational separation(const WalkSpec& walk, long t) {
  return separation(walk, distribution(walk, t));
}
BigRational linf(const WalkSpec& walk, long t) { return linf(walk, distribution(walk, t)); }

StationarySplit stationary_split(const WalkSpec& walk, long t) {
  auto d = distribution(walk, t);
  StationarySplit out;
  out.t = t;
  for (std::size_t k = 0; k < d.classes.size(); ++k) {
    BigRational pi = stationary_mass(walk, t, d.classes[k]);
    if (pi == 0) continue;
    int c = cmp(d.probs[k], pi);
    (c > 0 ? out.above : c < 0 ? out.below : out.equal).push_back(d.classes[k]);
  }
  return out;
}

bool PredictedSplit::above(const CycleType& alpha) const {
  int a1 = alpha.count(1), a2 = alpha.count(2);
  return a1 >= 2 || (a1 == 1 && a2 >= 2);
}

PredictedSplit predicted_split(const WalkSpec& walk) {
  if (!walk.is_transposition_family()) {
    throw UnsupportedError("predicted_split applies to transposition walks only, got " +
                           walk.name());
  }
  return PredictedSplit{walk.degree()};
}

}  // namespace symwalk
