#pragma once

// Likelihood orders of class-function walks: rankings, inversions against a
// predicted order, certified stabilization times, distances to stationarity
// and the split of classes above and below the stationary value.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symwalk/partitions.hpp"
#include "symwalk/rational.hpp"
#include "symwalk/walks.hpp"

namespace symwalk {

/// Supported classes grouped by exact per-element probability, most likely
/// first. Zero-probability classes are excluded.
struct RankReport {
  long t = 0;
  ClassParity restricted_parity = ClassParity::Any;
  std::vector<std::vector<CycleType>> groups;
  std::vector<BigRational> group_probs;
};

RankReport rank(const ClassDistribution& d);

/// alpha precedes beta in the order but is strictly less likely.
struct Inversion {
  CycleType alpha;
  CycleType beta;
  BigRational p_alpha;
  BigRational p_beta;
};

/// All pairs ordered one way by `kind` and strictly the other way by
/// probability, among the classes of the coset the walk occupies at d.t
/// (every class when positive mass sits on both cosets). Ties are never
/// inversions. UnsupportedError for Majorization.
std::vector<Inversion> check_order(const ClassDistribution& d, OrderKind kind);

/// Restricts statements to times of one parity.
enum class TimeParity { Any, Even, Odd };
std::string to_string(TimeParity parity);

struct StabilizationCertificate {
  CycleType alpha;
  CycleType beta;
  /// First cycle length whose multiplicity differs.
  int i = 0;
  TimeParity parity = TimeParity::Any;
  /// Partitions with nonzero character difference in the leading eigenvalue
  /// magnitude level.
  std::vector<Partition> lead;
  /// |eigenvalue| of the lead level, and of the next level with a nonzero
  /// contribution (0 when there is none).
  BigRational lead_magnitude;
  BigRational next_magnitude;
  bool certified = false;
  /// First admissible time from which the lead level provably dominates.
  std::optional<long> t_star;
  /// +1: alpha eventually strictly more likely; -1: beta is.
  int eventual_sign = 0;
  /// Why the pair is uncertified; empty when certified.
  std::string reason;
};

/// Groups the Fourier terms of P^t(alpha) - P^t(beta) by |eigenvalue|; terms
/// sharing a magnitude are summed exactly for each time parity (this is where
/// a partition and its conjugate combine). The lead level's coefficient gives
/// the eventual sign, and t_star is the smallest admissible t >= 1 with
///   |K_lead| R^t > sum_{other levels} |K_g| r_g^t,
/// found by exponential then binary search (the ratio is monotone in t).
///
/// Admissible times: those of `parity` at which both classes are in the
/// walk's support. DomainError when alpha == beta, the degrees differ, or no
/// admissible time exists. Pairs whose difference vanishes identically, or
/// whose eventual sign depends on the time parity under TimeParity::Any, are
/// returned uncertified with a reason.
StabilizationCertificate certified_stabilization_time(
    const WalkSpec& walk, const CycleType& alpha, const CycleType& beta,
    TimeParity parity = TimeParity::Any);

/// The classes a walk supports at times of the given parity. For walks that
/// alternate cosets, TimeParity::Any is a DomainError.
std::vector<CycleType> supported_classes(const WalkSpec& walk, TimeParity parity);

struct StabilizationReport {
  TimeParity parity = TimeParity::Any;
  /// Largest t_star among certified pairs.
  long t_max = 0;
  /// Eventual order, most likely first, assembled from the certificates.
  std::vector<CycleType> order;
  std::vector<StabilizationCertificate> certificates;
  std::vector<std::pair<CycleType, CycleType>> uncertified;
  /// False when the certified pairwise signs do not form a total order.
  bool consistent = true;
};

StabilizationReport stabilization_report(const WalkSpec& walk, TimeParity parity);

/// Per-element stationary mass at time t: uniform on the coset of A_n the
/// walk occupies at t (2/n!), or uniform on S_n (1/n!) when unconstrained.
BigRational stationary_mass(const WalkSpec& walk, long t, const CycleType& alpha);

/// sum over g with P(g) > pi(g) of P(g) - pi(g).
BigRational tv_distance(const WalkSpec& walk, const ClassDistribution& d);
BigRational tv_distance(const WalkSpec& walk, long t);
/// max over g with pi(g) > 0 of (pi(g) - P(g)) / pi(g).
BigRational separation(const WalkSpec& walk, const ClassDistribution& d);
BigRational separation(const WalkSpec& walk, long t);
/// max over g with pi(g) > 0 of |P(g) - pi(g)| / pi(g).
BigRational linf(const WalkSpec& walk, const ClassDistribution& d);
BigRational linf(const WalkSpec& walk, long t);

struct StationarySplit {
  long t = 0;
  std::vector<CycleType> above;
  std::vector<CycleType> equal;
  std::vector<CycleType> below;
};

/// Exact trichotomy of the classes in the stationary support at time t.
StationarySplit stationary_split(const WalkSpec& walk, long t);

/// Large-time rule for the transposition walks: above uniform iff
/// a_1 >= 2 or (a_1 = 1 and a_2 >= 2); below otherwise.
struct PredictedSplit {
  int n = 0;
  bool above(const CycleType& alpha) const;
  bool below(const CycleType& alpha) const { return !above(alpha); }
};

/// UnsupportedError unless the walk is a (lazy) transposition walk.
PredictedSplit predicted_split(const WalkSpec& walk);

}  // namespace symwalk
