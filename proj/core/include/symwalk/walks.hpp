#pragma once

// Random walks on S_n whose step distribution is a class function, and their
// exact time-t distributions over conjugacy classes.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symwalk/partitions.hpp"
#include "symwalk/rational.hpp"

namespace symwalk {

enum class WalkKind { Transposition, LazyTransposition, ThreeCycle, NCycle, Custom };

std::string to_string(WalkKind kind);

/// One class in the step support, with the probability of each individual
/// element of the class.
struct StepEntry {
  CycleType cls;
  BigRational per_element;
};

class WalkSpec {
 public:
  /// Validates: matching degrees, no repeated classes, nonnegative
  /// probabilities, hold in [0, 1), nonempty support and
  /// sum_k |k| P(k) + hold = 1 exactly. Throws DomainError otherwise.
  static WalkSpec custom(int n, std::vector<StepEntry> step,
                         BigRational hold = 0);

  WalkKind kind() const { return kind_; }
  int degree() const { return n_; }
  /// Probability of holding in place at each step.
  const BigRational& hold() const { return hold_; }
  /// Support of the step, in enumerate_cycle_types order.
  std::span<const StepEntry> step() const { return step_; }
  /// "transposition", "lazy:1/2", "three-cycle", "n-cycle" or "custom".
  std::string name() const;

  /// The common sign of the step classes when the walk never holds;
  /// nullopt when the walk can reach both cosets of A_n at the same time.
  std::optional<int> step_sign() const;
  /// Sign of the classes supported at time t, or nullopt if unconstrained.
  std::optional<int> support_sign(long t) const;

  bool is_transposition_family() const {
    return kind_ == WalkKind::Transposition || kind_ == WalkKind::LazyTransposition;
  }

 private:
  friend WalkSpec builtin_walk(WalkKind, int, BigRational);
  WalkSpec(WalkKind kind, int n, std::vector<StepEntry> step, BigRational hold);

  WalkKind kind_;
  int n_;
  std::vector<StepEntry> step_;
  BigRational hold_;
};

/// transposition: uniform on the C(n,2) transpositions; lazy_transposition:
/// hold with probability `hold`, else a uniform transposition; three_cycle:
/// uniform on the 2 C(n,3) three-cycles; n_cycle: uniform on the (n-1)!
/// n-cycles. Requires n >= 3. Use WalkSpec::custom for Custom.
WalkSpec builtin_walk(WalkKind kind, int n, BigRational hold = 0);

/// hold + sum_k |k| P(k) chi_lambda(k) / d_lambda.
BigRational eigenvalue(const WalkSpec& walk, const Partition& lambda);

/// Fourier data of one irreducible: its dimension and walk eigenvalue.
struct SpectralTerm {
  Partition lambda;
  BigInt dim;
  BigRational eigenvalue;
};

/// One term per partition of n, in enumerate_partitions order.
std::vector<SpectralTerm> spectrum(const WalkSpec& walk);

/// Per-element probabilities at time t for every conjugacy class.
struct ClassDistribution {
  int n = 0;
  long t = 0;
  std::string walk;
  std::vector<CycleType> classes;
  std::vector<BigRational> probs;

  const BigRational& probability(const CycleType& alpha) const;
  /// Probability of the whole class: |alpha| times the per-element value.
  BigRational class_total(const CycleType& alpha) const;
  /// sum over classes of the class totals; exactly 1 for a valid result.
  BigRational total_mass() const;
};

/// P^{*t}(alpha) = (1/n!) sum_lambda chi_lambda(alpha) d_lambda C_lambda^t.
/// Terms with a zero eigenvalue are skipped for t >= 1. Parallel over
/// partitions; the exact reduction makes the result order independent.
ClassDistribution distribution(const WalkSpec& walk, long t);

/// P^{*t}(alpha) - P^{*t}(beta) from the difference formula, summing
/// (chi(alpha) - chi(beta)) d C^t directly.
BigRational difference(const WalkSpec& walk, long t, const CycleType& alpha,
                       const CycleType& beta);

/// Largest degree and time accepted by convolve_oracle.
inline constexpr int kMaxOracleDegree = 7;
inline constexpr long kMaxOracleTime = 64;

/// Time-t distribution by repeated multiplication in the centre of the group
/// algebra, with structure constants counted from explicit permutation
/// products. No characters are involved. ResourceError past the caps.
ClassDistribution convolve_oracle(const WalkSpec& walk, long t);

}  // namespace symwalk
