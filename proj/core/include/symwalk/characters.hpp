#pragma once

// Irreducible characters of S_n by the Murnaghan-Nakayama rule, dimensions
// by the hook length formula, and the closed-form character ratios used by
// the walk analyses.

#include <cstddef>
#include <vector>

#include "symwalk/partitions.hpp"
#include "symwalk/rational.hpp"

namespace symwalk {

/// chi_lambda(alpha). Border strips are removed in decreasing cycle length;
/// intermediate values are memoized process-wide (thread safe).
BigInt character(const Partition& lambda, const CycleType& alpha);

/// n! / prod of hook lengths.
BigInt dimension(const Partition& lambda);

/// chi_lambda(alpha) / d_lambda.
BigRational char_ratio(const Partition& lambda, const CycleType& alpha);

/// Character ratio of [n-i, i-k, 1^k] at a transposition:
/// 1 - i(n-i+k+1)/C(n,2). Requires 0 <= k < i <= n/2 (k = 0 is [n-i, i]).
BigRational transposition_ratio_lambda_ik(int n, int i, int k);

/// Character ratio at a 3-cycle from Frobenius coordinates:
/// M_3 / (2 (n)_3) - 3/(2(n-2)), M_3 = sum_j a_j(a_j+1)(2a_j+1) + b_j(b_j+1)(2b_j+1).
/// Throws DomainError for n < 3.
BigRational three_cycle_ratio(const Partition& lambda);

/// chi_lambda at an n-cycle: (-1)^k on the hook [n-k, 1^k], 0 elsewhere.
int ncycle_character(const Partition& lambda);

/// Drops all memoized Murnaghan-Nakayama values.
void clear_character_cache();
std::size_t character_cache_size();

/// Largest n for which build_table materializes the full table.
inline constexpr int kMaxTableDegree = 14;

class CharacterTable {
 public:
  CharacterTable(int n, std::vector<Partition> partitions,
                 std::vector<CycleType> classes, std::vector<BigInt> chi,
                 std::vector<BigInt> dims);

  int degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<CycleType>& classes() const { return classes_; }
  const std::vector<BigInt>& dims() const { return dims_; }
  /// Row-major values: row = partition, column = class.
  const std::vector<BigInt>& values() const { return chi_; }

  const BigInt& at(std::size_t row, std::size_t col) const {
    return chi_[row * classes_.size() + col];
  }
  const BigInt& at(const Partition& lambda, const CycleType& alpha) const;

  std::size_t partition_index(const Partition& lambda) const;
  std::size_t class_index(const CycleType& alpha) const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<CycleType> classes_;
  std::vector<BigInt> chi_;
  std::vector<BigInt> dims_;
};

/// Full table for 1 <= n <= kMaxTableDegree; ResourceError above the cap.
/// Rows are computed in parallel (see parallel.hpp).
CharacterTable build_table(int n);

}  // namespace symwalk
