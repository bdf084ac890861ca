#pragma once

// Partitions (irreducible labels), cycle types (conjugacy classes), the orders
// compared by likelihood, and the i-cycle detector predicate.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symwalk/rational.hpp"

namespace symwalk {

/// Largest n accepted by the public enumerators.
inline constexpr int kMaxEnumerationDegree = 40;

/// Weakly decreasing positive parts. The empty partition (n = 0) is allowed
/// because it terminates border-strip recursions and indexes the constant
/// character polynomial.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros before validating.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses "4,2". The empty string is the empty partition.
  static Partition parse(std::string_view text);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  /// 0-based row access with zero padding past the last row.
  int part(int row) const {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const;
  /// Hook length at 0-based cell (row, col); 0 if the cell is outside.
  int hook_length(int row, int col) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Multiplicities (a_1, ..., a_n) padded to length n; this padded sequence is
/// the canonical form.
class CycleType {
 public:
  CycleType() = default;
  /// multiplicities[i-1] = a_i. Trailing entries are padded or trimmed to
  /// length n = sum i*a_i. Throws DomainError on negative entries or n = 0.
  explicit CycleType(std::vector<int> multiplicities);

  static CycleType from_cycle_lengths(std::span<const int> lengths);
  static CycleType from_partition(const Partition& lengths);
  static CycleType identity(int n);
  /// Parses "1^2 4" (space separated i^{a_i} atoms, exponent 1 omitted).
  static CycleType parse(std::string_view text);

  int degree() const { return n_; }
  /// a_i for 1-based i; 0 when i is out of range.
  int count(int i) const {
    return (i >= 1 && i <= n_) ? multiplicities_[static_cast<std::size_t>(i - 1)]
                               : 0;
  }
  std::span<const int> multiplicities() const { return multiplicities_; }
  /// Cycle lengths as a partition of n.
  Partition cycle_lengths() const;
  int num_cycles() const;
  /// (-1)^{n - number of cycles}.
  int sign() const;
  /// prod_i a_i! i^{a_i}.
  BigInt centralizer_order() const;
  BigInt class_size() const;

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.multiplicities_ <=> b.multiplicities_;
  }

 private:
  std::vector<int> multiplicities_;
  int n_ = 0;
};

/// z_alpha; equal to CycleType::centralizer_order.
BigInt z_alpha(const CycleType& alpha);

/// All partitions of n in reverse-lexicographic order of parts. Throws
/// DomainError for n outside [1, kMaxEnumerationDegree].
std::vector<Partition> enumerate_partitions(int n);
/// Same as enumerate_partitions but also accepts n = 0 and has no upper cap;
/// intended for internal recursions.
std::vector<Partition> enumerate_partitions_unchecked(int n);
/// Conjugacy classes of S_n, in the order of their cycle-length partitions.
std::vector<CycleType> enumerate_cycle_types(int n);

struct SubhookLengths {
  int h21 = 0;
  int h12 = 0;
  friend bool operator==(const SubhookLengths&, const SubhookLengths&) = default;
};

SubhookLengths subhook_lengths(const Partition& lambda);

/// min(h_{2,1}, h_{1,2}) >= i. Throws DomainError unless 1 <= i <= n.
bool is_i_cycle_detector(const Partition& lambda, int i);

/// Arm and leg lengths along the main diagonal.
struct FrobeniusCoordinates {
  std::vector<int> arms;
  std::vector<int> legs;
};
FrobeniusCoordinates frobenius_coordinates(const Partition& lambda);

/// [n-i, i].
Partition two_row(int n, int i);
/// [n-i, i-k, 1^k]; requires 0 <= k < i <= n/2.
Partition two_row_with_tail(int n, int i, int k);
/// The hook [n-k, 1^k].
Partition hook(int n, int k);

enum class OrderKind { CL, NegCL, AltCL, Majorization, ReverseLex, LulovLex };

enum class Comparison { Greater, Less, Equal, Incomparable };

bool is_total(OrderKind kind);
std::string to_string(OrderKind kind);
/// Accepts "cl", "neg-cl", "alt-cl", "majorization", "reverse-lex",
/// "lulov-lex".
OrderKind parse_order_kind(std::string_view text);
std::string to_string(Comparison c);

/// First 1-based i with a_i != b_i, or 0 if the types are equal.
int first_difference(const CycleType& alpha, const CycleType& beta);

/// The CL family compares multiplicity sequences; the other three compare
/// sorted cycle lengths. Throws DomainError on mismatched degrees.
Comparison compare(OrderKind kind, const CycleType& alpha,
                   const CycleType& beta);
Comparison compare(OrderKind kind, const Partition& alpha,
                   const Partition& beta);

/// Strict "alpha comes before beta" for a total kind, suitable for sorting
/// in descending order.
struct OrderGreater {
  OrderKind kind;
  bool operator()(const CycleType& a, const CycleType& b) const {
    return compare(kind, a, b) == Comparison::Greater;
  }
};

enum class ClassParity { Any, Even, Odd };
std::string to_string(ClassParity parity);
bool matches(ClassParity parity, const CycleType& alpha);

struct Extremes {
  CycleType max;
  CycleType min;
};

/// Largest and smallest classes of the given sign under CL, NegCL or AltCL.
/// Throws UnsupportedError for other kinds and DomainError for n < 4.
Extremes extremes(OrderKind kind, int n, ClassParity parity);

}  // namespace symwalk

template <>
struct std::hash<symwalk::Partition> {
  std::size_t operator()(const symwalk::Partition& p) const noexcept;
};

template <>
struct std::hash<symwalk::CycleType> {
  std::size_t operator()(const symwalk::CycleType& c) const noexcept;
};
