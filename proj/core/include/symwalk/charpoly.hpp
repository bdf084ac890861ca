#pragma once

// Character polynomials: q_mu in the cycle counts x_1, x_2, ... such that
// chi_{[n-|mu|, mu]}(alpha) = q_mu(a_1, a_2, ...).

#include <map>
#include <span>
#include <string>
#include <vector>

#include "symwalk/partitions.hpp"
#include "symwalk/rational.hpp"

namespace symwalk {

/// Largest |mu| accepted by character_polynomial.
inline constexpr int kMaxCharPolyDegree = 8;

/// Exact multivariate polynomial stored in the falling-factorial basis: the
/// exponent vector e (e[0] for x_1) stands for prod_i (x_i)_{e_i}.
class CharPolynomial {
 public:
  /// Exponent vectors have no trailing zeros; the constant term is {}.
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, BigRational>;

  CharPolynomial() = default;
  /// Zero coefficients are dropped and exponent vectors trimmed.
  explicit CharPolynomial(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value at cycle counts counts[i-1] = a_i (missing counts are 0). The
  /// result is checked to be an integer; a fractional value throws
  /// std::logic_error.
  BigInt evaluate(std::span<const int> counts) const;
  BigInt evaluate(const CycleType& alpha) const;

  /// Largest i with x_i in a nonzero term. Throws DomainError on the zero
  /// polynomial; the constant polynomial gives 0.
  int max_variable_index() const;

  /// "x2 + C(x1,2) - x1": (x)_e is printed as e! C(x,e) with the factorial
  /// folded into the coefficient.
  std::string to_string() const;

  friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;

 private:
  Terms terms_;
};

/// q_mu = falling( sum_{alpha |- m} chi_mu(alpha)/z_alpha prod_i (i x_i - 1)^{a_i} ),
/// applying the falling-factorial map monomial by monomial. The empty
/// partition gives the constant 1. Throws ResourceError for |mu| > 8.
CharPolynomial character_polynomial(const Partition& mu);

/// q_{[lambda_2, lambda_3, ...]}, the polynomial attached to lambda.
CharPolynomial character_polynomial_of(const Partition& lambda);

}  // namespace symwalk
