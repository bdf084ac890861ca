#pragma once

// Exact arithmetic vocabulary shared by every module. Integers and rationals
// are GMP-backed and never overflow; nothing in the library falls back to
// floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symwalk {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Precondition on the mathematical inputs was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request is valid but exceeds the sizes this library is built for.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is not defined for the given kind (e.g. a partial order).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

/// base^exponent for exact rationals; numerator and denominator are raised
/// separately so the result stays canonical without a gcd pass.
BigRational power(const BigRational& base, unsigned long exponent);

int sign(const BigRational& q);
int sign(const BigInt& z);

/// "p/q" or "p" in lowest terms with a positive denominator.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "p/q", "-p/q"; the result is canonicalized.
BigRational parse_rational(std::string_view text);

/// Decimal approximation with `digits` significant digits, for human output
/// only.
std::string approximate(const BigRational& q, int digits = 12);

}  // namespace symwalk
