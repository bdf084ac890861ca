#include "symwalk/rational.hpp"

#include <gmp.h>

#include <cstdio>
#include <vector>

namespace symwalk {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigRational power(const BigRational& base, unsigned long exponent) {
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // 0^0 is 1; the denominator of a canonical zero is 1, so this is already
  // canonical in every case.
  return out;
}

int sign(const BigRational& q) { return sgn(q); }
int sign(const BigInt& z) { return sgn(z); }

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  auto parse_int = [&](const std::string& part, BigInt& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw DomainError("malformed rational: '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
  }
  if (den == 0) throw DomainError("zero denominator in '" + s + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string approximate(const BigRational& q, int digits) {
  mpf_class f(q, 256);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

}  // namespace symwalk
