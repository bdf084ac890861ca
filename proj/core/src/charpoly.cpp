#include "symwalk/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "symwalk/characters.hpp"

namespace symwalk {

namespace {

using Exponents = CharPolynomial::Exponents;
using Terms = CharPolynomial::Terms;

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

// Ordinary-monomial product of two polynomials (both read as x^e).
Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

// (i x_i - 1) as an ordinary polynomial.
Terms linear_factor(int i) {
  Exponents e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return Terms{{e, BigRational(i)}, {Exponents{}, BigRational(-1)}};
}

BigInt falling_factorial(long x, int e) {
  BigInt out = 1;
  for (int j = 0; j < e; ++j) out *= (x - j);
  return out;
}

// Display order: compare exponents from the highest variable down, larger
// first, so q_[2] prints as x2 + C(x1,2) - x1.
bool display_before(const Exponents& a, const Exponents& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = len; k-- > 0;) {
    int ea = k < a.size() ? a[k] : 0;
    int eb = k < b.size() ? b[k] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace

CharPolynomial::CharPolynomial(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    Exponents key = e;
    trim(key);
    terms_[key] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BigInt CharPolynomial::evaluate(std::span<const int> counts) const {
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt product = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      long x = i < counts.size() ? counts[i] : 0;
      product *= falling_factorial(x, e[i]);
      if (product == 0) break;
    }
    total += c * product;
  }
  if (total.get_den() != 1) {
    throw std::logic_error("character polynomial evaluated to a non-integer: " +
                           total.get_str());
  }
  return total.get_num();
}

BigInt CharPolynomial::evaluate(const CycleType& alpha) const {
  return evaluate(alpha.multiplicities());
}

int CharPolynomial::max_variable_index() const {
  if (is_zero()) throw DomainError("max_variable_index of the zero polynomial");
  std::size_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.size());
  return static_cast<int>(best);
}

std::string CharPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return display_before(a->first, b->first);
  });
  std::string out;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    BigRational coeff = c;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string var = "x" + std::to_string(i + 1);
      if (e[i] == 1) {
        factors.push_back(var);
      } else {
        coeff *= factorial(static_cast<unsigned>(e[i]));
        factors.push_back("C(" + var + "," + std::to_string(e[i]) + ")");
      }
    }
    bool negative = coeff < 0;
    if (negative) coeff = -coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    if (factors.empty() || coeff != 1) body = coeff.get_str();
    for (const auto& f : factors) {
      if (!body.empty()) body += "*";
      body += f;
    }
    out += body;
  }
  return out;
}

CharPolynomial character_polynomial(const Partition& mu) {
  const int m = mu.size();
  if (m > kMaxCharPolyDegree) {
    throw ResourceError("character_polynomial: |mu| <= " +
                        std::to_string(kMaxCharPolyDegree) + " required");
  }
  if (m == 0) return CharPolynomial(Terms{{Exponents{}, BigRational(1)}});

  Terms sum;
  for (const auto& alpha : enumerate_cycle_types(m)) {
    BigInt chi = character(mu, alpha);
    if (chi == 0) continue;
    Terms product{{Exponents{}, BigRational(1)}};
    for (int i = 1; i <= m; ++i) {
      for (int rep = 0; rep < alpha.count(i); ++rep) {
        product = multiply(product, linear_factor(i));
      }
    }
    BigRational weight(chi, alpha.centralizer_order());
    weight.canonicalize();
    for (const auto& [e, c] : product) sum[e] += weight * c;
  }
  // Reading each ordinary monomial x^e as the falling-factorial basis element
  // (x)_e is exactly the falling map applied monomial-wise.
  return CharPolynomial(std::move(sum));
}

CharPolynomial character_polynomial_of(const Partition& lambda) {
  auto parts = lambda.parts();
  std::vector<int> rest(parts.begin() + (parts.empty() ? 0 : 1), parts.end());
  return character_polynomial(Partition(std::move(rest)));
}

}  // namespace symwalk
