#include "symwalk/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace symwalk {

namespace {

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw DomainError("malformed integer '" + std::string(token) + "' in '" +
                      std::string(context) + "'");
  }
  return value;
}

std::size_t hash_ints(std::span<const int> values) noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : values) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

void partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    partitions_into(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

CycleType from_atoms(int n, std::initializer_list<std::pair<int, int>> atoms) {
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (auto [len, count] : atoms) {
    if (count > 0) mult[static_cast<std::size_t>(len - 1)] += count;
  }
  return CycleType(std::move(mult));
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw DomainError("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    parts.push_back(parse_int(token, text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(part(0)), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

int Partition::hook_length(int row, int col) const {
  if (row < 0 || col < 0 || col >= part(row)) return 0;
  int arm = part(row) - col - 1;
  int leg = 0;
  while (part(row + leg + 1) > col) ++leg;
  return arm + leg + 1;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out;
}

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(std::vector<int> multiplicities) {
  int n = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) {
      throw DomainError("cycle multiplicities must be nonnegative");
    }
    n += static_cast<int>(i + 1) * multiplicities[i];
  }
  if (n == 0) throw DomainError("cycle type of degree 0");
  multiplicities.resize(static_cast<std::size_t>(n), 0);
  multiplicities_ = std::move(multiplicities);
  n_ = n;
}

CycleType CycleType::from_cycle_lengths(std::span<const int> lengths) {
  int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (n <= 0) throw DomainError("cycle type of degree 0");
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (int len : lengths) {
    if (len <= 0) throw DomainError("cycle lengths must be positive");
    ++mult[static_cast<std::size_t>(len - 1)];
  }
  return CycleType(std::move(mult));
}

CycleType CycleType::from_partition(const Partition& lengths) {
  return from_cycle_lengths(lengths.parts());
}

CycleType CycleType::identity(int n) {
  if (n <= 0) throw DomainError("identity class needs n >= 1");
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  mult[0] = n;
  return CycleType(std::move(mult));
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> lengths;
  std::string_view rest = text;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t'; };
  while (!rest.empty()) {
    while (!rest.empty() && is_sep(rest.front())) rest.remove_prefix(1);
    if (rest.empty()) break;
    std::size_t end = 0;
    while (end < rest.size() && !is_sep(rest[end])) ++end;
    auto atom = rest.substr(0, end);
    rest.remove_prefix(end);
    auto caret = atom.find('^');
    int len = parse_int(atom.substr(0, caret), text);
    int count =
        caret == std::string_view::npos ? 1 : parse_int(atom.substr(caret + 1), text);
    if (len <= 0 || count < 0) {
      throw DomainError("malformed cycle type '" + std::string(text) + "'");
    }
    lengths.insert(lengths.end(), static_cast<std::size_t>(count), len);
  }
  if (lengths.empty()) {
    throw DomainError("empty cycle type '" + std::string(text) + "'");
  }
  return from_cycle_lengths(lengths);
}

Partition CycleType::cycle_lengths() const {
  std::vector<int> parts;
  for (int i = n_; i >= 1; --i) {
    parts.insert(parts.end(), static_cast<std::size_t>(count(i)), i);
  }
  return Partition(std::move(parts));
}

int CycleType::num_cycles() const {
  return std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0);
}

int CycleType::sign() const { return ((n_ - num_cycles()) % 2 == 0) ? 1 : -1; }

BigInt CycleType::centralizer_order() const {
  BigInt z = 1;
  for (int i = 1; i <= n_; ++i) {
    int a = count(i);
    if (a == 0) continue;
    BigInt ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(a));
    z *= factorial(static_cast<unsigned>(a)) * ipow;
  }
  return z;
}

BigInt CycleType::class_size() const {
  return BigInt(factorial(static_cast<unsigned>(n_)) / centralizer_order());
}

std::string CycleType::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    int a = count(i);
    if (a == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
    if (a > 1) out += '^' + std::to_string(a);
  }
  return out;
}

BigInt z_alpha(const CycleType& alpha) { return alpha.centralizer_order(); }

// ------------------------------------------------------------- enumeration

std::vector<Partition> enumerate_partitions_unchecked(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > kMaxEnumerationDegree) {
    throw DomainError("enumerate_partitions: n must lie in [1, " +
                      std::to_string(kMaxEnumerationDegree) + "], got " +
                      std::to_string(n));
  }
  return enumerate_partitions_unchecked(n);
}

std::vector<CycleType> enumerate_cycle_types(int n) {
  auto parts = enumerate_partitions(n);
  std::vector<CycleType> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(CycleType::from_partition(p));
  return out;
}

// --------------------------------------------------------- hooks, detectors

SubhookLengths subhook_lengths(const Partition& lambda) {
  return {lambda.hook_length(1, 0), lambda.hook_length(0, 1)};
}

bool is_i_cycle_detector(const Partition& lambda, int i) {
  if (i < 1 || i > lambda.size()) {
    throw DomainError("is_i_cycle_detector: need 1 <= i <= n");
  }
  auto [h21, h12] = subhook_lengths(lambda);
  return std::min(h21, h12) >= i;
}

FrobeniusCoordinates frobenius_coordinates(const Partition& lambda) {
  FrobeniusCoordinates out;
  Partition conj = lambda.conjugate();
  for (int d = 0; lambda.part(d) > d; ++d) {
    out.arms.push_back(lambda.part(d) - d - 1);
    out.legs.push_back(conj.part(d) - d - 1);
  }
  return out;
}

Partition two_row(int n, int i) {
  if (i < 0 || 2 * i > n) throw DomainError("two_row: need 0 <= i <= n/2");
  return Partition::from_unsorted({n - i, i});
}

Partition two_row_with_tail(int n, int i, int k) {
  if (k < 0 || k >= i || 2 * i > n) {
    throw DomainError("two_row_with_tail: need 0 <= k < i <= n/2");
  }
  std::vector<int> parts{n - i};
  if (i - k > 0) parts.push_back(i - k);
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

Partition hook(int n, int k) {
  if (k < 0 || k >= n) throw DomainError("hook: need 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

// ------------------------------------------------------------------ orders

bool is_total(OrderKind kind) { return kind != OrderKind::Majorization; }

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::CL: return "cl";
    case OrderKind::NegCL: return "neg-cl";
    case OrderKind::AltCL: return "alt-cl";
    case OrderKind::Majorization: return "majorization";
    case OrderKind::ReverseLex: return "reverse-lex";
    case OrderKind::LulovLex: return "lulov-lex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  for (auto kind : {OrderKind::CL, OrderKind::NegCL, OrderKind::AltCL,
                    OrderKind::Majorization, OrderKind::ReverseLex,
                    OrderKind::LulovLex}) {
    if (text == to_string(kind)) return kind;
  }
  throw DomainError("unknown order kind '" + std::string(text) + "'");
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Greater: return "greater";
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

int first_difference(const CycleType& alpha, const CycleType& beta) {
  int n = std::max(alpha.degree(), beta.degree());
  for (int i = 1; i <= n; ++i) {
    if (alpha.count(i) != beta.count(i)) return i;
  }
  return 0;
}

namespace {

Comparison compare_parts(OrderKind kind, const Partition& a,
                         const Partition& b) {
  int len = std::max(a.length(), b.length());
  switch (kind) {
    case OrderKind::Majorization: {
      bool a_ge = true, b_ge = true;
      int sa = 0, sb = 0;
      for (int j = 0; j < len; ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa < sb) a_ge = false;
        if (sb < sa) b_ge = false;
      }
      if (a_ge && b_ge) return Comparison::Equal;
      if (a_ge) return Comparison::Greater;
      if (b_ge) return Comparison::Less;
      return Comparison::Incomparable;
    }
    case OrderKind::ReverseLex:
      for (int j = 0; j < len; ++j) {
        if (a.part(j) != b.part(j)) {
          return a.part(j) > b.part(j) ? Comparison::Greater : Comparison::Less;
        }
      }
      return Comparison::Equal;
    case OrderKind::LulovLex:
      for (int j = len - 1; j >= 0; --j) {
        if (a.part(j) != b.part(j)) {
          return a.part(j) < b.part(j) ? Comparison::Greater : Comparison::Less;
        }
      }
      return Comparison::Equal;
    default:
      break;
  }
  throw UnsupportedError("compare_parts: not a part-sequence order");
}

}  // namespace

Comparison compare(OrderKind kind, const CycleType& alpha,
                   const CycleType& beta) {
  if (alpha.degree() != beta.degree()) {
    throw DomainError("compare: classes of different degree");
  }
  switch (kind) {
    case OrderKind::CL:
    case OrderKind::NegCL:
    case OrderKind::AltCL: {
      int i = first_difference(alpha, beta);
      if (i == 0) return Comparison::Equal;
      bool more = alpha.count(i) > beta.count(i);
      bool greater = kind == OrderKind::CL      ? more
                     : kind == OrderKind::NegCL ? !more
                     : (i % 2 == 1)             ? more
                                                : !more;
      return greater ? Comparison::Greater : Comparison::Less;
    }
    default:
      return compare_parts(kind, alpha.cycle_lengths(), beta.cycle_lengths());
  }
}

Comparison compare(OrderKind kind, const Partition& alpha,
                   const Partition& beta) {
  if (alpha.size() != beta.size()) {
    throw DomainError("compare: partitions of different size");
  }
  switch (kind) {
    case OrderKind::Majorization:
    case OrderKind::ReverseLex:
    case OrderKind::LulovLex:
      return compare_parts(kind, alpha, beta);
    default:
      return compare(kind, CycleType::from_partition(alpha),
                     CycleType::from_partition(beta));
  }
}

std::string to_string(ClassParity parity) {
  switch (parity) {
    case ClassParity::Any: return "any";
    case ClassParity::Even: return "even";
    case ClassParity::Odd: return "odd";
  }
  return "?";
}

bool matches(ClassParity parity, const CycleType& alpha) {
  switch (parity) {
    case ClassParity::Any: return true;
    case ClassParity::Even: return alpha.sign() == 1;
    case ClassParity::Odd: return alpha.sign() == -1;
  }
  return false;
}

// ---------------------------------------------------------------- extremes

namespace {

// Extremes of CL among classes of one sign. The n-cycle has sign (-1)^{n-1};
// the two-cycle class (floor(n/2), ceil(n/2)) has the other sign.
Extremes cl_extremes(int n, ClassParity parity) {
  CycleType identity = CycleType::identity(n);
  CycleType transposition = from_atoms(n, {{1, n - 2}, {2, 1}});
  CycleType full_cycle = from_atoms(n, {{n, 1}});
  CycleType halves = from_atoms(n, {{n / 2, 1}, {n - n / 2, 1}});
  if (parity == ClassParity::Any) return {identity, full_cycle};
  bool want_even = parity == ClassParity::Even;
  CycleType max = want_even ? identity : transposition;
  CycleType min = (full_cycle.sign() == 1) == want_even ? full_cycle : halves;
  return {max, min};
}

// Smallest AltCL classes: fixed-point free with the most 2-cycles. For n even
// these are (2^{n/2}) and (2^{(n-4)/2}, 4); for n odd (2^{(n-3)/2}, 3) and
// (2^{(n-5)/2}, 5). The two candidates always have opposite signs.
Extremes alt_cl_extremes(int n, ClassParity parity) {
  CycleType identity = CycleType::identity(n);
  CycleType transposition = from_atoms(n, {{1, n - 2}, {2, 1}});
  CycleType lowest, runner_up;
  if (n % 2 == 0) {
    lowest = from_atoms(n, {{2, n / 2}});
    runner_up = from_atoms(n, {{2, (n - 4) / 2}, {4, 1}});
  } else {
    lowest = from_atoms(n, {{2, (n - 3) / 2}, {3, 1}});
    runner_up = from_atoms(n, {{2, (n - 5) / 2}, {5, 1}});
  }
  if (parity == ClassParity::Any) return {identity, lowest};
  bool want_even = parity == ClassParity::Even;
  CycleType max = want_even ? identity : transposition;
  CycleType min = (lowest.sign() == 1) == want_even ? lowest : runner_up;
  return {max, min};
}

}  // namespace

Extremes extremes(OrderKind kind, int n, ClassParity parity) {
  if (n < 4) throw DomainError("extremes: need n >= 4");
  switch (kind) {
    case OrderKind::CL:
      return cl_extremes(n, parity);
    case OrderKind::NegCL: {
      auto e = cl_extremes(n, parity);
      return {e.min, e.max};
    }
    case OrderKind::AltCL:
      return alt_cl_extremes(n, parity);
    default:
      throw UnsupportedError("extremes: only CL, NegCL and AltCL are supported");
  }
}

}  // namespace symwalk

std::size_t std::hash<symwalk::Partition>::operator()(
    const symwalk::Partition& p) const noexcept {
  return symwalk::hash_ints(p.parts());
}

std::size_t std::hash<symwalk::CycleType>::operator()(
    const symwalk::CycleType& c) const noexcept {
  return symwalk::hash_ints(c.multiplicities());
}
