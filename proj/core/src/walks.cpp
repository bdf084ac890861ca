#include "symwalk/walks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "symwalk/characters.hpp"
#include "symwalk/parallel.hpp"

namespace symwalk {

std::string to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::Transposition: return "transposition";
    case WalkKind::LazyTransposition: return "lazy";
    case WalkKind::ThreeCycle: return "three-cycle";
    case WalkKind::NCycle: return "n-cycle";
    case WalkKind::Custom: return "custom";
  }
  return "?";
}

// ------------------------------------------------------------------ WalkSpec

WalkSpec::WalkSpec(WalkKind kind, int n, std::vector<StepEntry> step,
                   BigRational hold)
    : kind_(kind), n_(n), step_(std::move(step)), hold_(std::move(hold)) {}

WalkSpec WalkSpec::custom(int n, std::vector<StepEntry> step, BigRational hold) {
  if (n < 1) throw DomainError("walk degree must be positive");
  if (hold < 0 || hold >= 1) throw DomainError("hold probability must lie in [0, 1)");
  BigRational mass = hold;
  for (const auto& entry : step) {
    if (entry.cls.degree() != n) {
      throw DomainError("step class " + entry.cls.to_string() + " is not a class of S_" +
                        std::to_string(n));
    }
    if (entry.per_element < 0) throw DomainError("negative step probability");
    mass += entry.per_element * BigRational(entry.cls.class_size());
  }
  if (mass != 1) {
    throw DomainError("step probabilities sum to " + mass.get_str() + ", not 1");
  }
  // Canonical order: that of enumerate_cycle_types.
  auto classes = enumerate_cycle_types(n);
  auto rank = [&](const CycleType& c) {
    return std::find(classes.begin(), classes.end(), c) - classes.begin();
  };
  std::sort(step.begin(), step.end(), [&](const StepEntry& a, const StepEntry& b) {
    return rank(a.cls) < rank(b.cls);
  });
  for (std::size_t k = 1; k < step.size(); ++k) {
    if (step[k].cls == step[k - 1].cls) {
      throw DomainError("class " + step[k].cls.to_string() + " listed twice");
    }
  }
  std::erase_if(step, [](const StepEntry& e) { return e.per_element == 0; });
  if (step.empty()) throw DomainError("walk has empty step support");
  return WalkSpec(WalkKind::Custom, n, std::move(step), std::move(hold));
}

std::string WalkSpec::name() const {
  if (kind_ == WalkKind::LazyTransposition) return "lazy:" + hold_.get_str();
  return to_string(kind_);
}

std::optional<int> WalkSpec::step_sign() const {
  if (hold_ != 0) return std::nullopt;
  int s = step_.front().cls.sign();
  for (const auto& e : step_) {
    if (e.cls.sign() != s) return std::nullopt;
  }
  return s;
}

std::optional<int> WalkSpec::support_sign(long t) const {
  auto s = step_sign();
  if (!s) return std::nullopt;
  return (*s == -1 && t % 2 == 1) ? -1 : 1;
}

WalkSpec builtin_walk(WalkKind kind, int n, BigRational hold) {
  if (n < 3) throw DomainError("builtin walks need n >= 3");
  auto with = [n](std::initializer_list<std::pair<int, int>> atoms) {
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    for (auto [len, count] : atoms) mult[static_cast<std::size_t>(len - 1)] += count;
    return CycleType(std::move(mult));
  };
  auto uniform_on = [](const CycleType& cls, const BigRational& mass) {
    BigRational p = mass / BigRational(cls.class_size());
    return StepEntry{cls, p};
  };
  switch (kind) {
    case WalkKind::Transposition:
      if (hold != 0) throw DomainError("transposition walk does not hold; use lazy");
      return WalkSpec(kind, n, {uniform_on(with({{1, n - 2}, {2, 1}}), 1)}, 0);
    case WalkKind::LazyTransposition:
      if (hold < 0 || hold >= 1) throw DomainError("hold probability must lie in [0, 1)");
      return WalkSpec(kind, n, {uniform_on(with({{1, n - 2}, {2, 1}}), 1 - hold)},
                      hold);
    case WalkKind::ThreeCycle:
      if (hold != 0) throw DomainError("three-cycle walk does not hold");
      return WalkSpec(kind, n, {uniform_on(with({{1, n - 3}, {3, 1}}), 1)}, 0);
    case WalkKind::NCycle:
      if (hold != 0) throw DomainError("n-cycle walk does not hold");
      return WalkSpec(kind, n, {uniform_on(with({{n, 1}}), 1)}, 0);
    case WalkKind::Custom:
      break;
  }
  throw DomainError("builtin_walk: custom walks are built with WalkSpec::custom");
}

// ------------------------------------------------------------------ spectrum

BigRational eigenvalue(const WalkSpec& walk, const Partition& lambda) {
  if (lambda.size() != walk.degree()) {
    throw DomainError("eigenvalue: partition size does not match the walk");
  }
  BigInt dim = dimension(lambda);
  BigRational sum = 0;
  for (const auto& e : walk.step()) {
    sum += BigRational(e.cls.class_size()) * e.per_element *
           BigRational(character(lambda, e.cls));
  }
  BigRational ratio = sum / BigRational(dim);
  return walk.hold() + ratio;
}

std::vector<SpectralTerm> spectrum(const WalkSpec& walk) {
  auto partitions = enumerate_partitions(walk.degree());
  std::vector<SpectralTerm> out(partitions.size());
  parallel_for(partitions.size(), [&](std::size_t k) {
    out[k] = SpectralTerm{partitions[k], dimension(partitions[k]),
                          eigenvalue(walk, partitions[k])};
  });
  return out;
}

// --------------------------------------------------------- ClassDistribution

const BigRational& ClassDistribution::probability(const CycleType& alpha) const {
  auto it = std::find(classes.begin(), classes.end(), alpha);
  if (it == classes.end()) throw DomainError("class " + alpha.to_string() + " not in distribution");
  return probs[static_cast<std::size_t>(it - classes.begin())];
}

BigRational ClassDistribution::class_total(const CycleType& alpha) const {
  return probability(alpha) * BigRational(alpha.class_size());
}

BigRational ClassDistribution::total_mass() const {
  BigRational total = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    total += probs[k] * BigRational(classes[k].class_size());
  }
  return total;
}

ClassDistribution distribution(const WalkSpec& walk, long t) {
  if (t < 0) throw DomainError("distribution: t must be nonnegative");
  const int n = walk.degree();
  auto terms = spectrum(walk);
  ClassDistribution out;
  out.n = n;
  out.t = t;
  out.walk = walk.name();
  out.classes = enumerate_cycle_types(n);
  const std::size_t k_classes = out.classes.size();

  std::vector<std::vector<BigRational>> partial(terms.size());
  parallel_for(terms.size(), [&](std::size_t l) {
    const auto& term = terms[l];
    if (t > 0 && term.eigenvalue == 0) return;
    BigRational weight = BigRational(term.dim) * power(term.eigenvalue, static_cast<unsigned long>(t));
    auto& row = partial[l];
    row.resize(k_classes);
    for (std::size_t c = 0; c < k_classes; ++c) {
      row[c] = weight * BigRational(character(term.lambda, out.classes[c]));
    }
  });
  out.probs.assign(k_classes, BigRational(0));
  for (const auto& row : partial) {
    for (std::size_t c = 0; c < row.size(); ++c) out.probs[c] += row[c];
  }
  BigRational scale(1, factorial(static_cast<unsigned>(n)));
  for (auto& p : out.probs) p *= scale;
  return out;
}

BigRational difference(const WalkSpec& walk, long t, const CycleType& alpha,
                       const CycleType& beta) {
  if (t < 0) throw DomainError("difference: t must be nonnegative");
  const int n = walk.degree();
  if (alpha.degree() != n || beta.degree() != n) {
    throw DomainError("difference: classes do not belong to S_" + std::to_string(n));
  }
  if (alpha == beta) return 0;
  BigRational sum = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    BigInt delta = character(lambda, alpha) - character(lambda, beta);
    if (delta == 0) continue;
    BigRational c = eigenvalue(walk, lambda);
    if (t > 0 && c == 0) continue;
    sum += BigRational(delta * dimension(lambda)) * power(c, static_cast<unsigned long>(t));
  }
  return sum / BigRational(factorial(static_cast<unsigned>(n)));
}

// ---------------------------------------------------------- convolve oracle

namespace {

// Centre of the group algebra of S_n: K_j K_i = sum_k a[j][i][k] K_k.
struct ClassAlgebra {
  std::vector<CycleType> classes;
  std::vector<std::vector<std::vector<BigInt>>> a;
};

CycleType cycle_type_of(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  std::vector<char> seen(n, 0);
  std::vector<int> mult(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = 1;
      ++len;
    }
    ++mult[static_cast<std::size_t>(len - 1)];
  }
  return CycleType(std::move(mult));
}

std::vector<int> representative(const CycleType& c) {
  std::vector<int> perm;
  int start = 0;
  const Partition lengths = c.cycle_lengths();
  for (int len : lengths.parts()) {
    for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
    start += len;
  }
  return perm;
}

ClassAlgebra build_class_algebra(int n) {
  ClassAlgebra alg;
  alg.classes = enumerate_cycle_types(n);
  const std::size_t k = alg.classes.size();
  auto index_of = [&](const CycleType& c) {
    return static_cast<std::size_t>(
        std::find(alg.classes.begin(), alg.classes.end(), c) - alg.classes.begin());
  };

  std::vector<std::vector<int>> perms;
  std::vector<std::size_t> perm_class;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
    perm_class.push_back(index_of(cycle_type_of(p)));
  } while (std::next_permutation(p.begin(), p.end()));

  // b[j][i][k] = #{y in C_i : g_j y in C_k} for a fixed g_j in C_j.
  std::vector<std::vector<std::vector<long>>> b(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < k; ++j) {
    auto g = representative(alg.classes[j]);
    for (std::size_t y = 0; y < perms.size(); ++y) {
      const auto& h = perms[y];
      for (std::size_t x = 0; x < prod.size(); ++x) {
        prod[x] = g[static_cast<std::size_t>(h[x])];
      }
      ++b[j][perm_class[y]][index_of(cycle_type_of(prod))];
    }
  }
  // Pairs (x, y) in C_j x C_i with xy = z for a fixed z in C_k:
  // a = |C_j| b / |C_k|.
  alg.a.assign(k, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(k)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t m = 0; m < k; ++m) {
        BigInt num = alg.classes[j].class_size() * b[j][i][m];
        alg.a[j][i][m] = num / alg.classes[m].class_size();
      }
    }
  }
  return alg;
}

const ClassAlgebra& class_algebra(int n) {
  static std::mutex mutex;
  static std::map<int, ClassAlgebra> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_class_algebra(n)).first;
  return it->second;
}

}  // namespace

ClassDistribution convolve_oracle(const WalkSpec& walk, long t) {
  const int n = walk.degree();
  if (n > kMaxOracleDegree) {
    throw ResourceError("convolve_oracle: n <= " + std::to_string(kMaxOracleDegree) +
                        " required");
  }
  if (t < 0 || t > kMaxOracleTime) {
    throw ResourceError("convolve_oracle: 0 <= t <= " + std::to_string(kMaxOracleTime) +
                        " required");
  }
  const auto& alg = class_algebra(n);
  const std::size_t k = alg.classes.size();
  auto index_of = [&](const CycleType& c) {
    return static_cast<std::size_t>(
        std::find(alg.classes.begin(), alg.classes.end(), c) - alg.classes.begin());
  };

  std::vector<BigRational> step(k, BigRational(0));
  step[index_of(CycleType::identity(n))] += walk.hold();
  for (const auto& e : walk.step()) step[index_of(e.cls)] += e.per_element;

  std::vector<BigRational> f(k, BigRational(0));
  f[index_of(CycleType::identity(n))] = 1;
  for (long s = 0; s < t; ++s) {
    std::vector<BigRational> next(k, BigRational(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (f[j] == 0) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (step[i] == 0) continue;
        BigRational w = f[j] * step[i];
        for (std::size_t m = 0; m < k; ++m) {
          if (alg.a[j][i][m] != 0) next[m] += w * BigRational(alg.a[j][i][m]);
        }
      }
    }
    f = std::move(next);
  }

  ClassDistribution out;
  out.n = n;
  out.t = t;
  out.walk = walk.name();
  out.classes = alg.classes;
  out.probs = std::move(f);
  return out;
}

}  // namespace symwalk
