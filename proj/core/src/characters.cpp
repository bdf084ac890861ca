#include "symwalk/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "symwalk/parallel.hpp"

namespace symwalk {

namespace {

// Memo key: partition parts, a -1 separator, then the remaining cycle
// lengths in decreasing order.
using MemoKey = std::vector<int>;

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v + 2) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

class MnCache {
 public:
  bool find(const MemoKey& key, BigInt& out) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }
  // Entries are write-once: a concurrent writer computed the same value.
  void insert(MemoKey key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    values_.try_emplace(std::move(key), value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, BigInt, MemoKeyHash> values_;
};

MnCache& cache() {
  static MnCache instance;
  return instance;
}

// Removes every border strip of length `strip` from `parts` via the beta-set
// (abacus) picture: a strip of length m corresponds to sliding one bead from
// x to x - m onto an empty position; the height is the number of beads
// jumped over.
template <typename Visit>
void for_each_strip_removal(const std::vector<int>& parts, int strip,
                            Visit&& visit) {
  const int r = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int j = 0; j < r; ++j) {
    beta[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)] + (r - 1 - j);
  }
  // beta is strictly decreasing.
  for (int j = 0; j < r; ++j) {
    int x = beta[static_cast<std::size_t>(j)];
    int y = x - strip;
    if (y < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), y, std::greater<>())) continue;
    int jumped = 0;
    for (int v : beta) {
      if (v > y && v < x) ++jumped;
    }
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(j)] = y;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    next.reserve(parts.size());
    for (int k = 0; k < r; ++k) {
      int part = moved[static_cast<std::size_t>(k)] - (r - 1 - k);
      if (part > 0) next.push_back(part);
    }
    visit(std::move(next), jumped % 2 == 0 ? 1 : -1);
  }
}

BigInt mn_recurse(const std::vector<int>& parts, std::span<const int> cycles) {
  if (cycles.empty()) return parts.empty() ? 1 : 0;
  if (cycles.size() == 1) {
    // Only a single strip can remain: lambda itself must be a hook of the
    // right size.
    BigInt single = 0;
    for_each_strip_removal(parts, cycles.front(),
                           [&](std::vector<int> next, int sign) {
                             if (next.empty()) single += sign;
                           });
    return single;
  }
  MemoKey key(parts);
  key.push_back(-1);
  key.insert(key.end(), cycles.begin(), cycles.end());
  BigInt value;
  if (cache().find(key, value)) return value;

  value = 0;
  for_each_strip_removal(parts, cycles.front(),
                         [&](std::vector<int> next, int sign) {
                           BigInt sub = mn_recurse(next, cycles.subspan(1));
                           if (sign > 0) value += sub; else value -= sub;
                         });
  cache().insert(std::move(key), value);
  return value;
}

}  // namespace

BigInt character(const Partition& lambda, const CycleType& alpha) {
  if (lambda.size() != alpha.degree()) {
    throw DomainError("character: partition of " + std::to_string(lambda.size()) +
                      " paired with a class of S_" + std::to_string(alpha.degree()));
  }
  Partition lengths = alpha.cycle_lengths();
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  return mn_recurse(parts, lengths.parts());
}

BigInt dimension(const Partition& lambda) {
  BigInt hooks = 1;
  for (int row = 0; row < lambda.length(); ++row) {
    for (int col = 0; col < lambda.part(row); ++col) {
      hooks *= lambda.hook_length(row, col);
    }
  }
  return BigInt(factorial(static_cast<unsigned>(lambda.size())) / hooks);
}

BigRational char_ratio(const Partition& lambda, const CycleType& alpha) {
  BigRational q(character(lambda, alpha), dimension(lambda));
  q.canonicalize();
  return q;
}

BigRational transposition_ratio_lambda_ik(int n, int i, int k) {
  if (k < 0 || k >= i || 2 * i > n) {
    throw DomainError("transposition_ratio_lambda_ik: need 0 <= k < i <= n/2");
  }
  BigRational q(BigInt(i) * (n - i + k + 1), binomial(n, 2));
  q.canonicalize();
  return 1 - q;
}

BigRational three_cycle_ratio(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 3) throw DomainError("three_cycle_ratio: need n >= 3");
  auto [arms, legs] = frobenius_coordinates(lambda);
  auto pyramid = [](long a) -> BigInt { return BigInt(a) * (a + 1) * (2 * a + 1); };
  BigInt m3 = 0;
  for (std::size_t j = 0; j < arms.size(); ++j) {
    m3 += pyramid(arms[j]) + pyramid(legs[j]);
  }
  BigInt falling = BigInt(n) * (n - 1) * (n - 2);
  BigRational lead(m3, 2 * falling);
  BigRational shift(3, 2 * (n - 2));
  lead.canonicalize();
  shift.canonicalize();
  return lead - shift;
}

int ncycle_character(const Partition& lambda) {
  if (lambda.part(1) > 1) return 0;
  int k = lambda.length() - 1;
  return k % 2 == 0 ? 1 : -1;
}

void clear_character_cache() { cache().clear(); }
std::size_t character_cache_size() { return cache().size(); }

// ----------------------------------------------------------- CharacterTable

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions,
                               std::vector<CycleType> classes,
                               std::vector<BigInt> chi, std::vector<BigInt> dims)
    : n_(n),
      partitions_(std::move(partitions)),
      classes_(std::move(classes)),
      chi_(std::move(chi)),
      dims_(std::move(dims)) {}

std::size_t CharacterTable::partition_index(const Partition& lambda) const {
  auto it = std::find(partitions_.begin(), partitions_.end(), lambda);
  if (it == partitions_.end()) throw DomainError("partition not in table");
  return static_cast<std::size_t>(it - partitions_.begin());
}

std::size_t CharacterTable::class_index(const CycleType& alpha) const {
  auto it = std::find(classes_.begin(), classes_.end(), alpha);
  if (it == classes_.end()) throw DomainError("class not in table");
  return static_cast<std::size_t>(it - classes_.begin());
}

const BigInt& CharacterTable::at(const Partition& lambda,
                                 const CycleType& alpha) const {
  return at(partition_index(lambda), class_index(alpha));
}

CharacterTable build_table(int n) {
  if (n < 1) throw DomainError("build_table: need n >= 1");
  if (n > kMaxTableDegree) {
    throw ResourceError("build_table: full tables are limited to n <= " +
                        std::to_string(kMaxTableDegree) +
                        "; use character() per entry");
  }
  auto partitions = enumerate_partitions(n);
  auto classes = enumerate_cycle_types(n);
  const std::size_t rows = partitions.size(), cols = classes.size();
  std::vector<BigInt> chi(rows * cols);
  std::vector<BigInt> dims(rows);
  parallel_for(rows, [&](std::size_t r) {
    dims[r] = dimension(partitions[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      chi[r * cols + c] = character(partitions[r], classes[c]);
    }
  });
  return CharacterTable(n, std::move(partitions), std::move(classes),
                        std::move(chi), std::move(dims));
}

}  // namespace symwalk
