#pragma once

// Small conveniences shared by the test suites.

#include <string_view>
#include <vector>

#include "symwalk/partitions.hpp"
#include "symwalk/rational.hpp"

namespace symwalk::testing {

inline CycleType ct(std::string_view text) { return CycleType::parse(text); }
inline Partition pt(std::string_view text) { return Partition::parse(text); }
inline BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// One m-cycle plus n - m fixed points.
inline CycleType single_cycle(int n, int m) {
  std::vector<int> lengths(static_cast<std::size_t>(n - m), 1);
  lengths.push_back(m);
  return CycleType::from_cycle_lengths(lengths);
}

/// Partition counts p(0..n) from Euler's pentagonal recurrence; independent
/// of the enumerator.
inline std::vector<long> partition_counts(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long s = (k % 2 == 1) ? 1 : -1;
      total += s * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += s * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

}  // namespace symwalk::testing
