#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace torsionlab {

/// Key of one component of an alternating form: strictly increasing frame
/// indices in 1..n. Canonicalization of an arbitrary index tuple returns the
/// sorted key together with the permutation sign (0 when an index repeats).
using MultiIndex = std::vector<int>;

inline int permutation_sign(const std::vector<int>& idx) {
  int s = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) s = -s;
    }
  return s;
}

inline std::pair<int, MultiIndex> canonicalize(MultiIndex idx) {
  const int s = permutation_sign(idx);
  if (s == 0) return {0, {}};
  std::sort(idx.begin(), idx.end());
  return {s, std::move(idx)};
}

/// Complement of an increasing multi-index inside 1..n, increasing.
inline MultiIndex complement(const MultiIndex& idx, int n) {
  MultiIndex out;
  out.reserve(static_cast<std::size_t>(n) - idx.size());
  std::size_t p = 0;
  for (int i = 1; i <= n; ++i) {
    if (p < idx.size() && idx[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// All increasing multi-indices of length k in 1..n, in lexicographic order.
inline std::vector<MultiIndex> increasing_indices(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - (k - 1 - p)) --p;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q)
      cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

}  // namespace torsionlab
