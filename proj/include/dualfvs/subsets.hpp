#pragma once

#include <vector>

#include "dualfvs/family.hpp"

namespace dualfvs {

// Calls f once for every subset of `pool` with at most `max_size` elements,
// in order of increasing size and lexicographically within one size. `pool`
// must be sorted; subsets are passed sorted. Enumerating by size first lets
// callers skip supersets of already-accepted sets, which turns the sweep into
// an inclusion-minimal enumeration.
template <typename F>
void for_each_subset_by_size(const VertexSet& pool, int max_size, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (max_size > n) max_size = n;
  VertexSet current;
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> idx(size);
    // Iterative choose(n, size) in lexicographic index order.
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      if (size == 0) {
        f(current);
        break;
      }
      current.clear();
      for (int i : idx) current.push_back(pool[i]);
      f(current);
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace dualfvs
