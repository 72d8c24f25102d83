#include "dualfvs/family.hpp"

#include <algorithm>

namespace dualfvs {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SetFamily normalized_family(SetFamily f) {
  for (auto& s : f) s = normalized(std::move(s));
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_antichain(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j && is_subset(f[i], f[j])) return false;
  return true;
}

SetFamily prune_non_minimal(SetFamily f) {
  f = normalized_family(std::move(f));
  SetFamily out;
  for (const auto& s : f) {
    bool has_proper_subset = false;
    for (const auto& t : f) {
      if (t != s && is_subset(t, s)) {
        has_proper_subset = true;
        break;
      }
    }
    if (!has_proper_subset) out.push_back(s);
  }
  return out;
}

}  // namespace dualfvs
