#include "dualfvs/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "dualfvs/subsets.hpp"

namespace dualfvs {

SetFamily oracle_minimal_mfvs_family(const EdgeColoredGraph& g, int k,
                                     const VertexSet& forbidden) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
  if (g.vertex_count() > 16)
    throw std::invalid_argument("oracle cap exceeded: more than 16 vertices");
  if (k > 6) throw std::invalid_argument("oracle cap exceeded: budget above 6");

  VertexSet pool = set_difference(g.vertices(), normalized(forbidden));
  SetFamily found;
  for_each_subset_by_size(pool, k, [&](const VertexSet& cand) {
    for (const auto& prev : found)
      if (is_subset(prev, cand)) return;
    if (is_feedback_vertex_set(g, cand)) found.push_back(cand);
  });
  return normalized_family(std::move(found));
}

std::vector<int> oracle_min_edge_cover(const CoverGraph& h) {
  const int m = static_cast<int>(h.edges.size());
  if (m > 20) throw std::invalid_argument("oracle cap exceeded: more than 20 edges");
  std::vector<int> noniso = h.non_isolated();
  std::uint64_t want = 0;
  for (int sv : noniso) want |= std::uint64_t{1} << sv;

  std::vector<int> best;
  bool have_best = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t covered = 0;
    int size = 0;
    for (int ei = 0; ei < m; ++ei)
      if ((mask >> ei) & 1) {
        covered |= std::uint64_t{1} << h.edges[ei].blue_sv;
        covered |= std::uint64_t{1} << h.edges[ei].red_sv;
        ++size;
      }
    if ((covered & want) != want) continue;
    if (!have_best || size < static_cast<int>(best.size())) {
      best.clear();
      for (int ei = 0; ei < m; ++ei)
        if ((mask >> ei) & 1) best.push_back(ei);
      have_best = true;
    }
  }
  if (!have_best) throw std::logic_error("no edge cover exists");
  return best;
}

std::vector<int> oracle_min_dominating_set(const SimpleGraph& g) {
  if (g.n > 14) throw std::invalid_argument("oracle cap exceeded: more than 14 vertices");
  std::vector<int> best;
  int best_size = g.n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
    if (std::popcount(mask) >= best_size) continue;
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v)
      if ((mask >> v) & 1) d.push_back(v);
    if (g.dominates(d)) {
      best = std::move(d);
      best_size = static_cast<int>(best.size());
    }
  }
  if (best_size > g.n) {
    if (g.n == 0) return {};
    // Every graph is dominated by its full vertex set, so this is unreachable.
    throw std::logic_error("no dominating set found");
  }
  return best;
}

}  // namespace dualfvs
