#include "dualfvs/domination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dualfvs {

DominationGraph build_domination_graph(const EdgeColoredGraph& g,
                                       const std::vector<CompactRepresentation>& reps) {
  if (static_cast<int>(reps.size()) != g.colors())
    throw std::invalid_argument("need exactly one representation per color");
  DominationGraph h;
  h.copy_originals = g.vertices();
  for (int c = 0; c < static_cast<int>(reps.size()); ++c)
    for (int i = 0; i < static_cast<int>(reps[c].sets.size()); ++i) {
      const VertexSet& members = reps[c].sets[i];
      if (members.empty()) throw std::invalid_argument("empty set in representation");
      for (int v : members)
        if (!g.has_vertex(v))
          throw std::invalid_argument("representation member is not a vertex");
      h.sets.push_back({c + 1, i, members});
    }

  const int total = h.copy_count() + h.set_count() + 2;
  h.graph = SimpleGraph(total);
  for (int si = 0; si < h.set_count(); ++si)
    for (int v : h.sets[si].members) {
      int ci = static_cast<int>(std::lower_bound(h.copy_originals.begin(),
                                                 h.copy_originals.end(), v) -
                                h.copy_originals.begin());
      h.graph.add_edge(h.copy_vertex(ci), h.set_vertex(si));
    }
  for (int ci = 0; ci < h.copy_count(); ++ci)
    h.graph.add_edge(h.vstar(), h.copy_vertex(ci));
  h.graph.add_edge(h.vstar(), h.ustar());

  // Structural claims the search and the analysis rest on.
  if (!is_bipartite(h.graph)) throw std::logic_error("domination gadget is not bipartite");
  const int hplus1 = g.colors() + 1;
  for (int ci = 0; ci < h.copy_count(); ++ci) {
    if (h.graph.degree(h.copy_vertex(ci)) > hplus1)
      throw std::logic_error("copy-vertex degree exceeds color count + 1");
    // Within one collection the sets are disjoint, so a copy sees at most one
    // set-vertex per collection.
    std::vector<int> seen;
    for (int si = 0; si < h.set_count(); ++si)
      if (h.graph.has_edge(h.copy_vertex(ci), h.set_vertex(si)))
        seen.push_back(h.sets[si].collection);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::logic_error("copy-vertex adjacent to two sets of one collection");
  }
  if (degeneracy(h.graph) > hplus1)
    throw std::logic_error("domination gadget degeneracy exceeds color count + 1");
  return h;
}

std::optional<std::vector<int>> dominating_set_at_most(const SimpleGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("budget must be non-negative");
  const std::uint64_t all = g.all_vertices();

  std::vector<int> chosen;
  std::optional<std::vector<int>> best;
  auto search = [&](auto&& self, std::uint64_t dominated, int left) -> bool {
    if (dominated == all) {
      best = chosen;
      return true;
    }
    if (left == 0) return false;
    // Branch on an undominated vertex whose closed neighborhood is smallest;
    // one of its closed neighbors must be picked.
    int pivot = -1, pivot_size = 65;
    for (int v = 0; v < g.n; ++v) {
      if ((dominated >> v) & 1) continue;
      int size = std::popcount(g.closed_neighborhood(v));
      if (size < pivot_size) {
        pivot_size = size;
        pivot = v;
      }
    }
    std::uint64_t options = g.closed_neighborhood(pivot);
    for (int w = 0; w < g.n; ++w) {
      if (!((options >> w) & 1)) continue;
      chosen.push_back(w);
      if (self(self, dominated | g.closed_neighborhood(w), left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, 0, l)) return best;
  return std::nullopt;
}

std::optional<std::vector<int>> dominating_set_at_most(const DominationGraph& h, int l) {
  return dominating_set_at_most(h.graph, l);
}

VertexSet extract_mfvs_from_dominating(const DominationGraph& h,
                                       const std::vector<int>& d) {
  if (!h.graph.dominates(d)) throw std::invalid_argument("set does not dominate");
  VertexSet out;
  for (int x : d) {
    if (x == h.vstar() || x == h.ustar()) continue;  // apex picks carry no vertex
    if (x < h.copy_count()) {
      out.push_back(h.copy_originals[x]);
      continue;
    }
    // A chosen set-vertex is replaced by one of its copy neighbors.
    int si = x - h.copy_count();
    out.push_back(h.sets[si].members.front());
  }
  out = normalized(std::move(out));
  for (const auto& s : h.sets)
    if (set_intersection(out, s.members).empty())
      throw std::logic_error("extracted set misses a representation set");
  return out;
}

}  // namespace dualfvs
