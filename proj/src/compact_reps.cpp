#include "dualfvs/compact_reps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dualfvs/subsets.hpp"

namespace dualfvs {

SetFamily represented_solutions(const CompactRepresentation& rep) {
  SetFamily out{{}};
  for (const auto& set : rep.sets) {
    SetFamily next;
    for (const auto& partial : out)
      for (int v : set) {
        VertexSet t = partial;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return normalized_family(std::move(out));
}

std::string format_representation(const CompactRepresentation& rep) {
  if (rep.sets.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t i = 0; i < rep.sets.size(); ++i) {
    if (i) out << ' ';
    out << '{';
    for (std::size_t j = 0; j < rep.sets[i].size(); ++j) {
      if (j) out << ',';
      out << rep.sets[i][j];
    }
    out << '}';
  }
  return out.str();
}

SetFamily enumerate_minimal_fvs(const EdgeColoredGraph& g, int color, int k) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
  SetFamily found;
  const VertexSet& verts = g.vertices();
  for_each_subset_by_size(verts, k, [&](const VertexSet& cand) {
    for (const auto& prev : found)
      if (is_subset(prev, cand)) return;  // superset of a minimal solution
    if (g.delete_vertices(cand).is_acyclic(color)) found.push_back(cand);
  });
  // The ascending-size sweep with superset skipping already yields exactly the
  // inclusion-minimal solutions; verify both halves of that claim anyway.
  for (const auto& s : found) {
    if (!g.delete_vertices(s).is_acyclic(color))
      throw std::logic_error("enumerated set is not a solution");
    for (int v : s)
      if (g.delete_vertices(set_difference(s, {v})).is_acyclic(color))
        throw std::logic_error("enumerated set is not minimal");
  }
  return normalized_family(std::move(found));
}

std::vector<CompactRepresentation> enumerate_fvs_compact_reps(const EdgeColoredGraph& g,
                                                              int color, int k) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
  EdgeColoredGraph work = g.restricted_to_color(color);
  std::map<int, VertexSet> stands_for;
  for (int v : work.vertices()) stands_for[v] = {v};

  // Vertices of degree <= 1 in the color class lie on no cycle of it; peel
  // them off (cascading) together with their bookkeeping.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : work.vertices()) {
      if (work.degree(v, color) <= 1) {
        work = work.delete_vertices({v});
        stands_for.erase(v);
        changed = true;
        break;
      }
    }
  }

  // Merge adjacent degree-2 vertices: all vertices of a maximal chain lie on
  // exactly the same cycles, so a minimal solution never needs two of them and
  // any one of them can stand in for any other. Dissolving the higher vertex
  // of each adjacent pair leaves the lowest chain vertex carrying the whole
  // interchangeable set. A chain closing on itself collapses to a self-loop.
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : work.edges()) {
      if (e.u == e.v) continue;
      if (work.degree(e.u, color) != 2 || work.degree(e.v, color) != 2) continue;
      if (work.has_self_loop_at(e.u) || work.has_self_loop_at(e.v)) continue;
      int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
      work = work.dissolve_degree2(gone, color);
      stands_for[keep] = set_union(stands_for[keep], stands_for[gone]);
      stands_for.erase(gone);
      changed = true;
      break;
    }
  }

  SetFamily collapsed = enumerate_minimal_fvs(work, color, k);
  std::vector<CompactRepresentation> reps;
  for (const auto& sol : collapsed) {
    CompactRepresentation rep;
    for (int v : sol) rep.sets.push_back(stands_for.at(v));
    std::sort(rep.sets.begin(), rep.sets.end());
    reps.push_back(std::move(rep));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace dualfvs
