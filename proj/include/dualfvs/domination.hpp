#pragma once

#include <optional>
#include <vector>

#include "dualfvs/compact_reps.hpp"
#include "dualfvs/graph.hpp"
#include "dualfvs/simple_graph.hpp"

namespace dualfvs {

// Auxiliary bipartite graph turning "hit every set of every collection" into
// domination. One copy-vertex per graph vertex, one set-vertex per set of
// every collection, membership edges between them, plus an apex pair: v*
// adjacent to every copy-vertex and to u*, u* adjacent only to v*. A
// dominating set of size l + 1 corresponds to l copy-vertices dominating all
// set-vertices (v* handles copies and u*; u* forces v* into play).
//
// Layout of the underlying SimpleGraph: copy-vertices first (index i is
// copy_originals[i]), then set-vertices, then v*, then u*.
struct DominationGraph {
  std::vector<int> copy_originals;  // copy index -> original vertex id
  struct SetInfo {
    int collection;  // color index, 1-based
    int index;       // position within that collection
    VertexSet members;
  };
  std::vector<SetInfo> sets;
  SimpleGraph graph;

  int copy_count() const { return static_cast<int>(copy_originals.size()); }
  int set_count() const { return static_cast<int>(sets.size()); }
  int copy_vertex(int i) const { return i; }
  int set_vertex(int i) const { return copy_count() + i; }
  int vstar() const { return copy_count() + set_count(); }
  int ustar() const { return vstar() + 1; }
};

// Builds the gadget for one representation per color. Checks the structural
// claims the search relies on (bipartite, copy degree <= h + 1, degeneracy
// <= h + 1, no empty set) and throws on violation.
DominationGraph build_domination_graph(const EdgeColoredGraph& g,
                                       const std::vector<CompactRepresentation>& reps);

// Exact: a dominating set of size <= l if one exists. Branches on an
// undominated vertex of minimum closed-neighborhood size, so low degeneracy
// keeps the branching narrow.
std::optional<std::vector<int>> dominating_set_at_most(const SimpleGraph& g, int l);
std::optional<std::vector<int>> dominating_set_at_most(const DominationGraph& h, int l);

// Original vertices obtained from a dominating set of the gadget: u* is
// traded for v*, v* is dropped, and every chosen set-vertex is replaced by
// its lowest copy neighbor. The result intersects every set of every
// collection; D must dominate.
VertexSet extract_mfvs_from_dominating(const DominationGraph& h,
                                       const std::vector<int>& d);

}  // namespace dualfvs
