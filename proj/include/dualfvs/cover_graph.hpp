#pragma once

#include <vector>

#include "dualfvs/compact_reps.hpp"

namespace dualfvs {

// Auxiliary bipartite graph over the sets of two compact representations.
// One set-vertex per set; one edge per intersecting blue/red set pair,
// remembering a witness vertex of the intersection. Hitting both collections
// is equivalent to covering all set-vertices by edges (an edge kills both its
// endpoints via the witness) and leftover picks (one member per set).
struct CoverGraph {
  struct SetVertexInfo {
    int side;       // 0 = first (blue) collection, 1 = second (red)
    int index;      // position within its collection
    VertexSet members;
  };
  struct EdgeInfo {
    int blue_sv = 0;  // index into set_vertices
    int red_sv = 0;
    int witness = 0;  // lowest common member of the two sets
  };

  std::vector<SetVertexInfo> set_vertices;
  std::vector<EdgeInfo> edges;

  int blue_count() const;
  std::vector<int> incident_edges(int sv) const;
  std::vector<int> non_isolated() const;
};

CoverGraph build_cover_graph(const CompactRepresentation& blue,
                             const CompactRepresentation& red);

// Maximum bipartite matching by augmenting paths; returns edge indices.
// Guaranteed maximum: the search stops only when no augmenting path remains.
std::vector<int> max_matching(const CoverGraph& h);

// Minimum edge cover of the non-isolated set-vertices: a maximum matching
// extended by one edge per uncovered vertex. Its size is always
// (#non-isolated vertices) - (matching size); violations throw.
std::vector<int> min_edge_cover(const CoverGraph& h);

// One smallest vertex set hitting every set of both representations: edge
// cover witnesses plus the lowest member of every isolated set-vertex.
VertexSet min_hitting_from_reps(const CompactRepresentation& blue,
                                const CompactRepresentation& red);

// An element of a cover: either a set-vertex (pick one member of that set) or
// an edge (pick the witness, killing both endpoint sets).
struct CoverElement {
  enum class Kind { SetVertex, Edge };
  Kind kind = Kind::SetVertex;
  int id = 0;
  friend auto operator<=>(const CoverElement&, const CoverElement&) = default;
};

// Every inclusion-minimal mixed cover of all set-vertices using at most
// `budget` elements, where an edge covers its two endpoints and a set-vertex
// element covers itself.
std::vector<std::vector<CoverElement>> enumerate_minimal_covers(const CoverGraph& h,
                                                                int budget);

}  // namespace dualfvs
