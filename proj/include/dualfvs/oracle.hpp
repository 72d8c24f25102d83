#pragma once

#include "dualfvs/cover_graph.hpp"
#include "dualfvs/graph.hpp"
#include "dualfvs/simple_graph.hpp"

namespace dualfvs {

// Ground truth by exhaustive search. These routines do not share any logic
// with the reduction or representation machinery they are used to check; they
// enumerate subsets directly and test definitions.

// All inclusion-minimal vertex sets of size <= k whose deletion makes every
// color class acyclic, skipping vertices in `forbidden`. Caps: at most 16
// vertices and k <= 6; beyond that the call throws instead of stalling.
SetFamily oracle_minimal_mfvs_family(const EdgeColoredGraph& g, int k,
                                     const VertexSet& forbidden = {});

// A minimum edge cover of the non-isolated set-vertices of h by exhaustive
// search over edge subsets (at most 20 edges).
std::vector<int> oracle_min_edge_cover(const CoverGraph& h);

// A minimum dominating set by exhaustive search (at most 14 vertices).
std::vector<int> oracle_min_dominating_set(const SimpleGraph& g);

}  // namespace dualfvs
