#pragma once

#include <optional>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// One vertex set of size <= k hitting every monochromatic cycle of every
// color, or nullopt. Iterates over tuples of compact representations (one per
// color, budget k), turns each tuple into a domination gadget and looks for a
// dominating set of size <= k + 1. Requires k >= 0; any number of colors.
std::optional<VertexSet> solve_mfvs(const EdgeColoredGraph& g, int k);

// Every inclusion-minimal vertex set of size <= k hitting all monochromatic
// cycles. Per representation tuple, vertices with equal set membership are
// collapsed into interchangeability classes; minimal class covers of all sets
// are enumerated, expanded to vertex sets, then filtered to globally minimal
// and deduplicated.
SetFamily enumerate_minimal_mfvs(const EdgeColoredGraph& g, int k);

}  // namespace dualfvs
