#pragma once

#include <string>
#include <vector>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// A collection of pairwise disjoint, non-empty vertex sets. Picking exactly
// one vertex from every set yields a minimal feedback vertex set of the color
// class the representation was built for, and every transversal has the same
// size (the number of sets).
struct CompactRepresentation {
  std::vector<VertexSet> sets;  // canonical: each set ascending, sets sorted
  friend auto operator<=>(const CompactRepresentation&, const CompactRepresentation&) = default;
};

// All transversals of a representation, one vertex per set, as a canonical
// family. The empty representation yields { {} }.
SetFamily represented_solutions(const CompactRepresentation& rep);

// Text form "{1,2,3} {7}"; the empty representation prints "{}".
std::string format_representation(const CompactRepresentation& rep);

// Every inclusion-minimal feedback vertex set of the color class of g with at
// most k vertices, by exhaustive search. Each returned set is verified:
// deleting it makes the color acyclic and every proper subset fails to.
SetFamily enumerate_minimal_fvs(const EdgeColoredGraph& g, int color, int k);

// Compact representations covering exactly the minimal feedback vertex sets
// of the color class of g with at most k vertices: the union of all
// transversals over all returned representations equals
// enumerate_minimal_fvs(g, color, k). Built by collapsing the color class
// (degree <= 1 removal, then merging adjacent degree-2 vertices into chains)
// and enumerating minimal solutions of the collapsed multigraph; each chain
// becomes one set of interchangeable vertices.
std::vector<CompactRepresentation> enumerate_fvs_compact_reps(const EdgeColoredGraph& g,
                                                              int color, int k);

}  // namespace dualfvs
