#pragma once

#include <vector>

namespace dualfvs {

// A vertex set is kept sorted ascending and duplicate-free; a family of sets
// is kept sorted lexicographically and duplicate-free. All solver outputs use
// these canonical forms so families can be compared with operator==.
using VertexSet = std::vector<int>;
using SetFamily = std::vector<VertexSet>;

VertexSet normalized(VertexSet s);
SetFamily normalized_family(SetFamily f);

bool contains(const VertexSet& s, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// True if no member of f contains another member.
bool is_antichain(const SetFamily& f);

// Keeps only the inclusion-minimal members of f.
SetFamily prune_non_minimal(SetFamily f);

}  // namespace dualfvs
