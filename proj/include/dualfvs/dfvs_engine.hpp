#pragma once

#include <optional>
#include <vector>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// One solution of size <= k hitting all blue and all red cycles, or nullopt.
// Works by pairing compact representations of the two color classes and
// covering the resulting intersection graph with a minimum edge cover.
// Requires exactly two colors and k >= 0.
std::optional<VertexSet> solve_dfvs(const EdgeColoredGraph& g, int k);

// Counters for the cover-based enumeration; purely informational.
struct AlgoAStats {
  long long covers_expanded = 0;
  long long transversals_generated = 0;
  long long filtered_non_minimal = 0;  // transversals dropped by the final filter
  long long filtered_invalid = 0;      // transversals that were not solutions
  long long filtered_over_budget = 0;
};

// Every inclusion-minimal solution of size <= k, via minimal mixed covers of
// all representation pairs: an edge element contributes the intersection of
// its endpoint sets, a set-vertex element its whole set; transversals of
// those candidate sets are filtered to valid, minimal, within-budget sets.
SetFamily enumerate_dfvs_algoA(const EdgeColoredGraph& g, int k,
                               AlgoAStats* stats = nullptr);

// A feedback vertex set of one color class at most twice the minimum size,
// by local-ratio weight reduction (semidisjoint cycles first, then
// degree-proportional rounds) followed by a reverse minimality sweep. Exact
// rational weights, no floating point.
VertexSet fvs_2approx(const EdgeColoredGraph& g, int color);

// Per-branch observations of enumerate_disjoint_dfvs, for studying how large
// the guessed part and the path counts get in branches that matter.
struct DisjointBranchStats {
  int reference_size = 0;
  int high_count = 0;        // vertices with blue or red degree >= 3 after reducing
  int blue_path_count = 0;
  int red_path_count = 0;
  bool produced_solution = false;
};
struct DisjointDiagnostics {
  std::vector<DisjointBranchStats> branches;
};

// Every inclusion-minimal solution disjoint from s with at most `budget`
// vertices. s must be a solution itself (throws otherwise): its cycles
// structure the search. Reduces against s, guesses the high-degree part of
// the solution, re-reduces each branch, exhausts the low-degree part, and
// expands the recorded choice sets back to original ids.
SetFamily enumerate_disjoint_dfvs(const EdgeColoredGraph& g, const VertexSet& s,
                                  int budget, DisjointDiagnostics* diag = nullptr);

// Every inclusion-minimal solution of size <= k: take the union X of the
// 2-approximations of both colors, guess the intersection Y of a solution
// with X, and enumerate solutions of g - Y disjoint from X - Y with budget
// k - |Y|.
SetFamily enumerate_minimal_dfvs(const EdgeColoredGraph& g, int k,
                                 DisjointDiagnostics* diag = nullptr);

}  // namespace dualfvs
