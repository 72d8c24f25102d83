#pragma once

#include <map>
#include <optional>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// Working state for the reduction rules on a two-colored instance with a
// reference set S. Solutions of interest are disjoint from S; the rules
// shrink the graph while keeping the family of minimal such solutions
// reconstructible:
//
//  - `represents` maps each pickable live vertex outside S to the non-empty
//    set of original vertices it stands for (interchangeable: swapping one
//    member for another maps solutions to solutions). A live free vertex
//    without an entry may not be picked; all originals it stood for are in
//    `excluded`.
//  - `forced_choices` maps a representative id to a non-empty choice set;
//    every solution of the instance contains exactly one member per entry.
//  - `excluded` lists original ids barred from solutions (used when an outer
//    search has already decided against them).
//
// The choice sets of `represents` and `forced_choices` are pairwise disjoint
// and disjoint from `excluded` and from the reference set.
struct ReducedInstance {
  EdgeColoredGraph graph;
  VertexSet reference_set;
  std::map<int, VertexSet> represents;
  std::map<int, VertexSet> forced_choices;
  VertexSet excluded;

  VertexSet forced() const;
  friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

// Fresh instance with singleton represents entries for every free,
// non-excluded vertex. Requires two colors, reference ⊆ vertices,
// excluded ⊆ vertices outside the reference set.
ReducedInstance make_instance(EdgeColoredGraph g, VertexSet reference,
                              VertexSet excluded = {});

// Degree and forcing rules, applied to a fixpoint:
//  - free vertices with a self-loop, or with two same-color edge occurrences
//    into one same-color component of the reference set, lie on a cycle whose
//    only free vertex they are: force them (delete, record the choice set);
//  - isolated vertices outside the reference set are deleted;
//  - edges whose endpoint has degree 1 in their color lie on no cycle and are
//    removed (any vertex).
// Returns nullopt when no reference-disjoint solution exists: a cycle inside
// the reference set, or a forced vertex whose whole choice set is excluded.
std::optional<ReducedInstance> apply_basic_rules(ReducedInstance inst);

// Free vertices split by color degrees; valid after apply_basic_rules.
struct VertexClassification {
  VertexSet high_blue;  // blue degree >= 3
  VertexSet high_red;   // red degree >= 3
  VertexSet low;        // both degrees <= 2
  int blue_path_count = 0;
  int red_path_count = 0;
};
VertexClassification classify_vertices(const ReducedInstance& inst);

// A maximal run of free vertices with color-c degree exactly 2, in path
// order. A run closing on itself (every neighbor inside the run) is returned
// once with cyclic = true, rotated to start at its lowest vertex.
struct MonochromePath {
  std::vector<int> vertices;
  bool cyclic = false;
};
std::vector<MonochromePath> maximal_monochromatic_paths(const ReducedInstance& inst,
                                                        int color);

// Path merging, interleaved with the basic rules to a global fixpoint:
//  - several vertices of one maximal monochromatic path whose other color
//    degree is 0 are interchangeable; dissolve all but the lowest;
//  - a blue and a red maximal path sharing >= 2 vertices: the shared vertices
//    are interchangeable; dissolve all but the lowest (in both colors).
// Returns nullopt only through the interleaved basic rules.
std::optional<ReducedInstance> apply_path_rules(ReducedInstance inst);

// apply_basic_rules then apply_path_rules (which re-runs the basic rules
// after every merge); the returned instance is a fixpoint of all rules.
std::optional<ReducedInstance> reduce_instance(ReducedInstance inst);

// Original-id solutions encoded by reduced-graph solutions: for each reduced
// solution T (live pickable vertices), every set formed by one choice per
// forced entry plus one choice from represents[t] for each t in T. Requires
// every member of every T to have a represents entry.
SetFamily expand_reduced_family(const ReducedInstance& inst, const SetFamily& reduced);

}  // namespace dualfvs
