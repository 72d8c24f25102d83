#pragma once

#include <optional>
#include <vector>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// Validity / minimality report for a proposed solution.
struct VerifyReport {
  // Entry c-1: a monochromatic cycle of color c left after deleting the set,
  // or nullopt when that color is acyclic.
  std::vector<std::optional<Cycle>> leftover_cycle;
  bool minimality_checked = false;
  // Vertices whose removal keeps the set valid (empty for a minimal set).
  VertexSet droppable;

  bool valid() const;
  bool minimal() const;  // valid, minimality checked, nothing droppable
};

// Checks that s hits every monochromatic cycle; with check_minimal also tests
// every drop-one subset. Throws on vertex ids not in g.
VerifyReport verify_solution(const EdgeColoredGraph& g, const VertexSet& s,
                             bool check_minimal);

}  // namespace dualfvs
