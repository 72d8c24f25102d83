#include "dualfvs/verify.hpp"

#include <stdexcept>
#include <string>

namespace dualfvs {

bool VerifyReport::valid() const {
  for (const auto& c : leftover_cycle)
    if (c) return false;
  return true;
}

bool VerifyReport::minimal() const {
  return valid() && minimality_checked && droppable.empty();
}

VerifyReport verify_solution(const EdgeColoredGraph& g, const VertexSet& s,
                             bool check_minimal) {
  VertexSet sol = normalized(s);
  for (int v : sol)
    if (!g.has_vertex(v))
      throw std::invalid_argument("unknown vertex " + std::to_string(v));

  VerifyReport report;
  EdgeColoredGraph rest = g.delete_vertices(sol);
  for (int c = 1; c <= g.colors(); ++c)
    report.leftover_cycle.push_back(rest.find_monochromatic_cycle(c));

  if (check_minimal) {
    report.minimality_checked = true;
    if (report.valid())
      for (int v : sol)
        if (is_feedback_vertex_set(g, set_difference(sol, {v})))
          report.droppable.push_back(v);
  }
  return report;
}

}  // namespace dualfvs
