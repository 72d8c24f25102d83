#include "dualfvs/mfvs_engine.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "dualfvs/compact_reps.hpp"
#include "dualfvs/domination.hpp"
#include "dualfvs/subsets.hpp"

namespace dualfvs {

namespace {

void check_budget(int k) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
}

// Calls f with every tuple of one representation per color, lexicographic in
// the per-color lists. Returns true if some f returned true (early stop).
bool for_each_rep_tuple(const std::vector<std::vector<CompactRepresentation>>& per_color,
                        const std::function<bool(const std::vector<const CompactRepresentation*>&)>& f) {
  std::vector<const CompactRepresentation*> tuple(per_color.size());
  std::function<bool(std::size_t)> walk = [&](std::size_t c) -> bool {
    if (c == per_color.size()) return f(tuple);
    for (const auto& rep : per_color[c]) {
      tuple[c] = &rep;
      if (walk(c + 1)) return true;
    }
    return false;
  };
  return walk(0);
}

std::vector<std::vector<CompactRepresentation>> reps_per_color(const EdgeColoredGraph& g,
                                                               int k) {
  std::vector<std::vector<CompactRepresentation>> out;
  for (int c = 1; c <= g.colors(); ++c)
    out.push_back(enumerate_fvs_compact_reps(g, c, k));
  return out;
}

}  // namespace

std::optional<VertexSet> solve_mfvs(const EdgeColoredGraph& g, int k) {
  check_budget(k);
  auto per_color = reps_per_color(g, k);
  // An empty list for some color means no within-budget feedback vertex set
  // of that color exists at all.
  std::optional<VertexSet> found;
  for_each_rep_tuple(per_color, [&](const std::vector<const CompactRepresentation*>& tuple) {
    std::vector<CompactRepresentation> reps;
    for (const auto* r : tuple) reps.push_back(*r);
    DominationGraph h = build_domination_graph(g, reps);
    auto d = dominating_set_at_most(h, k + 1);
    if (!d) return false;
    VertexSet sol = extract_mfvs_from_dominating(h, *d);
    if (static_cast<int>(sol.size()) > k) return false;
    if (!is_feedback_vertex_set(g, sol))
      throw std::logic_error("extracted set is not a solution");
    found = std::move(sol);
    return true;
  });
  return found;
}

SetFamily enumerate_minimal_mfvs(const EdgeColoredGraph& g, int k) {
  check_budget(k);
  auto per_color = reps_per_color(g, k);
  SetFamily out;
  for_each_rep_tuple(per_color, [&](const std::vector<const CompactRepresentation*>& tuple) {
    // Pool all sets of the tuple and group vertices by which sets contain
    // them. Two vertices with the same membership signature are
    // interchangeable, so search runs over classes, not vertices.
    std::vector<const VertexSet*> sets;
    for (const auto* rep : tuple)
      for (const auto& s : rep->sets) sets.push_back(&s);
    const int ns = static_cast<int>(sets.size());

    std::map<std::vector<int>, VertexSet> classes;  // signature -> members
    for (int v : g.vertices()) {
      std::vector<int> sig;
      for (int i = 0; i < ns; ++i)
        if (contains(*sets[i], v)) sig.push_back(i);
      if (!sig.empty()) classes[std::move(sig)].push_back(v);
    }
    std::vector<const std::vector<int>*> sig_of;  // class -> covered sets
    std::vector<const VertexSet*> members_of;
    for (const auto& [sig, members] : classes) {
      sig_of.push_back(&sig);
      members_of.push_back(&members);
    }
    const int nc = static_cast<int>(sig_of.size());

    // Minimal collections of classes covering every set, up to k classes.
    std::vector<std::vector<char>> found_covers;
    std::vector<int> idx;
    std::function<void(int, int, std::vector<char>&)> walk = [&](int start, int left,
                                                                 std::vector<char>& covered) {
      bool full = true;
      for (int i = 0; i < ns; ++i)
        if (!covered[i]) {
          full = false;
          break;
        }
      if (full) {
        // Drop-one minimality over the chosen classes.
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
          std::vector<char> rest(ns, 0);
          for (std::size_t i = 0; i < idx.size(); ++i)
            if (i != drop)
              for (int s : *sig_of[idx[i]]) rest[s] = 1;
          bool still = true;
          for (int i = 0; i < ns; ++i)
            if (!rest[i]) {
              still = false;
              break;
            }
          if (still) return;
        }
        std::vector<char> mark(nc, 0);
        for (int i : idx) mark[i] = 1;
        found_covers.push_back(std::move(mark));
        return;
      }
      if (left == 0) return;
      for (int i = start; i < nc; ++i) {
        std::vector<char> next = covered;
        for (int s : *sig_of[i]) next[s] = 1;
        idx.push_back(i);
        walk(i + 1, left - 1, next);
        idx.pop_back();
      }
    };
    std::vector<char> covered0(ns, 0);
    walk(0, k, covered0);

    // Expand each class cover to vertex sets, one member per class.
    for (const auto& mark : found_covers) {
      SetFamily partial{{}};
      for (int i = 0; i < nc; ++i) {
        if (!mark[i]) continue;
        SetFamily next;
        for (const auto& base : partial)
          for (int v : *members_of[i]) {
            VertexSet s = base;
            s.push_back(v);
            next.push_back(std::move(s));
          }
        partial = std::move(next);
      }
      for (auto& s : partial) out.push_back(normalized(std::move(s)));
    }
    return false;
  });

  out = normalized_family(std::move(out));
  SetFamily result;
  for (const auto& s : out) {
    if (static_cast<int>(s.size()) > k) continue;
    if (!is_feedback_vertex_set(g, s)) continue;
    if (!is_minimal_feedback_vertex_set(g, s)) continue;
    result.push_back(s);
  }
  return normalized_family(std::move(result));
}

}  // namespace dualfvs
