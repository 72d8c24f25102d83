#include "dualfvs/dfvs_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dualfvs/compact_reps.hpp"
#include "dualfvs/cover_graph.hpp"
#include "dualfvs/reductions.hpp"
#include "dualfvs/subsets.hpp"

namespace dualfvs {

namespace {

void check_two_colors(const EdgeColoredGraph& g) {
  if (g.colors() != 2) throw std::invalid_argument("this solver requires exactly two colors");
}

void check_budget(int k) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
}

}  // namespace

std::optional<VertexSet> solve_dfvs(const EdgeColoredGraph& g, int k) {
  check_two_colors(g);
  check_budget(k);
  auto reps_blue = enumerate_fvs_compact_reps(g, kBlue, k);
  auto reps_red = enumerate_fvs_compact_reps(g, kRed, k);
  // A solution within budget restricts to a minimal feedback vertex set of
  // each color within budget, so empty rep lists settle the decision.
  for (const auto& cb : reps_blue)
    for (const auto& cr : reps_red) {
      VertexSet hit = min_hitting_from_reps(cb, cr);
      if (static_cast<int>(hit.size()) > k) continue;
      if (!is_feedback_vertex_set(g, hit))
        throw std::logic_error("hitting set is not a solution");
      return hit;
    }
  return std::nullopt;
}

SetFamily enumerate_dfvs_algoA(const EdgeColoredGraph& g, int k, AlgoAStats* stats) {
  check_two_colors(g);
  check_budget(k);
  AlgoAStats local;
  SetFamily candidates;
  auto reps_blue = enumerate_fvs_compact_reps(g, kBlue, k);
  auto reps_red = enumerate_fvs_compact_reps(g, kRed, k);
  for (const auto& cb : reps_blue)
    for (const auto& cr : reps_red) {
      CoverGraph h = build_cover_graph(cb, cr);
      for (const auto& cover : enumerate_minimal_covers(h, k)) {
        ++local.covers_expanded;
        // Choice set per element: an edge stands for the whole intersection
        // of its endpoint sets, a set-vertex element for its whole set.
        std::vector<VertexSet> choices;
        for (const CoverElement& el : cover) {
          if (el.kind == CoverElement::Kind::Edge) {
            const auto& e = h.edges[el.id];
            choices.push_back(set_intersection(h.set_vertices[e.blue_sv].members,
                                               h.set_vertices[e.red_sv].members));
          } else {
            choices.push_back(h.set_vertices[el.id].members);
          }
        }
        SetFamily partial{{}};
        for (const auto& choice : choices) {
          SetFamily next;
          for (const auto& base : partial)
            for (int v : choice) {
              VertexSet s = base;
              s.push_back(v);
              next.push_back(std::move(s));
            }
          partial = std::move(next);
        }
        for (auto& s : partial) {
          ++local.transversals_generated;
          candidates.push_back(normalized(std::move(s)));
        }
      }
    }

  candidates = normalized_family(std::move(candidates));
  SetFamily out;
  for (const auto& s : candidates) {
    if (static_cast<int>(s.size()) > k) {
      ++local.filtered_over_budget;
      continue;
    }
    if (!is_feedback_vertex_set(g, s)) {
      ++local.filtered_invalid;
      continue;
    }
    if (!is_minimal_feedback_vertex_set(g, s)) {
      ++local.filtered_non_minimal;
      continue;
    }
    out.push_back(s);
  }
  if (stats) *stats = local;
  return normalized_family(std::move(out));
}

namespace {

// Exact fraction on 64-bit words; enough headroom for the weight updates of
// the local-ratio rounds at desk scale (overflows throw rather than wrap).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    n /= a;
    d /= a;
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("weight arithmetic overflow");
    return Rational{static_cast<long long>(n), static_cast<long long>(d)};
  }
  static Rational whole(long long n) { return Rational{n, 1}; }

  bool is_zero() const { return num == 0; }
  Rational minus(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Rational over(long long d) const { return make(num, static_cast<__int128>(den) * d); }
  Rational times(long long f) const { return make(static_cast<__int128>(num) * f, den); }
  bool less_than(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
};

// Removes vertices of degree <= 1 in the color class, cascading.
EdgeColoredGraph peel_acyclic_fringe(EdgeColoredGraph g, int color) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : g.vertices())
      if (g.degree(v, color) <= 1) {
        g = g.delete_vertices({v});
        changed = true;
        break;
      }
  }
  return g;
}

// A cycle in which every vertex except at most one has degree exactly 2 in
// the (already peeled, min degree >= 2) color class; empty when none exists.
VertexSet find_semidisjoint_cycle(const EdgeColoredGraph& g, int color) {
  // A self-loop is a one-vertex cycle, exceptional vertex at most itself.
  for (const auto& e : g.edges())
    if (e.color == color && e.u == e.v) return {e.u};

  VertexSet deg2;
  for (int v : g.vertices())
    if (g.degree(v, color) == 2 && !g.has_self_loop_at(v)) deg2.push_back(v);

  // Internal occurrences between two degree-2 vertices; components of these
  // are paths or cycles.
  struct Occ {
    int edge_id;
    int other;
  };
  std::map<int, std::vector<Occ>> adj;
  for (int v : deg2) adj[v] = {};
  const auto& edges = g.edges();
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const Edge& e = edges[id];
    if (e.color != color || e.u == e.v) continue;
    if (contains(deg2, e.u) && contains(deg2, e.v)) {
      adj[e.u].push_back({id, e.v});
      adj[e.v].push_back({id, e.u});
    }
  }

  std::map<int, bool> used;
  for (int v : deg2) used[v] = false;
  auto walk = [&](int start) {
    std::vector<int> order{start};
    used[start] = true;
    int at = start, came_by = -1;
    for (;;) {
      int next = -1, via = -1;
      for (const Occ& o : adj[at])
        if (o.edge_id != came_by && !used[o.other]) {
          next = o.other;
          via = o.edge_id;
          break;
        }
      if (next == -1) break;
      used[next] = true;
      order.push_back(next);
      at = next;
      came_by = via;
    }
    return order;
  };
  auto outer_neighbors = [&](int v) {
    // Endpoints (with multiplicity) of v's color occurrences that leave deg2.
    std::vector<int> out;
    for (const auto& e : edges) {
      if (e.color != color) continue;
      int other = -1;
      if (e.u == v) other = e.v;
      else if (e.v == v) other = e.u;
      if (other != -1 && !contains(deg2, other)) out.push_back(other);
    }
    return out;
  };

  // Chains: if both outer attachments land on the same vertex w, the chain
  // plus w is a cycle with w its only vertex of degree != 2.
  for (int v : deg2) {
    if (used[v] || adj[v].size() >= 2) continue;
    std::vector<int> chain = walk(v);
    std::vector<int> attach = outer_neighbors(chain.front());
    if (chain.size() > 1) {
      auto tail = outer_neighbors(chain.back());
      attach.insert(attach.end(), tail.begin(), tail.end());
    }
    if (attach.size() == 2 && attach[0] == attach[1]) {
      chain.push_back(attach[0]);
      return normalized(std::move(chain));
    }
  }
  // Pure cycles of degree-2 vertices.
  for (int v : deg2) {
    if (used[v]) continue;
    return normalized(walk(v));
  }
  return {};
}

}  // namespace

VertexSet fvs_2approx(const EdgeColoredGraph& g, int color) {
  const EdgeColoredGraph base = g.restricted_to_color(color);
  EdgeColoredGraph work = peel_acyclic_fringe(base, color);
  std::map<int, Rational> weight;
  for (int v : work.vertices()) weight[v] = Rational::whole(1);

  std::vector<int> picked;  // in pick order, for the reverse sweep
  while (work.vertex_count() > 0) {
    VertexSet cyc = find_semidisjoint_cycle(work, color);
    if (!cyc.empty()) {
      Rational gamma = weight.at(cyc.front());
      for (int v : cyc)
        if (weight.at(v).less_than(gamma)) gamma = weight.at(v);
      for (int v : cyc) weight.at(v) = weight.at(v).minus(gamma);
    } else {
      // No semidisjoint cycle: reduce proportionally to degree - 1 (the
      // peeled graph has min degree >= 2, so this is well defined).
      bool first = true;
      Rational gamma;
      for (int v : work.vertices()) {
        Rational r = weight.at(v).over(work.degree(v, color) - 1);
        if (first || r.less_than(gamma)) {
          gamma = r;
          first = false;
        }
      }
      for (int v : work.vertices())
        weight.at(v) = weight.at(v).minus(gamma.times(work.degree(v, color) - 1));
    }
    VertexSet zeroed;
    for (int v : work.vertices())
      if (weight.at(v).is_zero()) zeroed.push_back(v);
    for (int v : zeroed) picked.push_back(v);
    work = peel_acyclic_fringe(work.delete_vertices(zeroed), color);
    for (int v : zeroed) weight.erase(v);
  }

  // Reverse minimality sweep against the full color class.
  VertexSet result = normalized(picked);
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    VertexSet without = set_difference(result, {*it});
    if (base.delete_vertices(without).is_acyclic(color)) result = without;
  }
  if (!base.delete_vertices(result).is_acyclic(color))
    throw std::logic_error("approximation result is not a feedback vertex set");
  return result;
}

SetFamily enumerate_disjoint_dfvs(const EdgeColoredGraph& g, const VertexSet& s_in,
                                  int budget, DisjointDiagnostics* diag) {
  check_two_colors(g);
  check_budget(budget);
  VertexSet s = normalized(s_in);
  for (int v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("reference vertex not in graph");
  if (!is_feedback_vertex_set(g, s))
    throw std::invalid_argument("reference set is not a solution");

  SetFamily out;
  auto reduced = reduce_instance(make_instance(g, s));
  if (!reduced) return out;
  const ReducedInstance inst0 = *std::move(reduced);
  if (static_cast<int>(inst0.forced_choices.size()) > budget) return out;

  VertexClassification cls = classify_vertices(inst0);
  VertexSet high = set_union(cls.high_blue, cls.high_red);
  int guess_budget = budget - static_cast<int>(inst0.forced_choices.size());

  for_each_subset_by_size(high, guess_budget, [&](const VertexSet& y) {
    ReducedInstance branch = inst0;
    // High vertices outside y are out of this branch's solutions for good;
    // the ones in y are committed.
    for (int u : set_difference(high, y)) {
      auto it = branch.represents.find(u);
      if (it == branch.represents.end()) continue;
      branch.excluded = set_union(branch.excluded, it->second);
      branch.represents.erase(it);
    }
    for (int u : y) {
      auto it = branch.represents.find(u);
      if (it == branch.represents.end()) return;  // barred vertex, dead branch
      VertexSet choice = it->second;
      branch.represents.erase(it);
      branch.forced_choices[choice.front()] = std::move(choice);
    }
    branch.graph = branch.graph.delete_vertices(y);

    auto rr = reduce_instance(std::move(branch));
    if (!rr) return;
    const ReducedInstance& bi = *rr;
    int z_budget = budget - static_cast<int>(bi.forced_choices.size());

    VertexSet pickable;
    for (const auto& [v, choice] : bi.represents) pickable.push_back(v);

    SetFamily completions;
    if (z_budget >= 0) {
      for_each_subset_by_size(pickable, z_budget, [&](const VertexSet& z) {
        for (const auto& prev : completions)
          if (is_subset(prev, z)) return;
        if (is_feedback_vertex_set(bi.graph, z)) completions.push_back(z);
      });
    }
    bool produced = false;
    if (!completions.empty()) {
      for (const auto& sol : expand_reduced_family(bi, completions)) {
        if (!is_feedback_vertex_set(g, sol))
          throw std::logic_error("expanded set is not a solution");
        out.push_back(sol);
        produced = true;
      }
    }
    if (diag) {
      VertexClassification bcls = classify_vertices(bi);
      diag->branches.push_back(
          {static_cast<int>(s.size()),
           static_cast<int>(set_union(bcls.high_blue, bcls.high_red).size()),
           bcls.blue_path_count, bcls.red_path_count, produced});
    }
  });

  // Completeness of the branching makes the antichain of the collected sets
  // exactly the minimal family.
  return prune_non_minimal(std::move(out));
}

SetFamily enumerate_minimal_dfvs(const EdgeColoredGraph& g, int k,
                                 DisjointDiagnostics* diag) {
  check_two_colors(g);
  check_budget(k);
  VertexSet x = set_union(fvs_2approx(g, kBlue), fvs_2approx(g, kRed));
  if (!is_feedback_vertex_set(g, x))
    throw std::logic_error("approximation union is not a solution");

  SetFamily out;
  for_each_subset_by_size(x, k, [&](const VertexSet& y) {
    EdgeColoredGraph rest = g.delete_vertices(y);
    SetFamily sub = enumerate_disjoint_dfvs(rest, set_difference(x, y),
                                            k - static_cast<int>(y.size()), diag);
    for (const auto& t : sub) out.push_back(set_union(y, t));
  });
  for (const auto& sol : out)
    if (!is_feedback_vertex_set(g, sol))
      throw std::logic_error("combined set is not a solution");
  return prune_non_minimal(std::move(out));
}

}  // namespace dualfvs
