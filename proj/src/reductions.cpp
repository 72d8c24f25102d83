#include "dualfvs/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualfvs {

namespace {

bool is_free(const ReducedInstance& inst, int v) {
  return !contains(inst.reference_set, v);
}

// Forces v: every remaining solution picks one vertex of v's choice set.
// Returns false when the choice set is empty or missing (v was barred), i.e.
// no solution compatible with the exclusions exists.
bool force_vertex(ReducedInstance& inst, int v) {
  auto it = inst.represents.find(v);
  if (it == inst.represents.end() || it->second.empty()) return false;
  VertexSet choice = it->second;
  inst.represents.erase(it);
  inst.forced_choices[choice.front()] = std::move(choice);
  inst.graph = inst.graph.delete_vertices({v});
  return true;
}

// Component labels of the reference-induced subgraph restricted to one color;
// used to detect a free vertex with two edges into one component, which
// closes a monochromatic cycle no other free vertex can hit.
std::map<int, int> reference_components(const ReducedInstance& inst, int color) {
  std::map<int, int> comp;
  int next = 0;
  for (int v : inst.reference_set) comp[v] = next++;
  // Union by relabeling; reference sets are small.
  for (const auto& e : inst.graph.edges()) {
    if (e.color != color) continue;
    if (!comp.count(e.u) || !comp.count(e.v)) continue;
    int a = comp[e.u], b = comp[e.v];
    if (a == b) continue;
    for (auto& [vertex, label] : comp)
      if (label == b) label = a;
  }
  return comp;
}

// One pass of the basic rules; returns true if something changed, sets
// `infeasible` when no reference-disjoint solution can exist.
bool basic_rules_step(ReducedInstance& inst, bool& infeasible) {
  const EdgeColoredGraph& g = inst.graph;

  // No reference-disjoint solution can hit a monochromatic cycle that lies
  // entirely inside the reference set.
  EdgeColoredGraph inside = g.induced(inst.reference_set);
  for (int c = 1; c <= g.colors(); ++c)
    if (!inside.is_acyclic(c)) {
      infeasible = true;
      return false;
    }

  // Forcing patterns at free vertices.
  for (int v : g.vertices()) {
    if (!is_free(inst, v)) continue;
    bool force = g.has_self_loop_at(v);
    for (int c = 1; c <= g.colors() && !force; ++c) {
      std::map<int, int> comp = reference_components(inst, c);
      std::map<int, int> hits;  // component label -> edge occurrences from v
      for (const auto& e : g.edges()) {
        if (e.color != c) continue;
        int other = -1;
        if (e.u == v) other = e.v;
        else if (e.v == v) other = e.u;
        if (other == -1 || !comp.count(other)) continue;
        if (++hits[comp[other]] >= 2) force = true;
      }
    }
    if (force) {
      if (!force_vertex(inst, v)) infeasible = true;
      return !infeasible;
    }
  }

  // Isolated free vertices lie on no cycle.
  for (int v : g.vertices()) {
    if (!is_free(inst, v)) continue;
    ColorDegree deg = g.color_degree(v);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; })) {
      inst.graph = g.delete_vertices({v});
      inst.represents.erase(v);
      return true;
    }
  }

  // A degree-1 edge endpoint (in its color) lies on no cycle of that color.
  for (int v : g.vertices()) {
    for (int c = 1; c <= g.colors(); ++c) {
      if (g.degree(v, c) != 1) continue;
      for (const auto& e : g.edges()) {
        if (e.color == c && (e.u == v || e.v == v)) {
          inst.graph = g.without_one_edge(e);
          return true;
        }
      }
    }
  }

  return false;
}

}  // namespace

VertexSet ReducedInstance::forced() const {
  VertexSet out;
  for (const auto& [rep, choice] : forced_choices) out.push_back(rep);
  return out;
}

ReducedInstance make_instance(EdgeColoredGraph g, VertexSet reference,
                              VertexSet excluded) {
  if (g.colors() != 2)
    throw std::invalid_argument("reduction rules require exactly two colors");
  reference = normalized(std::move(reference));
  excluded = normalized(std::move(excluded));
  for (int v : reference)
    if (!g.has_vertex(v)) throw std::invalid_argument("reference vertex not in graph");
  for (int v : excluded) {
    if (!g.has_vertex(v)) throw std::invalid_argument("excluded vertex not in graph");
    if (contains(reference, v))
      throw std::invalid_argument("excluded vertex inside the reference set");
  }
  ReducedInstance inst;
  inst.reference_set = std::move(reference);
  inst.excluded = std::move(excluded);
  for (int v : g.vertices())
    if (!contains(inst.reference_set, v) && !contains(inst.excluded, v))
      inst.represents[v] = {v};
  inst.graph = std::move(g);
  return inst;
}

std::optional<ReducedInstance> apply_basic_rules(ReducedInstance inst) {
  bool infeasible = false;
  while (basic_rules_step(inst, infeasible)) {
  }
  if (infeasible) return std::nullopt;
  return inst;
}

VertexClassification classify_vertices(const ReducedInstance& inst) {
  VertexClassification out;
  for (int v : inst.graph.vertices()) {
    if (!is_free(inst, v)) continue;
    int db = inst.graph.degree(v, kBlue);
    int dr = inst.graph.degree(v, kRed);
    if (db >= 3) out.high_blue.push_back(v);
    if (dr >= 3) out.high_red.push_back(v);
    if (db <= 2 && dr <= 2) out.low.push_back(v);
  }
  out.blue_path_count =
      static_cast<int>(maximal_monochromatic_paths(inst, kBlue).size());
  out.red_path_count =
      static_cast<int>(maximal_monochromatic_paths(inst, kRed).size());
  return out;
}

std::vector<MonochromePath> maximal_monochromatic_paths(const ReducedInstance& inst,
                                                        int color) {
  const EdgeColoredGraph& g = inst.graph;

  // Path vertices: free, exactly two proper color-c incidences (a color-c
  // self-loop is not a path pattern).
  VertexSet members;
  for (int v : g.vertices()) {
    if (!is_free(inst, v)) continue;
    if (g.degree(v, color) != 2) continue;
    bool loop_in_color = false;
    for (const auto& e : g.edges())
      if (e.color == color && e.u == v && e.v == v) loop_in_color = true;
    if (!loop_in_color) members.push_back(v);
  }

  // Edge occurrences with both endpoints inside `members`; every member has
  // at most two, so components are paths or cycles.
  struct Occ {
    int edge_id;
    int other;
  };
  std::map<int, std::vector<Occ>> adj;
  for (int v : members) adj[v] = {};
  const auto& edges = g.edges();
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const Edge& e = edges[id];
    if (e.color != color || e.u == e.v) continue;
    if (!contains(members, e.u) || !contains(members, e.v)) continue;
    adj[e.u].push_back({id, e.v});
    adj[e.v].push_back({id, e.u});
  }

  std::map<int, bool> used;
  for (int v : members) used[v] = false;

  auto walk = [&](int start, int avoid_edge) {
    // Follows internal occurrences from `start`, never reusing an edge
    // occurrence, until leaving `members` or returning to a used vertex.
    std::vector<int> order{start};
    used[start] = true;
    int at = start;
    int came_by = avoid_edge;
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

  std::vector<MonochromePath> paths;
  // Open paths first: start from members with at most one internal occurrence.
  for (int v : members) {
    if (used[v]) continue;
    if (adj[v].size() >= 2) continue;
    MonochromePath p;
    p.vertices = walk(v, -1);
    p.cyclic = false;
    paths.push_back(std::move(p));
  }
  // Remaining members sit on cycles of internal occurrences.
  for (int v : members) {
    if (used[v]) continue;
    MonochromePath p;
    p.vertices = walk(v, -1);
    p.cyclic = true;
    paths.push_back(std::move(p));
  }

  std::sort(paths.begin(), paths.end(), [](const MonochromePath& a, const MonochromePath& b) {
    return a.vertices < b.vertices;
  });
  return paths;
}

namespace {

// Merges the interchangeable vertices `group` onto its lowest member,
// dissolving the others. `both_colors` selects the two-color dissolve used
// for shared path vertices (degree 2 in blue and in red).
void merge_group(ReducedInstance& inst, const VertexSet& group, int color,
                 bool both_colors) {
  int keep = group.front();
  VertexSet pooled;
  if (auto it = inst.represents.find(keep); it != inst.represents.end())
    pooled = it->second;
  for (std::size_t i = 1; i < group.size(); ++i) {
    int gone = group[i];
    if (auto it = inst.represents.find(gone); it != inst.represents.end()) {
      pooled = set_union(pooled, it->second);
      inst.represents.erase(it);
    }
    if (both_colors) {
      VertexSet blue_nbrs, red_nbrs;
      for (const auto& e : inst.graph.edges()) {
        if (e.u != gone && e.v != gone) continue;
        int other = e.u == gone ? e.v : e.u;
        (e.color == kBlue ? blue_nbrs : red_nbrs).push_back(other);
      }
      EdgeColoredGraph g = inst.graph.delete_vertices({gone});
      g = g.with_edge(make_edge(blue_nbrs[0], blue_nbrs[1], kBlue));
      g = g.with_edge(make_edge(red_nbrs[0], red_nbrs[1], kRed));
      inst.graph = std::move(g);
    } else {
      inst.graph = inst.graph.dissolve_degree2(gone, color);
    }
  }
  if (!pooled.empty()) inst.represents[keep] = std::move(pooled);
}

// Finds one applicable path merge and performs it. Returns false at fixpoint.
bool path_rules_step(ReducedInstance& inst) {
  // Several degree-(2,0) vertices on one blue path (resp. (0,2) on a red
  // path) are interchangeable.
  for (int color : {kBlue, kRed}) {
    int other = color == kBlue ? kRed : kBlue;
    for (const MonochromePath& p : maximal_monochromatic_paths(inst, color)) {
      VertexSet group;
      for (int v : p.vertices)
        if (inst.graph.degree(v, other) == 0) group.push_back(v);
      group = normalized(std::move(group));
      if (group.size() >= 2) {
        merge_group(inst, group, color, false);
        return true;
      }
    }
  }
  // Vertices shared by one blue and one red path are interchangeable.
  auto blue_paths = maximal_monochromatic_paths(inst, kBlue);
  auto red_paths = maximal_monochromatic_paths(inst, kRed);
  for (const auto& pb : blue_paths) {
    VertexSet bset = normalized(pb.vertices);
    for (const auto& pr : red_paths) {
      VertexSet shared = set_intersection(bset, normalized(pr.vertices));
      if (shared.size() >= 2) {
        merge_group(inst, shared, 0, true);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<ReducedInstance> apply_path_rules(ReducedInstance inst) {
  std::optional<ReducedInstance> cur = apply_basic_rules(std::move(inst));
  while (cur) {
    if (!path_rules_step(*cur)) break;
    cur = apply_basic_rules(std::move(*cur));
  }
  return cur;
}

std::optional<ReducedInstance> reduce_instance(ReducedInstance inst) {
  return apply_path_rules(std::move(inst));
}

SetFamily expand_reduced_family(const ReducedInstance& inst, const SetFamily& reduced) {
  SetFamily out;
  for (const auto& t : reduced) {
    std::vector<const VertexSet*> choices;
    for (const auto& [rep, choice] : inst.forced_choices) choices.push_back(&choice);
    for (int v : t) {
      auto it = inst.represents.find(v);
      if (it == inst.represents.end())
        throw std::logic_error("reduced solution picks a vertex without a choice set");
      choices.push_back(&it->second);
    }
    SetFamily partial{{}};
    for (const VertexSet* c : choices) {
      SetFamily next;
      for (const auto& base : partial)
        for (int v : *c) {
          VertexSet s = base;
          s.push_back(v);
          next.push_back(std::move(s));
        }
      partial = std::move(next);
    }
    for (auto& s : partial) out.push_back(normalized(std::move(s)));
  }
  return normalized_family(std::move(out));
}

}  // namespace dualfvs
