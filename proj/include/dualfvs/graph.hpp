#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "dualfvs/family.hpp"

namespace dualfvs {

// Color ids are 1-based; instances with two colors use these two by convention.
constexpr int kBlue = 1;
constexpr int kRed = 2;

// One edge occurrence of an undirected multigraph, endpoints normalized u <= v.
// The same (u, v, color) triple may occur several times (parallel edges), and
// u == v encodes a self-loop.
struct Edge {
  int u = 0;
  int v = 0;
  int color = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int u, int v, int color);

// Entry c-1 holds the number of color-c edge incidences at a vertex; a
// self-loop contributes two.
using ColorDegree = std::vector<int>;

// A closed walk v0 .. v_{p-1}; edges[i] joins vertices[i] and
// vertices[(i+1) % p] and all edges share one color. Length 1 is a self-loop,
// length 2 a pair of parallel edges, length >= 3 a simple cycle.
struct Cycle {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

// Immutable undirected multigraph with colored edges. Vertices carry stable
// integer ids; operations return new graphs and never renumber. Edges are
// stored sorted by (u, v, color) so equal graphs compare equal.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(int colors, VertexSet vertices, std::vector<Edge> edges);

  int colors() const { return colors_; }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(int v) const;

  ColorDegree color_degree(int v) const;
  int degree(int v, int color) const;
  bool has_self_loop_at(int v) const;

  // True if the color class has no cycle; self-loops and parallel pairs of
  // the color count as cycles.
  bool is_acyclic(int color) const;
  std::optional<Cycle> find_monochromatic_cycle(int color) const;

  // Removes the listed vertices and their incident edges; ids not present are
  // ignored.
  EdgeColoredGraph delete_vertices(const VertexSet& drop) const;

  // Keeps exactly the listed vertices (and edges among them).
  EdgeColoredGraph induced(const VertexSet& keep) const;

  // Removes v, whose degree must be exactly 2 in `color`, 0 in every other
  // color, with no self-loop, and joins its two neighbors by a new edge of
  // that color (possibly a loop or a parallel edge). Monochromatic-cycle
  // structure on the remaining vertices is preserved.
  EdgeColoredGraph dissolve_degree2(int v, int color) const;

  EdgeColoredGraph with_edge(Edge e) const;
  // Removes one occurrence of e; throws if no occurrence exists.
  EdgeColoredGraph without_one_edge(const Edge& e) const;

  // Same vertices, only the edges of one color.
  EdgeColoredGraph restricted_to_color(int color) const;

  friend bool operator==(const EdgeColoredGraph&, const EdgeColoredGraph&) = default;

 private:
  void check_color(int color) const;
  void check_vertex(int v) const;

  int colors_ = 1;
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

// True if deleting s makes every color class acyclic.
bool is_feedback_vertex_set(const EdgeColoredGraph& g, const VertexSet& s);
// True if s is a feedback vertex set and no proper subset is.
bool is_minimal_feedback_vertex_set(const EdgeColoredGraph& g, const VertexSet& s);

// A directed graph; arcs are kept sorted and duplicate-free (set semantics).
struct Digraph {
  VertexSet vertices;
  std::vector<std::pair<int, int>> arcs;
};

Digraph make_digraph(VertexSet vertices, std::vector<std::pair<int, int>> arcs);

// Replaces every arc (u, v) by a fresh midpoint x with a blue edge ux and a
// red edge xv. Midpoints get ids max_id + 1, max_id + 2, ... following the
// sorted arc order. Directed cycles of the input correspond to the cycles of
// the result that alternate colors through midpoints.
EdgeColoredGraph digraph_to_alternating(const Digraph& d);

}  // namespace dualfvs
