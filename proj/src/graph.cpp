#include "dualfvs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dualfvs {

namespace {

// Plain union-find over dense indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

Edge make_edge(int u, int v, int color) {
  if (u > v) std::swap(u, v);
  return Edge{u, v, color};
}

EdgeColoredGraph::EdgeColoredGraph(int colors, VertexSet vertices, std::vector<Edge> edges)
    : colors_(colors), vertices_(normalized(std::move(vertices))), edges_(std::move(edges)) {
  if (colors_ < 1) throw std::invalid_argument("color count must be at least 1");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.color < 1 || e.color > colors_)
      throw std::invalid_argument("edge color out of range");
    if (!contains(vertices_, e.u) || !contains(vertices_, e.v))
      throw std::invalid_argument("edge endpoint is not a vertex");
  }
  std::sort(edges_.begin(), edges_.end());
}

bool EdgeColoredGraph::has_vertex(int v) const { return contains(vertices_, v); }

void EdgeColoredGraph::check_color(int color) const {
  if (color < 1 || color > colors_) throw std::invalid_argument("color out of range");
}

void EdgeColoredGraph::check_vertex(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

ColorDegree EdgeColoredGraph::color_degree(int v) const {
  check_vertex(v);
  ColorDegree deg(colors_, 0);
  for (const auto& e : edges_) {
    if (e.u == v) ++deg[e.color - 1];
    if (e.v == v) ++deg[e.color - 1];
  }
  return deg;
}

int EdgeColoredGraph::degree(int v, int color) const {
  check_vertex(v);
  check_color(color);
  int d = 0;
  for (const auto& e : edges_) {
    if (e.color != color) continue;
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

bool EdgeColoredGraph::has_self_loop_at(int v) const {
  check_vertex(v);
  for (const auto& e : edges_)
    if (e.u == v && e.v == v) return true;
  return false;
}

bool EdgeColoredGraph::is_acyclic(int color) const {
  check_color(color);
  Dsu dsu(vertex_count());
  auto index_of = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                            vertices_.begin());
  };
  for (const auto& e : edges_) {
    if (e.color != color) continue;
    if (e.u == e.v) return false;
    if (!dsu.unite(index_of(e.u), index_of(e.v))) return false;
  }
  return true;
}

std::optional<Cycle> EdgeColoredGraph::find_monochromatic_cycle(int color) const {
  check_color(color);

  // Self-loops are length-1 cycles.
  for (const auto& e : edges_)
    if (e.color == color && e.u == e.v) return Cycle{{e.u}, {e}};

  // Indexed incidence lists; parallel edges keep distinct occurrence ids so a
  // parallel pair closes a length-2 cycle without reusing the tree edge.
  const int n = vertex_count();
  auto index_of = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                            vertices_.begin());
  };
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge id, other endpoint index)
  for (int id = 0; id < edge_count(); ++id) {
    const auto& e = edges_[id];
    if (e.color != color) continue;
    adj[index_of(e.u)].push_back({id, index_of(e.v)});
    adj[index_of(e.v)].push_back({id, index_of(e.u)});
  }

  // Depth-first search with explicit frames (one adjacency cursor per active
  // vertex) so that, as in the recursive formulation, the first non-tree edge
  // encountered always leads to an ancestor of the active vertex.
  std::vector<int> parent(n, -1), parent_edge(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<char> visited(n, 0);
  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<int> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      if (cursor[x] == adj[x].size()) {
        stack.pop_back();
        continue;
      }
      auto [id, y] = adj[x][cursor[x]++];
      if (id == parent_edge[x]) continue;  // skip the one tree-edge occurrence
      if (!visited[y]) {
        visited[y] = 1;
        parent[y] = x;
        parent_edge[y] = id;
        stack.push_back(y);
      } else {
        // Back edge: walk the parent chain from x up to the ancestor y.
        Cycle cyc;
        int w = x;
        while (w != y) {
          cyc.vertices.push_back(vertices_[w]);
          cyc.edges.push_back(edges_[parent_edge[w]]);
          w = parent[w];
        }
        cyc.vertices.push_back(vertices_[y]);
        std::reverse(cyc.vertices.begin(), cyc.vertices.end());
        std::reverse(cyc.edges.begin(), cyc.edges.end());
        cyc.edges.push_back(edges_[id]);
        return cyc;
      }
    }
  }
  return std::nullopt;
}

EdgeColoredGraph EdgeColoredGraph::delete_vertices(const VertexSet& drop) const {
  VertexSet gone = normalized(drop);
  EdgeColoredGraph out;
  out.colors_ = colors_;
  out.vertices_ = set_difference(vertices_, gone);
  for (const auto& e : edges_)
    if (!contains(gone, e.u) && !contains(gone, e.v)) out.edges_.push_back(e);
  return out;
}

EdgeColoredGraph EdgeColoredGraph::induced(const VertexSet& keep) const {
  return delete_vertices(set_difference(vertices_, normalized(keep)));
}

EdgeColoredGraph EdgeColoredGraph::dissolve_degree2(int v, int color) const {
  check_vertex(v);
  check_color(color);
  if (has_self_loop_at(v))
    throw std::invalid_argument("cannot dissolve a vertex with a self-loop");
  ColorDegree deg = color_degree(v);
  for (int c = 1; c <= colors_; ++c) {
    int want = (c == color) ? 2 : 0;
    if (deg[c - 1] != want)
      throw std::invalid_argument("dissolve requires degree 2 in the color and 0 elsewhere");
  }
  std::vector<int> nbrs;
  for (const auto& e : edges_) {
    if (e.color != color) continue;
    if (e.u == v) nbrs.push_back(e.v);
    if (e.v == v) nbrs.push_back(e.u);
  }
  EdgeColoredGraph out = delete_vertices({v});
  return out.with_edge(make_edge(nbrs[0], nbrs[1], color));
}

EdgeColoredGraph EdgeColoredGraph::with_edge(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  check_vertex(e.u);
  check_vertex(e.v);
  check_color(e.color);
  EdgeColoredGraph out = *this;
  out.edges_.insert(std::upper_bound(out.edges_.begin(), out.edges_.end(), e), e);
  return out;
}

EdgeColoredGraph EdgeColoredGraph::without_one_edge(const Edge& e) const {
  Edge key = make_edge(e.u, e.v, e.color);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw std::invalid_argument("edge not found");
  EdgeColoredGraph out = *this;
  out.edges_.erase(out.edges_.begin() + (it - edges_.begin()));
  return out;
}

EdgeColoredGraph EdgeColoredGraph::restricted_to_color(int color) const {
  check_color(color);
  EdgeColoredGraph out;
  out.colors_ = colors_;
  out.vertices_ = vertices_;
  for (const auto& e : edges_)
    if (e.color == color) out.edges_.push_back(e);
  return out;
}

bool is_feedback_vertex_set(const EdgeColoredGraph& g, const VertexSet& s) {
  EdgeColoredGraph rest = g.delete_vertices(s);
  for (int c = 1; c <= g.colors(); ++c)
    if (!rest.is_acyclic(c)) return false;
  return true;
}

bool is_minimal_feedback_vertex_set(const EdgeColoredGraph& g, const VertexSet& s) {
  if (!is_feedback_vertex_set(g, s)) return false;
  for (int v : s) {
    VertexSet smaller = set_difference(s, {v});
    if (is_feedback_vertex_set(g, smaller)) return false;
  }
  return true;
}

Digraph make_digraph(VertexSet vertices, std::vector<std::pair<int, int>> arcs) {
  Digraph d;
  d.vertices = normalized(std::move(vertices));
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [u, v] : arcs)
    if (!contains(d.vertices, u) || !contains(d.vertices, v))
      throw std::invalid_argument("arc endpoint is not a vertex");
  d.arcs = std::move(arcs);
  return d;
}

EdgeColoredGraph digraph_to_alternating(const Digraph& d) {
  int next_id = d.vertices.empty() ? 0 : d.vertices.back();
  VertexSet verts = d.vertices;
  std::vector<Edge> edges;
  for (auto [u, v] : d.arcs) {
    int mid = ++next_id;
    verts.push_back(mid);
    edges.push_back(make_edge(u, mid, kBlue));
    edges.push_back(make_edge(mid, v, kRed));
  }
  return EdgeColoredGraph(2, std::move(verts), std::move(edges));
}

}  // namespace dualfvs
