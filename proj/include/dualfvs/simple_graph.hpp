#pragma once

#include <cstdint>
#include <vector>

namespace dualfvs {

// Undirected simple graph on vertices 0..n-1 with adjacency bitmasks, used
// for the domination construction. Capped at 64 vertices.
struct SimpleGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  SimpleGraph() = default;
  explicit SimpleGraph(int n_);

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int degree(int v) const;
  std::uint64_t closed_neighborhood(int v) const;  // N[v] = N(v) + v
  std::uint64_t all_vertices() const;

  // True if every vertex is in the closed neighborhood of some member of d.
  bool dominates(const std::vector<int>& d) const;
};

// Smallest d such that removing vertices in some order always finds a vertex
// of degree <= d (computed by repeatedly peeling a minimum-degree vertex).
int degeneracy(const SimpleGraph& g);

// True if the vertex set can be split into two sides with every edge across.
bool is_bipartite(const SimpleGraph& g);

}  // namespace dualfvs
