#include "dualfvs/simple_graph.hpp"

#include <bit>
#include <stdexcept>

namespace dualfvs {

SimpleGraph::SimpleGraph(int n_) : n(n_), adj(n_, 0) {
  if (n_ < 0 || n_ > 64) throw std::invalid_argument("vertex count must be in 0..64");
}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("vertex out of range");
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  adj[a] |= std::uint64_t{1} << b;
  adj[b] |= std::uint64_t{1} << a;
}

bool SimpleGraph::has_edge(int a, int b) const { return (adj[a] >> b) & 1; }

int SimpleGraph::degree(int v) const { return std::popcount(adj[v]); }

std::uint64_t SimpleGraph::closed_neighborhood(int v) const {
  return adj[v] | (std::uint64_t{1} << v);
}

std::uint64_t SimpleGraph::all_vertices() const {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool SimpleGraph::dominates(const std::vector<int>& d) const {
  std::uint64_t covered = 0;
  for (int v : d) covered |= closed_neighborhood(v);
  return covered == all_vertices();
}

int degeneracy(const SimpleGraph& g) {
  std::uint64_t alive = g.all_vertices();
  int best = 0;
  while (alive) {
    int min_deg = 65, min_v = -1;
    for (int v = 0; v < g.n; ++v) {
      if (!((alive >> v) & 1)) continue;
      int d = std::popcount(g.adj[v] & alive);
      if (d < min_deg) {
        min_deg = d;
        min_v = v;
      }
    }
    if (min_deg > best) best = min_deg;
    alive &= ~(std::uint64_t{1} << min_v);
  }
  return best;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> queue{root};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y = 0; y < g.n; ++y) {
        if (!g.has_edge(x, y)) continue;
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace dualfvs
