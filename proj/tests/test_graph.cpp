#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "dualfvs/graph.hpp"
#include "dualfvs/subsets.hpp"
#include "test_util.hpp"

using namespace dualfvs;

namespace {

EdgeColoredGraph blue_triangle() {
  return EdgeColoredGraph(2, {1, 2, 3},
                          {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue)});
}

// Independent check that a reported cycle really is a closed single-color walk
// of g using pairwise distinct edge occurrences.
bool cycle_is_genuine(const EdgeColoredGraph& g, const Cycle& cyc, int color) {
  const std::size_t p = cyc.vertices.size();
  if (p == 0 || cyc.edges.size() != p) return false;
  std::map<Edge, int> used;
  for (std::size_t i = 0; i < p; ++i) {
    Edge want = make_edge(cyc.vertices[i], cyc.vertices[(i + 1) % p], color);
    if (cyc.edges[i] != want) return false;
    ++used[want];
  }
  for (const auto& [e, count] : used) {
    int have = static_cast<int>(std::count(g.edges().begin(), g.edges().end(), e));
    if (count > have) return false;
  }
  // Vertices of a cycle are pairwise distinct (length 1 and 2 included).
  VertexSet vs = normalized(cyc.vertices);
  return vs.size() == p;
}

// Forest test that shares nothing with EdgeColoredGraph::is_acyclic: a color
// class without loops or parallel edges is acyclic iff every connected
// component has exactly (size - 1) edges.
bool forest_by_rank(const EdgeColoredGraph& g, int color) {
  std::map<int, int> parent;
  for (int v : g.vertices()) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int merges = 0, edges = 0;
  for (const auto& e : g.edges()) {
    if (e.color != color) continue;
    ++edges;
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return edges == merges;
}

}  // namespace

TEST_CASE("edges normalize and order") {
  Edge e = make_edge(5, 2, kRed);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(e.color == kRed);
  CHECK(make_edge(2, 5, kRed) == e);
  CHECK(make_edge(1, 9, kBlue) < make_edge(2, 5, kRed));
}

TEST_CASE("construction validates endpoints and colors") {
  CHECK_THROWS_AS(EdgeColoredGraph(2, {1, 2}, {make_edge(1, 3, kBlue)}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoredGraph(2, {1, 2}, {make_edge(1, 2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoredGraph(0, {1}, {}), std::invalid_argument);
  EdgeColoredGraph g(2, {3, 1, 2}, {make_edge(2, 1, kBlue)});
  CHECK(g.vertices() == VertexSet{1, 2, 3});
}

TEST_CASE("degrees count loops twice") {
  EdgeColoredGraph g(2, {1, 2},
                     {make_edge(1, 2, kBlue), make_edge(1, 2, kBlue), make_edge(1, 1, kRed)});
  CHECK(g.color_degree(1) == ColorDegree{2, 2});
  CHECK(g.color_degree(2) == ColorDegree{2, 0});
  CHECK(g.degree(1, kRed) == 2);
  CHECK(g.has_self_loop_at(1));
  CHECK(!g.has_self_loop_at(2));
  CHECK_THROWS_AS(g.degree(7, kBlue), std::invalid_argument);
}

TEST_CASE("acyclicity on multigraph cases") {
  EdgeColoredGraph empty(2, {}, {});
  CHECK(empty.is_acyclic(kBlue));

  EdgeColoredGraph loop(2, {1}, {make_edge(1, 1, kBlue)});
  CHECK(!loop.is_acyclic(kBlue));
  CHECK(loop.is_acyclic(kRed));

  EdgeColoredGraph parallel(2, {1, 2}, {make_edge(1, 2, kBlue), make_edge(1, 2, kBlue)});
  CHECK(!parallel.is_acyclic(kBlue));

  EdgeColoredGraph bicolor_pair(2, {1, 2}, {make_edge(1, 2, kBlue), make_edge(1, 2, kRed)});
  CHECK(bicolor_pair.is_acyclic(kBlue));
  CHECK(bicolor_pair.is_acyclic(kRed));

  CHECK(!blue_triangle().is_acyclic(kBlue));
  CHECK(blue_triangle().is_acyclic(kRed));
}

TEST_CASE("cycle finding returns genuine cycles") {
  EdgeColoredGraph loop(2, {1}, {make_edge(1, 1, kBlue)});
  auto c1 = loop.find_monochromatic_cycle(kBlue);
  REQUIRE(c1.has_value());
  CHECK(c1->vertices.size() == 1);
  CHECK(cycle_is_genuine(loop, *c1, kBlue));

  EdgeColoredGraph parallel(2, {1, 2}, {make_edge(1, 2, kRed), make_edge(1, 2, kRed)});
  auto c2 = parallel.find_monochromatic_cycle(kRed);
  REQUIRE(c2.has_value());
  CHECK(c2->vertices.size() == 2);
  CHECK(cycle_is_genuine(parallel, *c2, kRed));

  auto c3 = blue_triangle().find_monochromatic_cycle(kBlue);
  REQUIRE(c3.has_value());
  CHECK(c3->vertices.size() == 3);
  CHECK(cycle_is_genuine(blue_triangle(), *c3, kBlue));
  CHECK(!blue_triangle().find_monochromatic_cycle(kRed).has_value());
}

TEST_CASE("random cross-check of acyclicity and cycle finding") {
  int cycles_seen = 0;
  for (std::uint64_t seed = 0; seed < 220; ++seed) {
    SplitMix64 rng(seed * 1000 + 7);
    int n = 1 + static_cast<int>(rng.next() % 10);
    int h = 1 + static_cast<int>(rng.next() % 3);
    double p = 0.05 + 0.05 * static_cast<double>(rng.next() % 8);
    bool simple = (seed % 3) != 0;
    EdgeColoredGraph g = testutil::seeded_instance(seed, n, h, p, simple);
    if (!simple) g = testutil::sprinkle_multi(g, rng, 2);
    for (int c = 1; c <= h; ++c) {
      auto cyc = g.find_monochromatic_cycle(c);
      CHECK(g.is_acyclic(c) == !cyc.has_value());
      if (cyc) {
        ++cycles_seen;
        CHECK(cycle_is_genuine(g, *cyc, c));
      }
    }
  }
  CHECK(cycles_seen > 50);
}

TEST_CASE("acyclicity agrees with the forest rank condition on simple graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    EdgeColoredGraph g = testutil::seeded_instance(seed + 999, 2 + seed % 9, 2, 0.25, true);
    for (int c = 1; c <= 2; ++c) CHECK(g.is_acyclic(c) == forest_by_rank(g, c));
  }
}

TEST_CASE("delete and induce") {
  EdgeColoredGraph g = blue_triangle();
  EdgeColoredGraph d = g.delete_vertices({2, 99});
  CHECK(d.vertices() == VertexSet{1, 3});
  CHECK(d.edges() == std::vector<Edge>{make_edge(1, 3, kBlue)});
  CHECK(g.induced({1, 3}) == d);
  CHECK(g.delete_vertices({}) == g);
}

TEST_CASE("dissolve joins the two neighbors") {
  EdgeColoredGraph path(2, {1, 2, 3}, {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue)});
  EdgeColoredGraph d = path.dissolve_degree2(2, kBlue);
  CHECK(d.vertices() == VertexSet{1, 3});
  CHECK(d.edges() == std::vector<Edge>{make_edge(1, 3, kBlue)});

  EdgeColoredGraph tri = blue_triangle().dissolve_degree2(3, kBlue);
  CHECK(tri.edges() == std::vector<Edge>{make_edge(1, 2, kBlue), make_edge(1, 2, kBlue)});
  CHECK(!tri.is_acyclic(kBlue));

  EdgeColoredGraph pair(2, {1, 2}, {make_edge(1, 2, kBlue), make_edge(1, 2, kBlue)});
  EdgeColoredGraph looped = pair.dissolve_degree2(2, kBlue);
  CHECK(looped.edges() == std::vector<Edge>{make_edge(1, 1, kBlue)});

  CHECK_THROWS_AS(path.dissolve_degree2(1, kBlue), std::invalid_argument);
  EdgeColoredGraph mixed(2, {1, 2, 3},
                         {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(2, 3, kRed)});
  CHECK_THROWS_AS(mixed.dissolve_degree2(2, kBlue), std::invalid_argument);
}

TEST_CASE("dissolve preserves which deletions break the color") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    SplitMix64 rng(seed);
    EdgeColoredGraph g = testutil::seeded_instance(seed * 3 + 1, 4 + seed % 4, 2, 0.3, true);
    if (seed % 4 == 0) g = testutil::sprinkle_multi(g, rng, 2);
    for (int v : g.vertices()) {
      ColorDegree cd = g.color_degree(v);
      if (cd[0] != 2 || cd[1] != 0 || g.has_self_loop_at(v)) continue;
      EdgeColoredGraph d = g.dissolve_degree2(v, kBlue);
      VertexSet others = set_difference(g.vertices(), {v});
      for_each_subset_by_size(others, static_cast<int>(others.size()), [&](const VertexSet& w) {
        CHECK(g.delete_vertices(w).is_acyclic(kBlue) == d.delete_vertices(w).is_acyclic(kBlue));
      });
      break;  // one eligible vertex per graph keeps this quick
    }
  }
}

TEST_CASE("restricted_to_color and edge edits") {
  EdgeColoredGraph g(2, {1, 2, 3},
                     {make_edge(1, 2, kBlue), make_edge(2, 3, kRed), make_edge(2, 3, kRed)});
  CHECK(g.restricted_to_color(kBlue).edges() == std::vector<Edge>{make_edge(1, 2, kBlue)});
  CHECK(g.restricted_to_color(kBlue).vertices() == g.vertices());

  EdgeColoredGraph one_less = g.without_one_edge(make_edge(2, 3, kRed));
  CHECK(one_less.edge_count() == 2);
  CHECK(one_less.without_one_edge(make_edge(2, 3, kRed)).degree(2, kRed) == 0);
  CHECK_THROWS_AS(g.without_one_edge(make_edge(1, 3, kBlue)), std::invalid_argument);
  CHECK(g.with_edge(make_edge(1, 3, kBlue)).edge_count() == 4);
}

TEST_CASE("feedback vertex set predicates") {
  EdgeColoredGraph g(2, {1, 2, 3, 4, 5},
                     {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue),
                      make_edge(3, 4, kRed), make_edge(4, 5, kRed), make_edge(3, 5, kRed)});
  CHECK(is_feedback_vertex_set(g, {3}));
  CHECK(is_feedback_vertex_set(g, {1, 3}));
  CHECK(!is_feedback_vertex_set(g, {1}));
  CHECK(is_minimal_feedback_vertex_set(g, {3}));
  CHECK(!is_minimal_feedback_vertex_set(g, {1, 3}));
  CHECK(is_minimal_feedback_vertex_set(g, {1, 4}));
}

TEST_CASE("digraph basics and conversion") {
  CHECK_THROWS_AS(make_digraph({1, 2}, {{1, 3}}), std::invalid_argument);
  Digraph two_cycle = make_digraph({1, 2}, {{2, 1}, {1, 2}});
  CHECK(two_cycle.arcs == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

  EdgeColoredGraph g = digraph_to_alternating(two_cycle);
  CHECK(g.colors() == 2);
  CHECK(g.vertices() == VertexSet{1, 2, 3, 4});
  CHECK(g.edges() == std::vector<Edge>{make_edge(1, 3, kBlue), make_edge(1, 4, kRed),
                                       make_edge(2, 3, kRed), make_edge(2, 4, kBlue)});
  CHECK(g.is_acyclic(kBlue));
  CHECK(g.is_acyclic(kRed));
  for (int mid : {3, 4}) CHECK(g.color_degree(mid) == ColorDegree{1, 1});
}
