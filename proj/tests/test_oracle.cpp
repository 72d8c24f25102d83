#include "doctest.h"
#include "dualfvs/oracle.hpp"
#include "test_util.hpp"

using namespace dualfvs;

namespace {

EdgeColoredGraph two_triangles() {
  // Blue triangle 1-2-3, red triangle 3-4-5 sharing vertex 3.
  return EdgeColoredGraph(2, {1, 2, 3, 4, 5},
                          {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue),
                           make_edge(3, 4, kRed), make_edge(4, 5, kRed), make_edge(3, 5, kRed)});
}

}  // namespace

TEST_CASE("oracle on the shared-vertex triangles") {
  SetFamily fam = oracle_minimal_mfvs_family(two_triangles(), 2);
  CHECK(fam == SetFamily{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3}});
  CHECK(oracle_minimal_mfvs_family(two_triangles(), 1) == SetFamily{{3}});
  CHECK(oracle_minimal_mfvs_family(two_triangles(), 0) == SetFamily{});
}

TEST_CASE("oracle respects the forbidden set") {
  SetFamily fam = oracle_minimal_mfvs_family(two_triangles(), 2, {3});
  CHECK(fam == SetFamily{{1, 4}, {1, 5}, {2, 4}, {2, 5}});
  CHECK(oracle_minimal_mfvs_family(two_triangles(), 2, {3, 4, 5}) == SetFamily{});
}

TEST_CASE("oracle trivialities") {
  EdgeColoredGraph acyclic(2, {1, 2}, {make_edge(1, 2, kBlue)});
  CHECK(oracle_minimal_mfvs_family(acyclic, 0) == SetFamily{{}});
  CHECK(oracle_minimal_mfvs_family(acyclic, 3) == SetFamily{{}});
  EdgeColoredGraph loop(1, {1}, {make_edge(1, 1, 1)});
  CHECK(oracle_minimal_mfvs_family(loop, 1) == SetFamily{{1}});
}

TEST_CASE("oracle output is always an antichain of genuine minimal solutions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 rng(seed + 31);
    EdgeColoredGraph g = testutil::seeded_instance(seed, 3 + seed % 7, 1 + seed % 3, 0.35, false);
    g = testutil::sprinkle_multi(g, rng, 1);
    SetFamily fam = oracle_minimal_mfvs_family(g, 3);
    CHECK(is_antichain(fam));
    for (const auto& s : fam) {
      CHECK(s.size() <= 3);
      CHECK(is_minimal_feedback_vertex_set(g, s));
    }
  }
}

TEST_CASE("oracle caps fail loudly") {
  VertexSet many;
  for (int v = 1; v <= 17; ++v) many.push_back(v);
  EdgeColoredGraph big(2, many, {});
  CHECK_THROWS_AS(oracle_minimal_mfvs_family(big, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle_minimal_mfvs_family(two_triangles(), 7), std::invalid_argument);
  CHECK_THROWS_AS(oracle_minimal_mfvs_family(two_triangles(), -1), std::invalid_argument);
}

TEST_CASE("edge cover oracle") {
  CompactRepresentation blue{{{1, 2, 3}}};
  CompactRepresentation red{{{3, 4, 5}}};
  CoverGraph h = build_cover_graph(blue, red);
  CHECK(oracle_min_edge_cover(h).size() == 1);

  CoverGraph empty = build_cover_graph({}, {});
  CHECK(oracle_min_edge_cover(empty).empty());

  CoverGraph wide;
  for (int i = 0; i < 6; ++i) wide.set_vertices.push_back({i < 3 ? 0 : 1, i % 3, {i + 1}});
  for (int b = 0; b < 3; ++b)
    for (int r = 3; r < 6; ++r) {
      for (int copy = 0; copy < 3; ++copy) wide.edges.push_back({b, r, 1});
    }
  CHECK_THROWS_AS(oracle_min_edge_cover(wide), std::invalid_argument);  // 27 edges > cap
}

TEST_CASE("dominating set oracle") {
  SimpleGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(oracle_min_dominating_set(path) == std::vector<int>{1});

  SimpleGraph isolated(2);
  auto d = oracle_min_dominating_set(isolated);
  CHECK(d.size() == 2);

  SimpleGraph none(0);
  CHECK(oracle_min_dominating_set(none).empty());

  SimpleGraph big(15);
  CHECK_THROWS_AS(oracle_min_dominating_set(big), std::invalid_argument);
}
