#include "doctest.h"
#include "dualfvs/compact_reps.hpp"
#include "dualfvs/oracle.hpp"
#include "test_util.hpp"

using namespace dualfvs;

TEST_CASE("represented solutions are the transversals") {
  CompactRepresentation rep{{{1, 2}, {5}}};
  CHECK(represented_solutions(rep) == SetFamily{{1, 5}, {2, 5}});
  CHECK(represented_solutions(CompactRepresentation{}) == SetFamily{{}});
  CHECK(format_representation(rep) == "{1,2} {5}");
  CHECK(format_representation(CompactRepresentation{}) == "{}");
}

TEST_CASE("minimal feedback sets of one color by brute force") {
  EdgeColoredGraph tri(2, {1, 2, 3},
                       {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue)});
  CHECK(enumerate_minimal_fvs(tri, kBlue, 1) == SetFamily{{1}, {2}, {3}});
  CHECK(enumerate_minimal_fvs(tri, kBlue, 0) == SetFamily{});
  CHECK(enumerate_minimal_fvs(tri, kRed, 0) == SetFamily{{}});
}

TEST_CASE("a triangle collapses to one interchangeable set") {
  EdgeColoredGraph tri(2, {1, 2, 3},
                       {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue)});
  auto reps = enumerate_fvs_compact_reps(tri, kBlue, 1);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].sets == std::vector<VertexSet>{{1, 2, 3}});
}

TEST_CASE("a cut vertex of two same-color triangles is the only small solution") {
  EdgeColoredGraph g(2, {1, 2, 3, 4, 5},
                     {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue), make_edge(1, 3, kBlue),
                      make_edge(3, 4, kBlue), make_edge(4, 5, kBlue), make_edge(3, 5, kBlue)});
  auto reps = enumerate_fvs_compact_reps(g, kBlue, 1);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].sets == std::vector<VertexSet>{{3}});
  // With budget 2 the wider solutions come back too.
  SetFamily all;
  for (const auto& rep : enumerate_fvs_compact_reps(g, kBlue, 2))
    for (auto& s : represented_solutions(rep)) all.push_back(std::move(s));
  CHECK(normalized_family(all) == enumerate_minimal_fvs(g, kBlue, 2));
}

TEST_CASE("acyclic color yields the empty representation") {
  EdgeColoredGraph path(2, {1, 2, 3}, {make_edge(1, 2, kBlue), make_edge(2, 3, kBlue)});
  auto reps = enumerate_fvs_compact_reps(path, kBlue, 3);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].sets.empty());
  CHECK(represented_solutions(reps[0]) == SetFamily{{}});
}

TEST_CASE("transversals of the representations are exactly the minimal feedback sets") {
  for (std::uint64_t seed = 0; seed < 220; ++seed) {
    SplitMix64 rng(seed * 77 + 5);
    int n = 3 + static_cast<int>(rng.next() % 7);
    int k = 1 + static_cast<int>(rng.next() % 4);
    EdgeColoredGraph g = testutil::seeded_instance(seed + 4000, n, 1, 0.35, seed % 2 == 0);
    if (seed % 3 == 0) g = testutil::sprinkle_multi(g, rng, 2);
    auto reps = enumerate_fvs_compact_reps(g, 1, k);

    SetFamily from_reps;
    for (const auto& rep : reps) {
      // Sets within one representation are pairwise disjoint and non-empty.
      VertexSet seen;
      for (const auto& s : rep.sets) {
        CHECK(!s.empty());
        CHECK(set_intersection(seen, s).empty());
        seen = set_union(seen, s);
      }
      for (auto& s : represented_solutions(rep)) from_reps.push_back(std::move(s));
    }
    CHECK(normalized_family(from_reps) == enumerate_minimal_fvs(g, 1, k));
  }
}
