#include <string>

#include "doctest.h"
#include "dualfvs/instance_io.hpp"
#include "test_util.hpp"

using namespace dualfvs;

TEST_CASE("decode accepts comments, blanks, and parallel edges") {
  std::string text =
      "c a tiny instance\n"
      "\n"
      "p ecg 3 4 2\n"
      "e 1 2 1\n"
      "c a repeated edge follows\n"
      "e 2 1 1\n"
      "e 2 3 2\n"
      "e 3 3 2\n";
  EdgeColoredGraph g = decode_instance(text);
  CHECK(g.vertices() == VertexSet{1, 2, 3});
  CHECK(g.colors() == 2);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(1, kBlue) == 2);
  CHECK(g.has_self_loop_at(3));
}

TEST_CASE("decode errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      decode_instance(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("c only a comment\n") == 1);
  CHECK(line_of("p foo 1 0 1\n") == 1);
  CHECK(line_of("c x\nc y\np ecg 2 x 2\n") == 3);
  CHECK(line_of("p ecg 2 1 2\ne 1 3 1\n") == 2);
  CHECK(line_of("p ecg 2 1 2\ne 1 2 5\n") == 2);
  CHECK(line_of("p ecg 2 2 2\ne 1 2 1\n") == 2);   // too few edge lines
  CHECK(line_of("p ecg 2 0 2\ne 1 2 1\n") == 2);   // too many
  CHECK(line_of("p ecg 2 1 2\nq 1 2\n") == 2);     // stray line kind
  CHECK(line_of("p ecg 2 1 0\ne 1 2 1\n") == 1);   // zero colors
}

TEST_CASE("encode then decode is the identity on 1..n instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    EdgeColoredGraph g =
        testutil::seeded_instance(seed, 1 + seed % 8, 1 + seed % 3, 0.4, seed % 2 == 0);
    CHECK(decode_instance(encode_instance(g)) == g);
  }
  EdgeColoredGraph empty(1, {}, {});
  CHECK(encode_instance(empty) == "p ecg 0 0 1\n");
  CHECK(decode_instance(encode_instance(empty)) == empty);
}

TEST_CASE("digraph decoding") {
  Digraph d = decode_digraph("c arcs\np dig 3 2\na 1 2\na 3 1\n");
  CHECK(d.vertices == VertexSet{1, 2, 3});
  CHECK(d.arcs == std::vector<std::pair<int, int>>{{1, 2}, {3, 1}});
  CHECK_THROWS_AS(decode_digraph("p dig 1 1\na 1 2\n"), ParseError);
}

TEST_CASE("solution and family formatting") {
  CHECK(format_solution({}) == "EMPTYSET");
  CHECK(format_solution({1, 3}) == "1 3");
  CHECK(parse_solution("EMPTYSET").empty());
  CHECK(parse_solution("") .empty());
  CHECK(parse_solution(" 4 2 2 ") == VertexSet{2, 4});
  CHECK_THROWS_AS(parse_solution("1 x"), std::invalid_argument);
  CHECK(format_family({{}, {1, 2}}) == "EMPTYSET\n1 2\n");
  CHECK(format_family({}) == "");
}
