#pragma once

#include <stdexcept>
#include <string>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// Raised by the decoders; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Instance text form:
//   c <comment>
//   p ecg <n> <m> <h>
//   e <u> <v> <c>        (m lines; 1 <= u,v <= n, 1 <= c <= h)
// Vertices are 1..n; repeated e-lines are parallel edges, u == v a self-loop.
EdgeColoredGraph decode_instance(const std::string& text);

// Canonical encoding: header with n = largest vertex id, then edges sorted by
// (u, v, color), no comments. decode(encode(g)) == g whenever the vertex ids
// of g are exactly 1..n.
std::string encode_instance(const EdgeColoredGraph& g);

// Digraph text form: "p dig <n> <m>" then m lines "a <u> <v>".
Digraph decode_digraph(const std::string& text);

// One solution per line, members ascending, "EMPTYSET" for the empty set.
std::string format_solution(const VertexSet& s);
std::string format_family(const SetFamily& f);

// Inverse of format_solution; accepts "", "EMPTYSET", or whitespace-separated
// vertex ids.
VertexSet parse_solution(const std::string& text);

}  // namespace dualfvs
