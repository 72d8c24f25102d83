#include "dualfvs/instance_io.hpp"

#include <sstream>
#include <vector>

namespace dualfvs {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits into tokenized lines, dropping blank lines and "c" comment lines.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line.number, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

EdgeColoredGraph decode_instance(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "missing problem line");
  const Line& head = lines[0];
  if (head.tokens.size() != 5 || head.tokens[0] != "p" || head.tokens[1] != "ecg")
    throw ParseError(head.number, "expected problem line 'p ecg <n> <m> <h>'");
  int n = parse_int(head, head.tokens[2], "vertex count");
  int m = parse_int(head, head.tokens[3], "edge count");
  int h = parse_int(head, head.tokens[4], "color count");
  if (n < 0) throw ParseError(head.number, "vertex count must be non-negative");
  if (m < 0) throw ParseError(head.number, "edge count must be non-negative");
  if (h < 1) throw ParseError(head.number, "color count must be at least 1");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e")
      throw ParseError(line.number, "expected edge line 'e <u> <v> <c>'");
    if (static_cast<int>(edges.size()) == m)
      throw ParseError(line.number, "more than " + std::to_string(m) + " edge lines");
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "expected edge line 'e <u> <v> <c>'");
    int u = parse_int(line, line.tokens[1], "endpoint");
    int v = parse_int(line, line.tokens[2], "endpoint");
    int c = parse_int(line, line.tokens[3], "color");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line.number, "edge endpoint outside 1.." + std::to_string(n));
    if (c < 1 || c > h)
      throw ParseError(line.number, "edge color outside 1.." + std::to_string(h));
    edges.push_back(make_edge(u, v, c));
  }
  if (static_cast<int>(edges.size()) != m) {
    int at = lines.back().number;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(edges.size()));
  }

  VertexSet verts(n);
  for (int v = 1; v <= n; ++v) verts[v - 1] = v;
  return EdgeColoredGraph(h, std::move(verts), std::move(edges));
}

std::string encode_instance(const EdgeColoredGraph& g) {
  int n = g.vertices().empty() ? 0 : g.vertices().back();
  std::ostringstream out;
  out << "p ecg " << n << ' ' << g.edge_count() << ' ' << g.colors() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

Digraph decode_digraph(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "missing problem line");
  const Line& head = lines[0];
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "dig")
    throw ParseError(head.number, "expected problem line 'p dig <n> <m>'");
  int n = parse_int(head, head.tokens[2], "vertex count");
  int m = parse_int(head, head.tokens[3], "arc count");
  if (n < 0) throw ParseError(head.number, "vertex count must be non-negative");
  if (m < 0) throw ParseError(head.number, "arc count must be non-negative");

  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "a" || line.tokens.size() != 3)
      throw ParseError(line.number, "expected arc line 'a <u> <v>'");
    if (static_cast<int>(arcs.size()) == m)
      throw ParseError(line.number, "more than " + std::to_string(m) + " arc lines");
    int u = parse_int(line, line.tokens[1], "endpoint");
    int v = parse_int(line, line.tokens[2], "endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line.number, "arc endpoint outside 1.." + std::to_string(n));
    arcs.push_back({u, v});
  }
  if (static_cast<int>(arcs.size()) != m) {
    int at = lines.back().number;
    throw ParseError(at, "expected " + std::to_string(m) + " arc lines, got " +
                             std::to_string(arcs.size()));
  }

  VertexSet verts(n);
  for (int v = 1; v <= n; ++v) verts[v - 1] = v;
  return make_digraph(std::move(verts), std::move(arcs));
}

std::string format_solution(const VertexSet& s) {
  if (s.empty()) return "EMPTYSET";
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  return out.str();
}

std::string format_family(const SetFamily& f) {
  std::ostringstream out;
  for (const auto& s : f) out << format_solution(s) << '\n';
  return out.str();
}

VertexSet parse_solution(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  VertexSet s;
  while (in >> tok) {
    if (tok == "EMPTYSET") continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex id '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad vertex id '" + tok + "'");
    s.push_back(v);
  }
  return normalized(std::move(s));
}

}  // namespace dualfvs
