#include "dualfvs/generator.hpp"

#include <stdexcept>

namespace dualfvs {

EdgeColoredGraph generate_instance(const GeneratorConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (cfg.h < 1) throw std::invalid_argument("color count must be at least 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
    throw std::invalid_argument("edge probability must be in [0, 1]");

  SplitMix64 rng(cfg.seed);
  VertexSet verts(cfg.n);
  for (int v = 1; v <= cfg.n; ++v) verts[v - 1] = v;
  std::vector<Edge> edges;
  for (int u = 1; u <= cfg.n; ++u)
    for (int v = cfg.simple ? u + 1 : u; v <= cfg.n; ++v)
      for (int c = 1; c <= cfg.h; ++c)
        if (rng.next_unit() < cfg.p) edges.push_back(make_edge(u, v, c));
  return EdgeColoredGraph(cfg.h, std::move(verts), std::move(edges));
}

}  // namespace dualfvs
