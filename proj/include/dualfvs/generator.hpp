#pragma once

#include <cstdint>

#include "dualfvs/graph.hpp"

namespace dualfvs {

// The splitmix64 stream: state advances by the golden-gamma constant, output
// is the mixed state. Small, portable, and easy to reimplement elsewhere so
// seeds reproduce across languages.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1): the top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct GeneratorConfig {
  int n = 0;
  int h = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
  bool simple = false;  // no self-loops when set
};

// Random instance on vertices 1..n: one splitmix64 draw per (pair, color),
// pairs (u, v) with u <= v (u < v when simple) in ascending u-major order,
// colors ascending inside a pair; the edge is included when the draw's unit
// value is below p. Identical configs give identical graphs.
EdgeColoredGraph generate_instance(const GeneratorConfig& cfg);

}  // namespace dualfvs
