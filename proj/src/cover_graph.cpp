#include "dualfvs/cover_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace dualfvs {

int CoverGraph::blue_count() const {
  int c = 0;
  for (const auto& sv : set_vertices)
    if (sv.side == 0) ++c;
  return c;
}

std::vector<int> CoverGraph::incident_edges(int sv) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].blue_sv == sv || edges[i].red_sv == sv) out.push_back(i);
  return out;
}

std::vector<int> CoverGraph::non_isolated() const {
  std::vector<char> seen(set_vertices.size(), 0);
  for (const auto& e : edges) seen[e.blue_sv] = seen[e.red_sv] = 1;
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(set_vertices.size()); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

CoverGraph build_cover_graph(const CompactRepresentation& blue,
                             const CompactRepresentation& red) {
  for (const auto* rep : {&blue, &red}) {
    VertexSet seen;
    for (const auto& s : rep->sets) {
      if (s.empty()) throw std::invalid_argument("representation set is empty");
      if (!set_intersection(seen, s).empty())
        throw std::invalid_argument("representation sets overlap");
      seen = set_union(seen, s);
    }
  }
  CoverGraph h;
  for (int i = 0; i < static_cast<int>(blue.sets.size()); ++i)
    h.set_vertices.push_back({0, i, blue.sets[i]});
  for (int j = 0; j < static_cast<int>(red.sets.size()); ++j)
    h.set_vertices.push_back({1, j, red.sets[j]});
  const int nb = static_cast<int>(blue.sets.size());
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < static_cast<int>(red.sets.size()); ++j) {
      VertexSet common = set_intersection(blue.sets[i], red.sets[j]);
      if (!common.empty()) h.edges.push_back({i, nb + j, common.front()});
    }
  return h;
}

std::vector<int> max_matching(const CoverGraph& h) {
  const int n = static_cast<int>(h.set_vertices.size());
  std::vector<std::vector<int>> inc(n);
  for (int i = 0; i < static_cast<int>(h.edges.size()); ++i) {
    inc[h.edges[i].blue_sv].push_back(i);
    inc[h.edges[i].red_sv].push_back(i);
  }
  std::vector<int> match_edge(n, -1);  // per set-vertex, its matched edge
  std::vector<char> visited(n, 0);

  std::function<bool(int)> augment = [&](int b) -> bool {
    for (int ei : inc[b]) {
      int r = h.edges[ei].red_sv;
      if (visited[r]) continue;
      visited[r] = 1;
      if (match_edge[r] == -1 || augment(h.edges[match_edge[r]].blue_sv)) {
        match_edge[r] = ei;
        match_edge[b] = ei;
        return true;
      }
    }
    return false;
  };

  for (int b = 0; b < n; ++b) {
    if (h.set_vertices[b].side != 0) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(b);
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (h.set_vertices[v].side == 1 && match_edge[v] != -1) out.push_back(match_edge[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> min_edge_cover(const CoverGraph& h) {
  std::vector<int> cover = max_matching(h);
  const int matching_size = static_cast<int>(cover.size());
  std::vector<char> covered(h.set_vertices.size(), 0);
  for (int ei : cover) covered[h.edges[ei].blue_sv] = covered[h.edges[ei].red_sv] = 1;
  std::vector<int> noniso = h.non_isolated();
  for (int sv : noniso) {
    if (covered[sv]) continue;
    // By matching maximality the other endpoint of any incident edge is
    // already covered, so each addition covers exactly this vertex.
    std::vector<int> inc = h.incident_edges(sv);
    int ei = *std::min_element(inc.begin(), inc.end());
    cover.push_back(ei);
    covered[h.edges[ei].blue_sv] = covered[h.edges[ei].red_sv] = 1;
  }
  std::sort(cover.begin(), cover.end());
  if (static_cast<int>(cover.size()) !=
      static_cast<int>(noniso.size()) - matching_size)
    throw std::logic_error("edge cover size does not match the matching identity");
  return cover;
}

VertexSet min_hitting_from_reps(const CompactRepresentation& blue,
                                const CompactRepresentation& red) {
  CoverGraph h = build_cover_graph(blue, red);
  std::vector<char> isolated(h.set_vertices.size(), 1);
  for (int sv : h.non_isolated()) isolated[sv] = 0;
  VertexSet hit;
  for (int ei : min_edge_cover(h)) hit.push_back(h.edges[ei].witness);
  for (int sv = 0; sv < static_cast<int>(h.set_vertices.size()); ++sv)
    if (isolated[sv]) hit.push_back(h.set_vertices[sv].members.front());
  return normalized(std::move(hit));
}

std::vector<std::vector<CoverElement>> enumerate_minimal_covers(const CoverGraph& h,
                                                                int budget) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  const int n = static_cast<int>(h.set_vertices.size());
  if (n > 63) throw std::invalid_argument("too many set-vertices");

  std::vector<CoverElement> elements;
  std::vector<std::uint64_t> covers_mask;
  for (int sv = 0; sv < n; ++sv) {
    elements.push_back({CoverElement::Kind::SetVertex, sv});
    covers_mask.push_back(std::uint64_t{1} << sv);
  }
  for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
    elements.push_back({CoverElement::Kind::Edge, ei});
    covers_mask.push_back((std::uint64_t{1} << h.edges[ei].blue_sv) |
                          (std::uint64_t{1} << h.edges[ei].red_sv));
  }
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));

  std::vector<std::vector<CoverElement>> out;
  const int total = static_cast<int>(elements.size());
  int cap = std::min(budget, total);
  // Ascending-size sweep over element subsets; a subset is kept when it
  // covers everything and no single element can be dropped.
  std::vector<int> idx;
  std::function<void(int, int, std::uint64_t)> walk = [&](int start, int remaining,
                                                          std::uint64_t mask) {
    if (mask == full) {
      bool minimal = true;
      for (std::size_t drop = 0; drop < idx.size() && minimal; ++drop) {
        std::uint64_t rest = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (i != drop) rest |= covers_mask[idx[i]];
        if (rest == full) minimal = false;
      }
      if (minimal) {
        std::vector<CoverElement> chosen;
        for (int i : idx) chosen.push_back(elements[i]);
        out.push_back(std::move(chosen));
      }
      return;
    }
    if (remaining == 0) return;
    for (int i = start; i < total; ++i) {
      idx.push_back(i);
      walk(i + 1, remaining - 1, mask | covers_mask[i]);
      idx.pop_back();
    }
  };
  walk(0, cap, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dualfvs
