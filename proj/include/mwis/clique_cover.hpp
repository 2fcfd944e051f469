#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

/// Greedy clique partition of G[vertices]. Vertices are visited by descending
/// weight (ties: ascending id); each joins the lowest-indexed clique whose
/// members are all adjacent to it, otherwise opens a new clique. The first
/// member of every clique is therefore its heaviest.
inline std::vector<std::vector<VertexId>> greedy_clique_cover(const DynGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const Weight wa = g.weight(a);
    const Weight wb = g.weight(b);
    return wa != wb ? wa > wb : a < b;
  });

  std::vector<std::vector<VertexId>> cliques;
  std::unordered_map<VertexId, std::size_t> clique_of;
  clique_of.reserve(order.size());
  std::unordered_map<std::size_t, std::size_t> hits;
  for (VertexId v : order) {
    hits.clear();
    for (VertexId u : g.neighbors(v)) {
      if (auto it = clique_of.find(u); it != clique_of.end()) ++hits[it->second];
    }
    std::size_t target = cliques.size();
    for (const auto& [clique, count] : hits) {
      if (count == cliques[clique].size()) target = std::min(target, clique);
    }
    if (target == cliques.size()) cliques.emplace_back();
    cliques[target].push_back(v);
    clique_of.emplace(v, target);
  }
  return cliques;
}

/// Sum over the cliques of `cover` of their heaviest member.
inline Weight clique_cover_bound(const DynGraph& g, const std::vector<std::vector<VertexId>>& cover) {
  Weight bound = 0;
  for (const auto& clique : cover) {
    Weight best = 0;
    for (VertexId v : clique) best = std::max(best, g.weight(v));
    bound += best;
  }
  return bound;
}

}  // namespace mwis
