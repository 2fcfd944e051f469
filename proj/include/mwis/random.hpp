#pragma once

// Seeded instance generation. All randomness comes from std::mt19937_64,
// whose output sequence is fixed by the C++ standard; integers are drawn by
// rejection sampling and reals from the top 53 bits, so results do not
// depend on the standard library implementation.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

using Rng = std::mt19937_64;

inline constexpr Weight kDefaultWeightLo = 1;
inline constexpr Weight kDefaultWeightHi = 200;

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Redraws every active vertex weight (ascending id order) from [lo, hi].
inline void assign_random_weights(DynGraph& g, Weight lo, Weight hi, std::uint64_t seed) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidWeight, "weight range must satisfy 1 <= lo <= hi");
  Rng rng(seed);
  for (VertexId v : g.active_vertices()) g.set_weight(v, uniform_int(rng, lo, hi));
}

/// G(n, p): pairs (i, j), i < j, in lexicographic order, each kept with
/// probability p; then weights from [lo, hi], same generator.
inline DynGraph random_gnp(std::size_t n, double p, std::uint64_t seed, Weight lo = kDefaultWeightLo,
                           Weight hi = kDefaultWeightHi) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidWeight, "weight range must satisfy 1 <= lo <= hi");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> lists(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) {
        lists[i].push_back(j);
        lists[j].push_back(i);
      }
    }
  }
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = uniform_int(rng, lo, hi);
  return DynGraph::from_adjacency(std::move(weights), std::move(lists));
}

/// Path 0-1-...-(n-1) with weights from [lo, hi].
inline DynGraph random_path(std::size_t n, std::uint64_t seed, Weight lo = kDefaultWeightLo,
                            Weight hi = kDefaultWeightHi) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidWeight, "weight range must satisfy 1 <= lo <= hi");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> lists(n);
  for (VertexId i = 0; i + 1 < n; ++i) {
    lists[i].push_back(i + 1);
    lists[i + 1].push_back(i);
  }
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = uniform_int(rng, lo, hi);
  return DynGraph::from_adjacency(std::move(weights), std::move(lists));
}

/// Cycle on n >= 3 vertices with weights from [lo, hi].
inline DynGraph random_cycle(std::size_t n, std::uint64_t seed, Weight lo = kDefaultWeightLo,
                             Weight hi = kDefaultWeightHi) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidWeight, "weight range must satisfy 1 <= lo <= hi");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> lists(n);
  for (VertexId i = 0; i < n; ++i) {
    const VertexId j = (i + 1) % n;
    lists[i].push_back(j);
    lists[j].push_back(i);
  }
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = uniform_int(rng, lo, hi);
  return DynGraph::from_adjacency(std::move(weights), std::move(lists));
}

}  // namespace mwis
