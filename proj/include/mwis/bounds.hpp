#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mwis/clique_cover.hpp"
#include "mwis/graph.hpp"
#include "mwis/random.hpp"

namespace mwis {

/// Weighted clique cover bound of the whole graph; never below the optimum.
inline Weight upper_bound(const DynGraph& g) {
  const auto vertices = g.active_vertices();
  return clique_cover_bound(g, greedy_clique_cover(g, vertices));
}

struct LocalSearchResult {
  Weight weight = 0;
  std::vector<VertexId> solution;  // ascending
};

namespace detail {

/// Independent set on a compact copy of the graph with incremental
/// tightness (number of solution neighbors) per vertex.
class SwapSearch {
 public:
  explicit SwapSearch(const DynGraph& g) : ids_(g.active_vertices()) {
    const std::size_t n = ids_.size();
    weights_.resize(n);
    adj_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      weights_[i] = g.weight(ids_[i]);
      for (VertexId u : g.neighbors(ids_[i])) {
        adj_[i].push_back(static_cast<std::uint32_t>(std::lower_bound(ids_.begin(), ids_.end(), u) - ids_.begin()));
      }
    }
    in_.assign(n, 0);
    tight_.assign(n, 0);
  }

  std::size_t size() const { return ids_.size(); }

  /// Greedy by w(v) / (deg(v) + 1), descending.
  void greedy() {
    std::vector<std::uint32_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto lhs = static_cast<__int128>(weights_[a]) * static_cast<__int128>(adj_[b].size() + 1);
      const auto rhs = static_cast<__int128>(weights_[b]) * static_cast<__int128>(adj_[a].size() + 1);
      return lhs != rhs ? lhs > rhs : a < b;
    });
    for (std::uint32_t v : order) {
      if (tight_[v] == 0 && !in_[v]) insert(v);
    }
  }

  /// (w,1)- and (1,2)-swaps until neither improves.
  void improve() {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::uint32_t v = 0; v < size(); ++v) {
        if (in_[v]) continue;
        Weight blocking = 0;
        for (std::uint32_t u : adj_[v]) blocking += in_[u] ? weights_[u] : 0;
        if (weights_[v] > blocking) {
          force(v);
          improved = true;
        }
      }
      for (std::uint32_t x = 0; x < size(); ++x) {
        if (in_[x] && two_for_one(x)) improved = true;
      }
    }
  }

  /// Inserts v and evicts its solution neighbors.
  void force(std::uint32_t v) {
    for (std::uint32_t u : adj_[v]) {
      if (in_[u]) erase(u);
    }
    insert(v);
  }

  Weight weight() const { return weight_; }
  const std::vector<char>& members() const { return in_; }
  void assign(const std::vector<char>& members) {
    for (std::uint32_t v = 0; v < size(); ++v) {
      if (in_[v] && !members[v]) erase(v);
    }
    for (std::uint32_t v = 0; v < size(); ++v) {
      if (!in_[v] && members[v]) insert(v);
    }
  }

  LocalSearchResult result() const {
    LocalSearchResult out;
    out.weight = weight_;
    for (std::uint32_t v = 0; v < size(); ++v) {
      if (in_[v]) out.solution.push_back(ids_[v]);
    }
    return out;
  }

 private:
  bool two_for_one(std::uint32_t x) {
    std::vector<std::uint32_t> free;
    for (std::uint32_t u : adj_[x]) {
      if (tight_[u] == 1) free.push_back(u);
    }
    for (std::size_t i = 0; i < free.size(); ++i) {
      for (std::size_t j = i + 1; j < free.size(); ++j) {
        const std::uint32_t u = free[i];
        const std::uint32_t y = free[j];
        if (weights_[u] + weights_[y] <= weights_[x] || adjacent(u, y)) continue;
        erase(x);
        insert(u);
        insert(y);
        return true;
      }
    }
    return false;
  }

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    const std::uint32_t other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(list.begin(), list.end(), other);
  }

  void insert(std::uint32_t v) {
    in_[v] = 1;
    weight_ += weights_[v];
    for (std::uint32_t u : adj_[v]) ++tight_[u];
  }

  void erase(std::uint32_t v) {
    in_[v] = 0;
    weight_ -= weights_[v];
    for (std::uint32_t u : adj_[v]) --tight_[u];
  }

  std::vector<VertexId> ids_;
  std::vector<Weight> weights_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<char> in_;
  std::vector<std::uint32_t> tight_;
  Weight weight_ = 0;
};

}  // namespace detail

/// Greedy start plus swap-based improvement, then `budget` rounds of random
/// forced insertions kept only when they lead to a heavier set.
inline LocalSearchResult local_search(const DynGraph& g, std::size_t budget = 50, std::uint64_t seed = 0) {
  detail::SwapSearch search(g);
  search.greedy();
  search.improve();
  if (search.size() == 0) return search.result();

  Rng rng(seed);
  auto best = search.members();
  Weight best_weight = search.weight();
  for (std::size_t round = 0; round < budget; ++round) {
    const auto v = static_cast<std::uint32_t>(uniform_int(rng, 0, static_cast<std::int64_t>(search.size()) - 1));
    if (search.members()[v]) continue;
    search.force(v);
    search.improve();
    if (search.weight() > best_weight) {
      best = search.members();
      best_weight = search.weight();
    } else {
      search.assign(best);
    }
  }
  search.assign(best);
  return search.result();
}

}  // namespace mwis
