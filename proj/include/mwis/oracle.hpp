#pragma once

// Exact MWIS without any reductions; the reference every other component is
// tested against. Graphs up to 30 vertices use exhaustive bitmask branching,
// larger ones a bitset branch-and-bound with a clique partition bound.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

inline constexpr std::size_t kOracleLimit = 30;

struct OracleResult {
  Weight weight = 0;
  std::vector<VertexId> solution;  // ascending
};

namespace detail {

class BruteForce {
 public:
  explicit BruteForce(const DynGraph& g) : ids_(g.active_vertices()), weights_(ids_.size()), adj_(ids_.size(), 0) {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      weights_[i] = g.weight(ids_[i]);
      for (std::size_t j = 0; j < ids_.size(); ++j) {
        if (i != j && g.is_adjacent(ids_[i], ids_[j])) adj_[i] |= std::uint32_t{1} << j;
      }
    }
  }

  OracleResult run() {
    const std::uint32_t all = ids_.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << ids_.size()) - 1);
    recurse(all, 0, 0);
    OracleResult out;
    out.weight = best_weight_;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (best_ >> i & 1u) out.solution.push_back(ids_[i]);
    }
    return out;
  }

 private:
  void recurse(std::uint32_t open, std::uint32_t chosen, Weight weight) {
    int pick = -1;
    int pick_degree = 0;
    for (std::uint32_t rest = open; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const int d = std::popcount(adj_[i] & open);
      if (d > pick_degree) {
        pick = i;
        pick_degree = d;
      }
    }
    if (pick < 0) {
      // Only isolated vertices left: take every positive one.
      for (std::uint32_t rest = open; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        if (weights_[i] > 0) {
          chosen |= std::uint32_t{1} << i;
          weight += weights_[i];
        }
      }
      offer(chosen, weight);
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    recurse(open & ~bit & ~adj_[pick], chosen | bit, weight + weights_[pick]);
    recurse(open & ~bit, chosen, weight);
  }

  void offer(std::uint32_t set, Weight weight) {
    if (!found_ || weight > best_weight_ || (weight == best_weight_ && lex_less(set, best_))) {
      found_ = true;
      best_ = set;
      best_weight_ = weight;
    }
  }

  // Lexicographic order of the ascending member lists.
  static bool lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    const std::uint32_t low = diff & (~diff + 1);
    const std::uint32_t at_or_above = ~(low - 1);
    // The set lacking the first differing element is smaller only if it ends there.
    if (a & low) return (b & at_or_above) != 0;
    return (a & at_or_above) == 0;
  }

  std::vector<VertexId> ids_;
  std::vector<Weight> weights_;
  std::vector<std::uint32_t> adj_;
  bool found_ = false;
  std::uint32_t best_ = 0;
  Weight best_weight_ = 0;
};

/// Branch-and-bound over bitsets. Candidates are greedily partitioned into
/// cliques, heaviest first; the sum of each clique's heaviest weight bounds
/// what the candidates can still add.
class BitsetSearch {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit BitsetSearch(const DynGraph& g) : ids_(g.active_vertices()), words_((ids_.size() + 63) / 64) {
    // Local index order is by weight, descending, so partitions see heavy vertices first.
    std::vector<std::size_t> order(ids_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.weight(ids_[a]) > g.weight(ids_[b]); });
    std::vector<std::size_t> local(ids_.size());
    std::vector<VertexId> sorted(ids_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      local[order[i]] = i;
      sorted[i] = ids_[order[i]];
    }
    weights_.resize(ids_.size());
    adj_.assign(ids_.size(), Bits(words_, 0));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      weights_[i] = g.weight(sorted[i]);
      for (VertexId u : g.neighbors(sorted[i])) {
        const std::size_t j = local[std::lower_bound(ids_.begin(), ids_.end(), u) - ids_.begin()];
        adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    ids_ = std::move(sorted);
  }

  OracleResult run() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < ids_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<std::size_t> chosen;
    recurse(all, chosen, 0);
    OracleResult out;
    out.weight = best_weight_;
    for (std::size_t i : best_) out.solution.push_back(ids_[i]);
    std::sort(out.solution.begin(), out.solution.end());
    return out;
  }

 private:
  Weight partition_bound(Bits open) const {
    Weight bound = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      while (open[w] != 0) {
        const std::size_t head = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
        bound += weights_[head];
        // Grow a clique from head within the remaining candidates.
        Bits common = adj_[head];
        open[head / 64] &= ~(std::uint64_t{1} << (head % 64));
        for (std::size_t x = w; x < words_; ++x) {
          std::uint64_t cand = open[x] & common[x];
          while (cand != 0) {
            const std::size_t v = x * 64 + static_cast<std::size_t>(std::countr_zero(cand));
            cand &= cand - 1;
            open[x] &= ~(std::uint64_t{1} << (v % 64));
            for (std::size_t y = 0; y < words_; ++y) common[y] &= adj_[v][y];
            cand &= common[x];
          }
        }
      }
    }
    return bound;
  }

  void recurse(Bits& open, std::vector<std::size_t>& chosen, Weight weight) {
    if (weight > best_weight_) {
      best_weight_ = weight;
      best_ = chosen;
    }
    if (weight + partition_bound(open) <= best_weight_) return;
    // Branch on the heaviest candidate (lowest local index).
    std::size_t pick = ids_.size();
    for (std::size_t w = 0; w < words_ && pick == ids_.size(); ++w) {
      if (open[w] != 0) pick = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
    }
    if (pick == ids_.size()) return;
    const std::uint64_t bit = std::uint64_t{1} << (pick % 64);
    open[pick / 64] &= ~bit;
    Bits rest = open;
    for (std::size_t w = 0; w < words_; ++w) rest[w] &= ~adj_[pick][w];
    chosen.push_back(pick);
    recurse(rest, chosen, weight + weights_[pick]);
    chosen.pop_back();
    recurse(open, chosen, weight);
    open[pick / 64] |= bit;
  }

  std::vector<VertexId> ids_;
  std::size_t words_;
  std::vector<Weight> weights_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
  Weight best_weight_ = 0;
};

}  // namespace detail

/// Maximum-weight independent set by exhaustive branching; ties resolve to the
/// lexicographically smallest member list. Throws SizeLimit above 30 vertices.
inline OracleResult brute_force_mwis(const DynGraph& g) {
  if (g.num_vertices() > kOracleLimit) {
    throw Error(ErrorCode::SizeLimit, "oracle is limited to " + std::to_string(kOracleLimit) + " vertices");
  }
  return detail::BruteForce(g).run();
}

/// Maximum-weight independent set of any size; the exhaustive oracle (and its
/// tie-breaking) up to 30 vertices, branch-and-bound beyond.
inline OracleResult exact_mwis(const DynGraph& g) {
  if (g.num_vertices() <= kOracleLimit) return brute_force_mwis(g);
  return detail::BitsetSearch(g).run();
}

}  // namespace mwis
