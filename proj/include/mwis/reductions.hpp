#pragma once

// Non-increasing reduction pipeline: decreasing rules plus plateau structions,
// applied exhaustively in a fixed rule order with dirty-vertex scheduling.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string_view>
#include <utility>
#include <vector>

#include "mwis/clique_cover.hpp"
#include "mwis/graph.hpp"
#include "mwis/struction.hpp"
#include "mwis/transform_log.hpp"

namespace mwis {

enum class Rule : std::uint8_t {
  NeighborhoodRemoval,
  DegreeTwoFold,
  CliqueReduction,
  Domination,
  Twin,
  CliqueNeighborhoodRemoval,
  DecreasingStruction,
  PlateauStruction,
};

inline constexpr std::size_t kNumRules = 8;

/// Cheapest first. Whenever a rule fires, scanning restarts at the front.
inline constexpr std::array<Rule, kNumRules> kRuleOrder = {
    Rule::NeighborhoodRemoval, Rule::DegreeTwoFold, Rule::CliqueReduction,           Rule::Domination,
    Rule::Twin,                Rule::CliqueNeighborhoodRemoval, Rule::DecreasingStruction, Rule::PlateauStruction,
};

constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::NeighborhoodRemoval: return "neighborhood_removal";
    case Rule::DegreeTwoFold: return "degree_two_fold";
    case Rule::CliqueReduction: return "clique_reduction";
    case Rule::Domination: return "domination";
    case Rule::Twin: return "twin";
    case Rule::CliqueNeighborhoodRemoval: return "clique_neighborhood_removal";
    case Rule::DecreasingStruction: return "decreasing_struction";
    case Rule::PlateauStruction: return "plateau_struction";
  }
  return "unknown";
}

struct ReduceConfig {
  std::array<bool, kNumRules> enabled = {true, true, true, true, true, true, true, true};
  bool plateau_enabled = true;
  StructionVariant variant = StructionVariant::Extended;
  /// Structions are only attempted at centers of degree <= d_max.
  std::size_t d_max = 64;
  /// Plateau structions per reduce() call; unset means 4 * |V| at call time.
  std::optional<std::size_t> plateau_budget;

  bool is_enabled(Rule r) const {
    if (r == Rule::PlateauStruction && !plateau_enabled) return false;
    return enabled[static_cast<std::size_t>(r)];
  }

  /// Decreasing transformations only (used inside branch-and-reduce).
  static ReduceConfig decreasing_only(StructionVariant variant = StructionVariant::Extended, std::size_t d_max = 64) {
    ReduceConfig cfg;
    cfg.plateau_enabled = false;
    cfg.variant = variant;
    cfg.d_max = d_max;
    return cfg;
  }

  static ReduceConfig only(std::initializer_list<Rule> rules) {
    ReduceConfig cfg;
    cfg.enabled.fill(false);
    for (Rule r : rules) cfg.enabled[static_cast<std::size_t>(r)] = true;
    return cfg;
  }
};

struct ReduceStats {
  std::array<std::size_t, kNumRules> applied{};
  std::size_t zero_weight_removals = 0;
  double elapsed_ms = 0.0;

  std::size_t count(Rule r) const { return applied[static_cast<std::size_t>(r)]; }
  std::size_t total() const {
    std::size_t sum = zero_weight_removals;
    for (auto c : applied) sum += c;
    return sum;
  }
};

struct KernelResult {
  DynGraph kernel;
  TransformLog log;
  ReduceStats stats;

  Weight offset() const { return log.offset(); }
};

// ---------------------------------------------------------------------------
// Individual rules. Each inspects vertex v and either transforms the graph
// (recording the event) and returns true, or leaves everything untouched.

namespace detail {

inline void include_vertex(DynGraph& g, TransformLog& log, VertexId v) {
  log.record(event::IncludedVertex{v, g.weight(v)});
  const auto nbrs = copy_neighbors(g, v);
  for (VertexId u : nbrs) g.remove_vertex(u);
  g.remove_vertex(v);
}

}  // namespace detail

/// w(v) >= w(N(v)): v belongs to some maximum-weight independent set.
inline bool neighborhood_removal(DynGraph& g, TransformLog& log, VertexId v) {
  if (g.weight(v) < g.neighborhood_weight(v)) return false;
  detail::include_vertex(g, log, v);
  return true;
}

/// N(v) = {u, x} non-adjacent with max(w(u), w(x)) <= w(v) < w(u) + w(x):
/// fold {v, u, x} into one vertex of weight w(u) + w(x) - w(v).
inline bool degree_two_fold(DynGraph& g, TransformLog& log, VertexId v) {
  if (g.degree(v) != 2) return false;
  const VertexId u = g.neighbors(v)[0];
  const VertexId x = g.neighbors(v)[1];
  const Weight wv = g.weight(v);
  const Weight wu = g.weight(u);
  const Weight wx = g.weight(x);
  if (wv < std::max(wu, wx) || wv >= wu + wx || g.is_adjacent(u, x)) return false;

  auto nbrs = detail::sorted_union(detail::copy_neighbors(g, u), g.neighbors(x));
  nbrs.erase(std::remove(nbrs.begin(), nbrs.end(), v), nbrs.end());
  g.remove_vertex(v);
  g.remove_vertex(u);
  g.remove_vertex(x);
  const VertexId folded = g.add_vertex_with_neighbors(wu + wx - wv, nbrs);
  log.record(event::DegreeTwoFold{v, u, x, folded, wv});
  return true;
}

/// N(v) is a clique and v is at least as heavy as every neighbor.
inline bool clique_reduction(DynGraph& g, TransformLog& log, VertexId v) {
  const auto nbrs = g.neighbors(v);
  const Weight wv = g.weight(v);
  for (VertexId u : nbrs) {
    if (g.weight(u) > wv || g.degree(u) + 1 < nbrs.size()) return false;
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.is_adjacent(nbrs[i], nbrs[j])) return false;
    }
  }
  detail::include_vertex(g, log, v);
  return true;
}

/// Some neighbor u with N[u] subset of N[v] and w(u) >= w(v): v can be dropped.
inline bool domination(DynGraph& g, TransformLog& log, VertexId v) {
  const auto nv = g.neighbors(v);
  const Weight wv = g.weight(v);
  for (VertexId u : nv) {
    if (g.weight(u) < wv || g.degree(u) > nv.size()) continue;
    const auto nu = g.neighbors(u);
    const bool dominated = std::all_of(nu.begin(), nu.end(), [&](VertexId z) {
      return z == v || std::binary_search(nv.begin(), nv.end(), z);
    });
    if (dominated) {
      log.record(event::ExcludedVertex{v});
      g.remove_vertex(v);
      return true;
    }
  }
  return false;
}

/// A non-adjacent u with N(u) = N(v): both or neither are in an optimum, so
/// merge u into v.
inline bool twin_merge(DynGraph& g, TransformLog& log, VertexId v) {
  const auto nv = g.neighbors(v);
  if (nv.empty()) return false;
  VertexId pivot = nv.front();
  for (VertexId x : nv) {
    if (g.degree(x) < g.degree(pivot)) pivot = x;
  }
  for (VertexId u : g.neighbors(pivot)) {
    if (u == v || g.degree(u) != nv.size()) continue;
    const auto nu = g.neighbors(u);
    if (!std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) continue;
    const Weight merged = g.weight(v) + g.weight(u);
    log.record(event::TwinMerge{v, u});
    g.remove_vertex(u);
    g.set_weight(v, merged);
    return true;
  }
  return false;
}

/// w(v) at least the clique-cover bound of G[N(v)].
inline bool clique_neighborhood_removal(DynGraph& g, TransformLog& log, VertexId v) {
  const auto nbrs = g.neighbors(v);
  const Weight wv = g.weight(v);
  for (VertexId u : nbrs) {
    if (g.weight(u) > wv) return false;
  }
  const auto cover = greedy_clique_cover(g, nbrs);
  if (clique_cover_bound(g, cover) > wv) return false;
  detail::include_vertex(g, log, v);
  return true;
}

namespace detail {

inline bool struction_rule(DynGraph& g, TransformLog& log, VertexId v, const ReduceConfig& cfg, bool plateau) {
  const std::size_t degree = g.degree(v);
  if (degree > cfg.d_max || !struction_applicable(cfg.variant, g, v)) return false;
  const bool pair_based = cfg.variant == StructionVariant::Original || cfg.variant == StructionVariant::Modified;
  // Pair-based variants only remove v; the set-based ones remove N[v].
  const std::size_t removed = pair_based ? 1 : degree + 1;
  const std::size_t cap = plateau ? removed : removed - 1;
  return apply_struction(cfg.variant, g, v, cap, log).has_value();
}

}  // namespace detail

/// Struction that strictly shrinks the graph.
inline bool decreasing_struction(DynGraph& g, TransformLog& log, VertexId v, const ReduceConfig& cfg) {
  return detail::struction_rule(g, log, v, cfg, false);
}

/// Struction that keeps the vertex count (but raises the offset by w(v) >= 1).
inline bool plateau_struction(DynGraph& g, TransformLog& log, VertexId v, const ReduceConfig& cfg) {
  return detail::struction_rule(g, log, v, cfg, true);
}

// ---------------------------------------------------------------------------

/// Owns a graph and its transformation log and reduces it to a fixed point.
class Kernelizer {
 public:
  explicit Kernelizer(DynGraph g, ReduceConfig cfg = {}) : graph_(std::move(g)), cfg_(std::move(cfg)) {
    graph_.set_tracking(true);
    for (VertexId v : graph_.active_vertices()) mark_dirty(v);
    plateau_left_ = cfg_.plateau_budget.value_or(4 * graph_.num_vertices());
  }

  /// Applies enabled rules until none applies anywhere.
  void reduce() {
    const auto start = std::chrono::steady_clock::now();
    absorb_changes();
    plateau_left_ = cfg_.plateau_budget.value_or(4 * graph_.num_vertices());
    std::size_t r = 0;
    while (r < kRuleOrder.size()) {
      auto& queue = queues_[r];
      if (queue.empty()) {
        ++r;
        continue;
      }
      const VertexId v = queue.pop();
      if (!graph_.is_active(v)) continue;
      if (graph_.weight(v) == 0) {
        log_.record(event::ExcludedVertex{v});
        graph_.remove_vertex(v);
        ++stats_.zero_weight_removals;
        absorb_changes();
        r = 0;
        continue;
      }
      if (attempt(kRuleOrder[r], v)) r = 0;
    }
    stats_.elapsed_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  /// Tries a single rule at v, honoring the plateau budget and exclusion set.
  bool attempt(Rule rule, VertexId v) {
    if (!cfg_.is_enabled(rule) || !graph_.is_active(v)) return false;
    if (rule == Rule::PlateauStruction) {
      if (plateau_left_ == 0 || is_plateau_excluded(v)) return false;
    }
    const bool applied = dispatch(rule, v);
    if (applied) {
      ++stats_.applied[static_cast<std::size_t>(rule)];
      if (rule == Rule::PlateauStruction) --plateau_left_;
      absorb_changes();
    } else if (rule == Rule::PlateauStruction) {
      set_plateau_excluded(v, true);
    }
    return applied;
  }

  /// Moves graph changes made outside the rules (e.g. a blow-up struction)
  /// into the dirty queues.
  void absorb_changes() {
    auto touched = graph_.take_touched();
    for (VertexId t : touched) {
      if (collect_changes_) changes_.push_back(t);
      if (!graph_.is_active(t)) continue;
      mark_dirty(t);
      for (VertexId u : graph_.neighbors(t)) mark_dirty(u);
    }
  }

  /// Starts / stops recording every touched vertex for take_changes().
  void collect_changes(bool on) {
    collect_changes_ = on;
    changes_.clear();
  }
  std::vector<VertexId> take_changes() {
    absorb_changes();
    return std::exchange(changes_, {});
  }

  const DynGraph& graph() const noexcept { return graph_; }
  DynGraph& graph() noexcept { return graph_; }
  const TransformLog& log() const noexcept { return log_; }
  TransformLog& log() noexcept { return log_; }
  const ReduceStats& stats() const noexcept { return stats_; }
  const ReduceConfig& config() const noexcept { return cfg_; }
  std::size_t plateau_budget_left() const noexcept { return plateau_left_; }
  bool is_plateau_excluded(VertexId v) const { return v < plateau_excluded_.size() && plateau_excluded_[v]; }

  /// State needed to undo everything after this point.
  struct Checkpoint {
    DynGraph graph;
    std::size_t log_size;
    std::vector<char> plateau_excluded;
    ReduceStats stats;
  };

  Checkpoint checkpoint() {
    absorb_changes();
    return {graph_, log_.size(), plateau_excluded_, stats_};
  }

  void restore(Checkpoint cp) {
    graph_ = std::move(cp.graph);
    graph_.set_tracking(true);
    log_.truncate(cp.log_size);
    plateau_excluded_ = std::move(cp.plateau_excluded);
    stats_ = cp.stats;
    for (auto& q : queues_) q.clear();
  }

  KernelResult into_result() && {
    graph_.set_tracking(false);
    return {std::move(graph_), std::move(log_), stats_};
  }

 private:
  class DirtyQueue {
   public:
    void push(VertexId v) {
      if (v >= queued_.size()) queued_.resize(std::max<std::size_t>(v + 1, queued_.size() * 2), 0);
      if (queued_[v]) return;
      queued_[v] = 1;
      heap_.push(v);
    }
    VertexId pop() {
      const VertexId v = heap_.top();
      heap_.pop();
      queued_[v] = 0;
      return v;
    }
    bool empty() const { return heap_.empty(); }
    void clear() {
      heap_ = {};
      std::fill(queued_.begin(), queued_.end(), 0);
    }

   private:
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> heap_;
    std::vector<char> queued_;
  };

  bool dispatch(Rule rule, VertexId v) {
    switch (rule) {
      case Rule::NeighborhoodRemoval: return neighborhood_removal(graph_, log_, v);
      case Rule::DegreeTwoFold: return degree_two_fold(graph_, log_, v);
      case Rule::CliqueReduction: return clique_reduction(graph_, log_, v);
      case Rule::Domination: return domination(graph_, log_, v);
      case Rule::Twin: return twin_merge(graph_, log_, v);
      case Rule::CliqueNeighborhoodRemoval: return clique_neighborhood_removal(graph_, log_, v);
      case Rule::DecreasingStruction: return decreasing_struction(graph_, log_, v, cfg_);
      case Rule::PlateauStruction: return plateau_struction(graph_, log_, v, cfg_);
    }
    return false;
  }

  void mark_dirty(VertexId v) {
    set_plateau_excluded(v, false);
    for (std::size_t r = 0; r < kRuleOrder.size(); ++r) {
      if (cfg_.is_enabled(kRuleOrder[r])) queues_[r].push(v);
    }
  }

  void set_plateau_excluded(VertexId v, bool on) {
    if (v >= plateau_excluded_.size()) {
      if (!on) return;
      plateau_excluded_.resize(std::max<std::size_t>(v + 1, plateau_excluded_.size() * 2), 0);
    }
    plateau_excluded_[v] = on ? 1 : 0;
  }

  DynGraph graph_;
  ReduceConfig cfg_;
  TransformLog log_;
  ReduceStats stats_;
  std::array<DirtyQueue, kNumRules> queues_;
  std::vector<char> plateau_excluded_;
  std::size_t plateau_left_ = 0;
  bool collect_changes_ = false;
  std::vector<VertexId> changes_;
};

/// Reduces `g` to a kernel under `cfg`.
inline KernelResult reduce(DynGraph g, const ReduceConfig& cfg = {}) {
  Kernelizer k(std::move(g), cfg);
  k.reduce();
  return std::move(k).into_result();
}

}  // namespace mwis
