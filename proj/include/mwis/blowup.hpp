#pragma once

// Cyclic blow-up: alternate single increasing structions with full reduction
// runs and keep a blow-up only if the subsequent reduction ends below the
// previous kernel size.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/reductions.hpp"
#include "mwis/struction.hpp"
#include "mwis/transform_log.hpp"

namespace mwis {

struct BlowupConfig {
  std::size_t max_unsuccessful = 64;  // X
  std::size_t n_max = 2048;
  std::size_t d_max = 512;
  double alpha = 1.25;
  double beta = 2.0;
  StructionVariant variant = StructionVariant::Extended;
  std::size_t structions_per_phase = 1;
  ReduceConfig reduce_cfg;

  void validate() const {
    if (max_unsuccessful < 1 || n_max < 1 || !(beta > 1.0) || !(alpha >= 1.0) || structions_per_phase < 1) {
      throw std::invalid_argument("invalid blow-up configuration");
    }
  }
};

enum class Preset : std::uint8_t { NonIncreasing, CyclicFast, CyclicStrong };

constexpr std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::NonIncreasing: return "nonincreasing";
    case Preset::CyclicFast: return "cyclic-fast";
    case Preset::CyclicStrong: return "cyclic-strong";
  }
  return "unknown";
}

inline std::optional<Preset> parse_preset(std::string_view name) {
  for (Preset p : {Preset::NonIncreasing, Preset::CyclicFast, Preset::CyclicStrong}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

/// Blow-up parameters of a cyclic preset (NonIncreasing gets the strong values
/// but never runs a blow-up).
inline BlowupConfig preset_config(Preset p) {
  BlowupConfig cfg;
  if (p == Preset::CyclicFast) {
    cfg.max_unsuccessful = 25;
    cfg.n_max = 512;
    cfg.d_max = 64;
  }
  cfg.reduce_cfg.variant = cfg.variant;
  return cfg;
}

/// Lower bound on the vertices an extended struction at v creates: heavier
/// single neighbors plus heavier non-adjacent neighbor pairs.
inline std::size_t estimate_lower_bound(const DynGraph& g, VertexId v) {
  const auto nbrs = g.neighbors(v);
  const Weight wv = g.weight(v);
  std::size_t count = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const Weight wi = g.weight(nbrs[i]);
    if (wi > wv) ++count;
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (wi + g.weight(nbrs[j]) > wv && !g.is_adjacent(nbrs[i], nbrs[j])) ++count;
    }
  }
  return count;
}

/// Blow-up candidates ordered by estimated net growth, then id.
class CandidateQueue {
 public:
  using Key = long long;

  /// (Re)computes v's entry from scratch; clears any exclusion.
  void refresh(const DynGraph& g, VertexId v, std::size_t d_max) {
    erase(v);
    if (v < excluded_.size()) excluded_[v] = 0;
    if (!g.is_active(v) || g.degree(v) > d_max) return;
    insert(g, v, estimate_lower_bound(g, v));
  }

  void insert(const DynGraph& g, VertexId v, std::size_t bound) {
    erase(v);
    grow(v);
    const Key key = static_cast<Key>(bound) - static_cast<Key>(g.degree(v) + 1);
    entries_[v] = Entry{key, bound, true};
    order_.emplace(key, v);
  }

  void erase(VertexId v) {
    if (v >= entries_.size() || !entries_[v].queued) return;
    order_.erase({entries_[v].key, v});
    entries_[v].queued = false;
  }

  void exclude(VertexId v) {
    erase(v);
    grow(v);
    excluded_[v] = 1;
  }

  bool is_excluded(VertexId v) const { return v < excluded_.size() && excluded_[v]; }
  bool contains(VertexId v) const { return v < entries_.size() && entries_[v].queued; }
  std::size_t bound(VertexId v) const { return entries_.at(v).bound; }

  /// Removes and returns the minimum entry as (vertex, bound).
  std::optional<std::pair<VertexId, std::size_t>> pop() {
    if (order_.empty()) return std::nullopt;
    const VertexId v = order_.begin()->second;
    order_.erase(order_.begin());
    entries_[v].queued = false;
    return std::make_pair(v, entries_[v].bound);
  }

  bool empty() const { return order_.empty(); }
  std::size_t size() const { return order_.size(); }

  static CandidateQueue build(const DynGraph& g, std::size_t d_max) {
    CandidateQueue q;
    for (VertexId v : g.active_vertices()) q.refresh(g, v, d_max);
    return q;
  }

 private:
  struct Entry {
    Key key = 0;
    std::size_t bound = 0;
    bool queued = false;
  };

  void grow(VertexId v) {
    if (v >= entries_.size()) {
      const std::size_t n = std::max<std::size_t>(v + 1, entries_.size() * 2);
      entries_.resize(n);
      excluded_.resize(n, 0);
    }
  }

  std::vector<Entry> entries_;
  std::vector<char> excluded_;
  std::set<std::pair<Key, VertexId>> order_;
};

enum class BlowupStatus : std::uint8_t { Changed, NoCandidate };

/// One struction attempt made by blow_up.
struct BlowupAttempt {
  VertexId center;
  std::size_t bound;
  std::size_t cap;
  enum class Outcome : std::uint8_t { Applied, TightnessAbort, SizeAbort } outcome;
};

/// Applies one struction at the best candidate of `queue`.
inline BlowupStatus blow_up(DynGraph& g, CandidateQueue& queue, const BlowupConfig& cfg, TransformLog& log,
                            std::vector<BlowupAttempt>* trace = nullptr) {
  while (auto top = queue.pop()) {
    const auto [v, bound] = *top;
    if (!g.is_active(v) || g.degree(v) > cfg.d_max || !struction_applicable(cfg.variant, g, v)) continue;
    const auto tight = static_cast<std::size_t>(std::ceil(cfg.beta * static_cast<double>(std::max<std::size_t>(bound, 1))));
    const std::size_t cap = std::min(tight - 1, cfg.n_max);
    const bool applied = apply_struction(cfg.variant, g, v, cap, log).has_value();
    using Outcome = BlowupAttempt::Outcome;
    if (applied) {
      if (trace != nullptr) trace->push_back({v, bound, cap, Outcome::Applied});
      return BlowupStatus::Changed;
    }
    if (cap == cfg.n_max) {
      if (trace != nullptr) trace->push_back({v, bound, cap, Outcome::SizeAbort});
      queue.exclude(v);
    } else {
      if (trace != nullptr) trace->push_back({v, bound, cap, Outcome::TightnessAbort});
      queue.insert(g, v, tight);
    }
  }
  return BlowupStatus::NoCandidate;
}

struct BlowupStats {
  std::size_t initial_n = 0;
  std::size_t final_n = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t phases = 0;
};

/// Reduces `g`, then alternates blow-up and reduction phases while the
/// kernel keeps shrinking, returning the smallest kernel seen.
inline KernelResult cyclic_blow_up(DynGraph g, const BlowupConfig& cfg, BlowupStats* stats_out = nullptr,
                                   std::vector<BlowupAttempt>* trace = nullptr) {
  cfg.validate();
  Kernelizer kz(std::move(g), cfg.reduce_cfg);
  kz.reduce();

  BlowupStats stats;
  stats.initial_n = kz.graph().num_vertices();
  // Only strictly smaller kernels are accepted, so the current kernel is
  // always the best one.
  std::size_t best_n = stats.initial_n;
  CandidateQueue queue = CandidateQueue::build(kz.graph(), cfg.d_max);
  std::size_t unsuccessful = 0;

  auto refresh = [&](const std::vector<VertexId>& changed, bool keep_excluded) {
    const DynGraph& k = kz.graph();
    auto one = [&](VertexId u) {
      if (!keep_excluded || !queue.is_excluded(u)) queue.refresh(k, u, cfg.d_max);
    };
    for (VertexId t : changed) {
      one(t);
      if (!k.is_active(t)) continue;
      for (VertexId u : k.neighbors(t)) one(u);
    }
  };

  while (static_cast<double>(kz.graph().num_vertices()) < cfg.alpha * static_cast<double>(best_n) &&
         unsuccessful < cfg.max_unsuccessful && !kz.graph().empty()) {
    const std::size_t n_before = kz.graph().num_vertices();
    auto cp = kz.checkpoint();
    kz.collect_changes(true);

    std::vector<VertexId> changed;
    std::size_t applied = 0;
    std::optional<VertexId> first_center;
    for (std::size_t i = 0; i < cfg.structions_per_phase; ++i) {
      std::vector<BlowupAttempt> local;
      auto* sink = trace != nullptr ? trace : &local;
      if (blow_up(kz.graph(), queue, cfg, kz.log(), sink) == BlowupStatus::NoCandidate) break;
      if (!first_center) first_center = sink->back().center;
      ++applied;
      auto delta = kz.take_changes();
      refresh(delta, false);
      changed.insert(changed.end(), delta.begin(), delta.end());
    }
    if (applied == 0) {
      kz.collect_changes(false);
      kz.restore(std::move(cp));
      break;
    }
    ++stats.phases;

    kz.reduce();
    if (kz.graph().num_vertices() < n_before) {
      ++stats.accepted;
      auto delta = kz.take_changes();
      changed.insert(changed.end(), delta.begin(), delta.end());
      kz.collect_changes(false);
      refresh(changed, false);
      best_n = std::min(best_n, kz.graph().num_vertices());
    } else {
      ++stats.rejected;
      ++unsuccessful;
      kz.collect_changes(false);
      kz.restore(std::move(cp));
      // Entries refreshed against the discarded graph are recomputed on the
      // restored one; the failed center stays out until its neighborhood changes.
      refresh(changed, true);
      queue.exclude(*first_center);
    }
  }

  stats.final_n = kz.graph().num_vertices();
  if (stats_out != nullptr) *stats_out = stats;
  return std::move(kz).into_result();
}

/// Kernel for a named preset.
inline KernelResult kernelize(DynGraph g, Preset preset, BlowupStats* stats_out = nullptr) {
  const BlowupConfig cfg = preset_config(preset);
  if (preset == Preset::NonIncreasing) {
    auto result = reduce(std::move(g), cfg.reduce_cfg);
    if (stats_out != nullptr) {
      *stats_out = BlowupStats{};
      stats_out->initial_n = stats_out->final_n = result.kernel.num_vertices();
    }
    return result;
  }
  return cyclic_blow_up(std::move(g), cfg, stats_out);
}

}  // namespace mwis
