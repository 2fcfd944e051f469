#pragma once

// Branch-and-reduce: reduce, bound, split into components, branch.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mwis/blowup.hpp"
#include "mwis/bounds.hpp"
#include "mwis/graph.hpp"
#include "mwis/oracle.hpp"
#include "mwis/reductions.hpp"
#include "mwis/transform_log.hpp"

namespace mwis {

struct Component {
  DynGraph graph;
  /// Local id i corresponds to parent id to_parent[i]; ascending.
  std::vector<VertexId> to_parent;
};

/// Connected components with compact ids, ordered by their smallest vertex.
inline std::vector<Component> components(const DynGraph& g) {
  std::vector<Component> out;
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexId> stack;
  for (VertexId root : g.active_vertices()) {
    if (seen[root]) continue;
    std::vector<VertexId> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Weight> weights;
    std::vector<std::vector<VertexId>> lists;
    for (VertexId v : members) {
      weights.push_back(g.weight(v));
      auto& list = lists.emplace_back();
      for (VertexId u : g.neighbors(v)) {
        list.push_back(static_cast<VertexId>(std::lower_bound(members.begin(), members.end(), u) - members.begin()));
      }
    }
    out.push_back({DynGraph::from_adjacency(std::move(weights), std::move(lists)), std::move(members)});
  }
  return out;
}

/// Vertex to branch on: maximum degree, then maximum weight, then smallest id.
inline VertexId branching_vertex(const DynGraph& g) {
  VertexId best = kNoVertex;
  for (VertexId v : g.active_vertices()) {
    if (best == kNoVertex || g.degree(v) > g.degree(best) ||
        (g.degree(v) == g.degree(best) && g.weight(v) > g.weight(best))) {
      best = v;
    }
  }
  return best;
}

struct BranchCase {
  DynGraph graph;
  TransformLog log;
  Weight offset() const { return log.offset(); }
};

/// Include case (N[v] removed) and exclude case (v removed) at the branching vertex.
inline std::pair<BranchCase, BranchCase> branch(const DynGraph& g) {
  const VertexId v = branching_vertex(g);
  if (v == kNoVertex) throw std::invalid_argument("cannot branch on an empty graph");
  BranchCase include{g, {}};
  include.log.record(event::IncludedVertex{v, g.weight(v)});
  const std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  for (VertexId u : nbrs) include.graph.remove_vertex(u);
  include.graph.remove_vertex(v);
  BranchCase exclude{g, {}};
  exclude.log.record(event::ExcludedVertex{v});
  exclude.graph.remove_vertex(v);
  return {std::move(include), std::move(exclude)};
}

enum class SolveStatus : std::uint8_t { Optimal, TimeLimit };

constexpr std::string_view to_string(SolveStatus s) { return s == SolveStatus::Optimal ? "optimal" : "time_limit"; }

struct SolverConfig {
  Preset preset = Preset::NonIncreasing;
  /// Overrides the preset's blow-up parameters when set.
  std::optional<BlowupConfig> blowup;
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::size_t local_search_budget = 50;
  std::uint64_t seed = 0;
  /// Checks local_search <= optimum <= upper_bound on every small subproblem.
  bool check_bounds = false;
  /// Reductions used at every search node.
  ReduceConfig inner = ReduceConfig::decreasing_only();
};

struct SolveStats {
  std::size_t kernel_n = 0;
  std::size_t kernel_m = 0;
  Weight offset = 0;
  std::size_t nodes = 0;
  std::size_t branches = 0;
  std::size_t max_depth = 0;
  std::size_t components_split = 0;
  BlowupStats blowup;
  double reduce_ms = 0.0;
  double solve_ms = 0.0;
};

struct SolveResult {
  Weight weight = 0;
  std::vector<VertexId> solution;  // original ids, ascending
  SolveStatus status = SolveStatus::Optimal;
  SolveStats stats;
};

namespace detail {

class BranchAndReduce {
 public:
  using Clock = std::chrono::steady_clock;

  BranchAndReduce(const SolverConfig& cfg, Clock::time_point deadline, SolveStats& stats)
      : cfg_(cfg), deadline_(deadline), stats_(stats) {}

  /// Best independent set of g, seeded with local search.
  std::vector<VertexId> solve_seeded(const DynGraph& g, std::size_t depth) {
    auto seed = local_search(g, cfg_.local_search_budget, cfg_.seed);
    if (auto better = search(g, seed.weight, depth)) return std::move(*better);
    return std::move(seed.solution);
  }

  /// The heaviest independent set of g weighing more than `need`, or nullopt
  /// if there is none (or time ran out before one was found).
  std::optional<std::vector<VertexId>> search(const DynGraph& g, Weight need, std::size_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (timed_out_ || Clock::now() >= deadline_) {
      timed_out_ = true;
      return std::nullopt;
    }

    KernelResult reduced = reduce(g, cfg_.inner);
    const DynGraph& k = reduced.kernel;
    Weight local_need = need - reduced.offset();
    if (cfg_.check_bounds) check_bounds(k);

    std::optional<std::vector<VertexId>> best;
    if (k.empty()) {
      if (local_need < 0) best.emplace();
    } else if (upper_bound(k) <= local_need) {
      return std::nullopt;
    } else if (auto parts = components(k); parts.size() > 1) {
      ++stats_.components_split;
      std::vector<VertexId> joined;
      Weight total = 0;
      for (const auto& part : parts) {
        auto sol = solve_seeded(part.graph, depth + 1);
        total += weight_of(part.graph, sol);
        for (VertexId v : sol) joined.push_back(part.to_parent[v]);
      }
      if (total > local_need) best = std::move(joined);
    } else {
      ++stats_.branches;
      auto [include, exclude] = branch(k);
      const VertexId v = std::get<event::IncludedVertex>(include.log.events().front()).v;
      if (auto sol = search(include.graph, local_need - include.offset(), depth + 1)) {
        sol->push_back(v);
        local_need = weight_of(k, *sol);
        best = std::move(sol);
      }
      if (auto sol = search(exclude.graph, local_need, depth + 1)) best = std::move(sol);
    }
    if (!best) return std::nullopt;
    return lift(reduced.log, *best);
  }

  bool timed_out() const { return timed_out_; }

 private:
  void check_bounds(const DynGraph& k) const {
    if (k.num_vertices() > 20) return;
    const Weight opt = brute_force_mwis(k).weight;
    const Weight lower = local_search(k, cfg_.local_search_budget, cfg_.seed).weight;
    const Weight upper = upper_bound(k);
    if (lower > opt || opt > upper) throw std::logic_error("bound sandwich violated");
  }

  const SolverConfig& cfg_;
  Clock::time_point deadline_;
  SolveStats& stats_;
  bool timed_out_ = false;
};

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Solves an already reduced instance: `kernel` plus the log leading to it
/// from `original`.
inline SolveResult solve_kernel(const DynGraph& original, const KernelResult& kernel, const SolverConfig& cfg,
                                SolveStats stats = {}) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto deadline = Clock::time_point::max();
  if (cfg.time_limit_s <= 0) throw std::invalid_argument("time limit must be positive");
  if (cfg.time_limit_s < 1e9) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit_s));
  }

  stats.kernel_n = kernel.kernel.num_vertices();
  stats.kernel_m = kernel.kernel.num_edges();
  stats.offset = kernel.offset();
  detail::BranchAndReduce bnr(cfg, deadline, stats);
  const auto kernel_solution = bnr.solve_seeded(kernel.kernel, 0);

  SolveResult result;
  result.solution = lift(kernel.log, kernel.kernel, kernel_solution);
  result.weight = weight_of(original, result.solution);
  result.status = bnr.timed_out() ? SolveStatus::TimeLimit : SolveStatus::Optimal;
  stats.solve_ms = detail::ms_since(start);
  result.stats = stats;
  if (result.status == SolveStatus::Optimal) {
    const Weight expected = weight_of(kernel.kernel, kernel_solution) + kernel.offset();
    if (!verify_lift(original, result.solution, expected)) throw std::logic_error("lifted solution failed verification");
  } else if (!is_independent(original, result.solution)) {
    throw std::logic_error("lifted solution is not independent");
  }
  return result;
}

/// Kernelizes with the configured preset, then runs branch-and-reduce.
inline SolveResult solve(const DynGraph& g, const SolverConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  SolveStats stats;
  KernelResult kernel = [&] {
    if (cfg.blowup && cfg.preset != Preset::NonIncreasing) return cyclic_blow_up(g, *cfg.blowup, &stats.blowup);
    return kernelize(g, cfg.preset, &stats.blowup);
  }();
  stats.reduce_ms = detail::ms_since(start);
  return solve_kernel(g, kernel, cfg, stats);
}

}  // namespace mwis
