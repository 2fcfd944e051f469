#pragma once

// Weighted struction transformations. Every variant removes a center vertex v,
// encodes the independent sets of N(v) that can beat v by fresh vertices, and
// satisfies alpha_w(G) = alpha_w(G') + w(v).
//
// All operations are transactional: the number of vertices to create is known
// (or the enumeration aborts) before the graph is touched, so an aborted
// application leaves the graph unchanged.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/transform_log.hpp"

namespace mwis {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Independent subset of a neighborhood, members ascending.
struct NeighborhoodSet {
  std::vector<VertexId> members;
  Weight weight = 0;
  friend bool operator==(const NeighborhoodSet&, const NeighborhoodSet&) = default;
};

struct StructionOutcome {
  VertexId center = kNoVertex;
  Weight offset_delta = 0;
  /// Every vertex removed, including neighbors dropped because their weight reached 0.
  std::vector<VertexId> removed;
  std::vector<event::CreatedVertex> created;
};

namespace detail {

/// Induced subgraph on a sorted vertex set, addressed by local indices.
class LocalView {
 public:
  LocalView(const DynGraph& g, std::span<const VertexId> sorted_ids)
      : ids_(sorted_ids.begin(), sorted_ids.end()), weights_(ids_.size()), adj_(ids_.size()) {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      weights_[i] = g.weight(ids_[i]);
      for (VertexId z : g.neighbors(ids_[i])) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), z);
        if (it != ids_.end() && *it == z) adj_[i].push_back(static_cast<std::uint32_t>(it - ids_.begin()));
      }
    }
  }

  std::size_t size() const { return ids_.size(); }
  VertexId id(std::size_t i) const { return ids_[i]; }
  Weight weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint32_t>& adj(std::size_t i) const { return adj_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return std::binary_search(adj_[i].begin(), adj_[i].end(), static_cast<std::uint32_t>(j));
  }
  bool contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  const std::vector<VertexId>& ids() const { return ids_; }

 private:
  std::vector<VertexId> ids_;
  std::vector<Weight> weights_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

using LocalSet = std::vector<std::uint32_t>;

/// Depth-first enumeration of independent sets with weight > threshold.
/// Returns nullopt as soon as more than `cap` sets were found.
class ExceedingSetEnumerator {
 public:
  ExceedingSetEnumerator(const LocalView& view, Weight threshold, std::size_t cap, bool minimal_only)
      : view_(view), threshold_(threshold), cap_(cap), minimal_only_(minimal_only),
        blocked_(view.size(), 0), suffix_(view.size() + 1, 0) {
    for (std::size_t i = view.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + view.weight(i);
  }

  std::optional<std::vector<LocalSet>> run() {
    if (!dfs(0, 0)) return std::nullopt;
    std::sort(found_.begin(), found_.end(), [](const LocalSet& a, const LocalSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return std::move(found_);
  }

 private:
  bool dfs(std::size_t start, Weight weight) {
    for (std::size_t i = start; i < view_.size(); ++i) {
      if (weight + suffix_[i] <= threshold_) break;
      if (blocked_[i] != 0) continue;
      const Weight next = weight + view_.weight(i);
      chosen_.push_back(static_cast<std::uint32_t>(i));
      if (next > threshold_) {
        if (!minimal_only_ || is_minimal(next)) {
          found_.push_back(chosen_);
          if (found_.size() > cap_) return false;
        }
      }
      // Supersets of an exceeding set are never minimal.
      if (!(minimal_only_ && next > threshold_)) {
        for (auto j : view_.adj(i)) ++blocked_[j];
        const bool ok = dfs(i + 1, next);
        for (auto j : view_.adj(i)) --blocked_[j];
        if (!ok) return false;
      }
      chosen_.pop_back();
    }
    return true;
  }

  bool is_minimal(Weight total) const {
    Weight lightest = std::numeric_limits<Weight>::max();
    for (auto i : chosen_) lightest = std::min(lightest, view_.weight(i));
    return total - lightest <= threshold_;
  }

  const LocalView& view_;
  Weight threshold_;
  std::size_t cap_;
  bool minimal_only_;
  std::vector<int> blocked_;
  std::vector<Weight> suffix_;
  LocalSet chosen_;
  std::vector<LocalSet> found_;
};

inline std::vector<VertexId> sorted_union(std::vector<VertexId> acc, std::span<const VertexId> more) {
  std::vector<VertexId> out;
  out.reserve(acc.size() + more.size());
  std::set_union(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(out));
  return out;
}

/// Neighbors of `members` outside N[center] (i.e. in the non-neighborhood).
inline std::vector<VertexId> outside_neighbors(const DynGraph& g, VertexId center, const LocalView& nbhd,
                                               std::span<const VertexId> members) {
  std::vector<VertexId> out;
  for (VertexId m : members) {
    for (VertexId z : g.neighbors(m)) {
      if (z != center && !nbhd.contains(z)) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<VertexId> to_ids(const LocalView& view, const LocalSet& set) {
  std::vector<VertexId> out;
  out.reserve(set.size());
  for (auto i : set) out.push_back(view.id(i));
  return out;
}

inline Weight local_weight(const LocalView& view, const LocalSet& set) {
  Weight w = 0;
  for (auto i : set) w += view.weight(i);
  return w;
}

inline std::vector<VertexId> copy_neighbors(const DynGraph& g, VertexId v) {
  auto n = g.neighbors(v);
  return {n.begin(), n.end()};
}

}  // namespace detail

/// Independent subsets of `vertices` (sorted ascending) whose weight exceeds
/// `threshold`; with `minimal_only`, only those whose every proper subset stays
/// at or below the threshold. Output is ordered by size, then lexicographically.
/// Returns nullopt once more than `cap` sets have been found.
inline std::optional<std::vector<NeighborhoodSet>> enumerate_exceeding_sets(const DynGraph& g,
                                                                            std::span<const VertexId> vertices,
                                                                            Weight threshold, std::size_t cap,
                                                                            bool minimal_only) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  detail::LocalView view(g, sorted);
  auto sets = detail::ExceedingSetEnumerator(view, threshold, cap, minimal_only).run();
  if (!sets) return std::nullopt;
  std::vector<NeighborhoodSet> out;
  out.reserve(sets->size());
  for (const auto& s : *sets) out.push_back({detail::to_ids(view, s), detail::local_weight(view, s)});
  return out;
}

/// w(v) <= w(u) for every neighbor u (precondition of original / modified).
inline bool is_minimal_center(const DynGraph& g, VertexId v) {
  const Weight wv = g.weight(v);
  for (VertexId u : g.neighbors(v)) {
    if (g.weight(u) < wv) return false;
  }
  return true;
}

namespace detail {

inline std::optional<StructionOutcome> pair_struction(DynGraph& g, VertexId v, std::size_t cap, TransformLog& log,
                                                      bool modified) {
  if (!is_minimal_center(g, v)) {
    throw Error(ErrorCode::NotMinimal, "vertex " + std::to_string(v) + " is not of minimum weight in N[v]");
  }
  const Weight wv = g.weight(v);
  const std::vector<VertexId> nbrs = copy_neighbors(g, v);
  const LocalView view(g, nbrs);

  struct PairSpec {
    std::uint32_t x;
    std::uint32_t y;
  };
  std::vector<PairSpec> pairs;
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    for (std::uint32_t j = i + 1; j < view.size(); ++j) {
      if (view.adjacent(i, j)) continue;
      if (pairs.size() == cap) return std::nullopt;
      pairs.push_back({i, j});
    }
  }

  // Neighborhoods in G (before v is removed and before any clique edges).
  std::vector<std::vector<VertexId>> pair_nbrs;
  pair_nbrs.reserve(pairs.size());
  for (const auto& p : pairs) {
    std::vector<VertexId> acc = copy_neighbors(g, view.id(p.x));
    acc = sorted_union(std::move(acc), g.neighbors(view.id(p.y)));
    acc.erase(std::remove(acc.begin(), acc.end(), v), acc.end());
    if (modified) {
      std::vector<VertexId> others;
      for (VertexId k : nbrs) {
        if (k != view.id(p.x)) others.push_back(k);
      }
      acc = sorted_union(std::move(acc), others);
    }
    pair_nbrs.push_back(std::move(acc));
  }

  StructionOutcome out;
  out.center = v;
  out.offset_delta = wv;
  out.removed.push_back(v);
  event::Struction ev{modified ? StructionVariant::Modified : StructionVariant::Original, v, wv, nbrs, {{v, wv}}, {}};

  g.remove_vertex(v);
  for (VertexId u : nbrs) g.set_weight(u, g.weight(u) - wv);
  if (modified) {
    for (std::uint32_t i = 0; i < view.size(); ++i) {
      for (std::uint32_t j = i + 1; j < view.size(); ++j) {
        if (!view.adjacent(i, j)) g.add_edge(view.id(i), view.id(j));
      }
    }
  }

  std::vector<VertexId> created_ids;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    std::vector<VertexId> earlier;
    for (std::size_t b = 0; b < a; ++b) {
      if (pairs[b].x != pairs[a].x || view.adjacent(pairs[b].y, pairs[a].y)) earlier.push_back(created_ids[b]);
    }
    const auto list = sorted_union(pair_nbrs[a], earlier);
    const Weight w = modified ? view.weight(pairs[a].y) : wv;
    const VertexId id = g.add_vertex_with_neighbors(w, list);
    created_ids.push_back(id);
    ev.created.push_back({id, w, event::Provenance::Pair, {view.id(pairs[a].x)}, view.id(pairs[a].y)});
  }
  out.created = ev.created;
  log.record(std::move(ev));

  for (VertexId u : nbrs) {
    if (g.weight(u) == 0) {
      g.remove_vertex(u);
      log.record(event::ExcludedVertex{u});
      out.removed.push_back(u);
    }
  }
  return out;
}

}  // namespace detail

/// Ebenegger et al.'s weighted struction. Requires w(v) minimal in N[v].
inline std::optional<StructionOutcome> original_struction(DynGraph& g, VertexId v, std::size_t cap,
                                                          TransformLog& log) {
  return detail::pair_struction(g, v, cap, log, false);
}

/// Original struction with pair weights w(y), cross-layer neighbor edges and
/// N(v) completed to a clique. Requires w(v) minimal in N[v].
inline std::optional<StructionOutcome> modified_struction(DynGraph& g, VertexId v, std::size_t cap,
                                                          TransformLog& log) {
  return detail::pair_struction(g, v, cap, log, true);
}

/// Removes N[v]; one clique vertex of weight w(c) - w(v) per independent set c
/// of N(v) with w(c) > w(v).
inline std::optional<StructionOutcome> extended_struction(DynGraph& g, VertexId v, std::size_t cap,
                                                          TransformLog& log) {
  const Weight wv = g.weight(v);
  const std::vector<VertexId> nbrs = detail::copy_neighbors(g, v);
  const detail::LocalView view(g, nbrs);
  auto sets = detail::ExceedingSetEnumerator(view, wv, cap, false).run();
  if (!sets) return std::nullopt;

  std::vector<std::vector<VertexId>> members;
  std::vector<std::vector<VertexId>> outside;
  for (const auto& s : *sets) {
    members.push_back(detail::to_ids(view, s));
    outside.push_back(detail::outside_neighbors(g, v, view, members.back()));
  }

  StructionOutcome out;
  out.center = v;
  out.offset_delta = wv;
  event::Struction ev{StructionVariant::Extended, v, wv, nbrs, {}, {}};
  ev.removed.emplace_back(v, wv);
  for (VertexId u : nbrs) ev.removed.emplace_back(u, g.weight(u));
  for (const auto& [id, w] : ev.removed) {
    g.remove_vertex(id);
    out.removed.push_back(id);
  }

  std::vector<VertexId> clique;
  for (std::size_t a = 0; a < sets->size(); ++a) {
    const Weight w = detail::local_weight(view, (*sets)[a]) - wv;
    const auto list = detail::sorted_union(outside[a], clique);
    const VertexId id = g.add_vertex_with_neighbors(w, list);
    clique.push_back(id);
    ev.created.push_back({id, w, event::Provenance::Set, members[a], kNoVertex});
  }
  out.created = ev.created;
  log.record(std::move(ev));
  return out;
}

/// Extended struction restricted to minimal exceeding sets C', plus layered
/// extension vertices v_{c,y} that re-admit any compatible y in N(v).
inline std::optional<StructionOutcome> extended_reduced_struction(DynGraph& g, VertexId v, std::size_t cap,
                                                                  TransformLog& log) {
  const Weight wv = g.weight(v);
  const std::vector<VertexId> nbrs = detail::copy_neighbors(g, v);
  const detail::LocalView view(g, nbrs);
  auto sets = detail::ExceedingSetEnumerator(view, wv, cap, true).run();
  if (!sets) return std::nullopt;

  struct Extension {
    std::size_t set;
    std::uint32_t y;
  };
  std::vector<Extension> extensions;
  std::size_t total = sets->size();
  for (std::size_t a = 0; a < sets->size(); ++a) {
    const auto& c = (*sets)[a];
    for (std::uint32_t y = 0; y < view.size(); ++y) {
      const bool compatible = std::none_of(c.begin(), c.end(), [&](std::uint32_t m) {
        return m == y || view.adjacent(m, y);
      });
      if (!compatible) continue;
      if (total == cap) return std::nullopt;
      ++total;
      extensions.push_back({a, y});
    }
  }

  std::vector<std::vector<VertexId>> members;
  std::vector<std::vector<VertexId>> set_outside;
  for (const auto& s : *sets) {
    members.push_back(detail::to_ids(view, s));
    set_outside.push_back(detail::outside_neighbors(g, v, view, members.back()));
  }
  std::vector<std::vector<VertexId>> single_outside(view.size());
  for (std::uint32_t y = 0; y < view.size(); ++y) {
    const VertexId id = view.id(y);
    single_outside[y] = detail::outside_neighbors(g, v, view, std::span<const VertexId>(&id, 1));
  }

  StructionOutcome out;
  out.center = v;
  out.offset_delta = wv;
  event::Struction ev{StructionVariant::ExtendedReduced, v, wv, nbrs, {}, {}};
  ev.removed.emplace_back(v, wv);
  for (VertexId u : nbrs) ev.removed.emplace_back(u, g.weight(u));
  for (const auto& [id, w] : ev.removed) {
    g.remove_vertex(id);
    out.removed.push_back(id);
  }

  std::vector<VertexId> set_ids;
  for (std::size_t a = 0; a < sets->size(); ++a) {
    const Weight w = detail::local_weight(view, (*sets)[a]) - wv;
    const auto list = detail::sorted_union(set_outside[a], set_ids);
    const VertexId id = g.add_vertex_with_neighbors(w, list);
    set_ids.push_back(id);
    ev.created.push_back({id, w, event::Provenance::Set, members[a], kNoVertex});
  }
  std::vector<VertexId> ext_ids;
  for (std::size_t e = 0; e < extensions.size(); ++e) {
    const auto& ext = extensions[e];
    std::vector<VertexId> other_layers;
    for (std::size_t a = 0; a < set_ids.size(); ++a) {
      if (a != ext.set) other_layers.push_back(set_ids[a]);
    }
    for (std::size_t f = 0; f < e; ++f) {
      if (extensions[f].set != ext.set || view.adjacent(extensions[f].y, ext.y)) other_layers.push_back(ext_ids[f]);
    }
    std::sort(other_layers.begin(), other_layers.end());
    auto list = detail::sorted_union(set_outside[ext.set], single_outside[ext.y]);
    list = detail::sorted_union(std::move(list), other_layers);
    const Weight w = view.weight(ext.y);
    const VertexId id = g.add_vertex_with_neighbors(w, list);
    ext_ids.push_back(id);
    ev.created.push_back({id, w, event::Provenance::SetPlus, members[ext.set], view.id(ext.y)});
  }
  out.created = ev.created;
  log.record(std::move(ev));
  return out;
}

/// Dispatches on the variant. Original / modified throw NotMinimal when the
/// center is not of minimum weight in its closed neighborhood.
inline std::optional<StructionOutcome> apply_struction(StructionVariant variant, DynGraph& g, VertexId v,
                                                       std::size_t cap, TransformLog& log) {
  switch (variant) {
    case StructionVariant::Original: return original_struction(g, v, cap, log);
    case StructionVariant::Modified: return modified_struction(g, v, cap, log);
    case StructionVariant::Extended: return extended_struction(g, v, cap, log);
    case StructionVariant::ExtendedReduced: return extended_reduced_struction(g, v, cap, log);
  }
  return std::nullopt;
}

/// Whether `variant` may be applied at v at all.
inline bool struction_applicable(StructionVariant variant, const DynGraph& g, VertexId v) {
  if (variant == StructionVariant::Original || variant == StructionVariant::Modified) return is_minimal_center(g, v);
  return true;
}

}  // namespace mwis
