#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwis/types.hpp"

namespace mwis {

/// Mutable vertex-weighted undirected graph with stable vertex ids.
///
/// Neighbor lists are kept sorted ascending, so iteration order is
/// deterministic and adjacency tests are binary searches. Removed ids stay
/// inactive forever; add_vertex always returns an id larger than any id
/// issued before.
///
/// Optionally records "touched" vertices (vertices whose neighborhood or
/// weight changed, plus freshly created ones). The kernelizer uses this to
/// decide what to re-examine after a rule fires.
class DynGraph {
 public:
  DynGraph() = default;

  /// Vertices 0..n-1 with the given weights and no edges.
  explicit DynGraph(std::span<const Weight> weights) {
    weights_.reserve(weights.size());
    for (Weight w : weights) {
      if (w < 1) throw Error(ErrorCode::InvalidWeight, "input weights must be >= 1, got " + std::to_string(w));
      weights_.push_back(w);
    }
    adj_.resize(weights_.size());
    active_.assign(weights_.size(), 1);
    num_vertices_ = weights_.size();
  }

  /// Bulk construction from symmetric adjacency lists (lists may be unsorted).
  /// Validates symmetry, self-loops and duplicates.
  static DynGraph from_adjacency(std::vector<Weight> weights, std::vector<std::vector<VertexId>> lists) {
    if (weights.size() != lists.size()) throw Error(ErrorCode::InvalidWeight, "weight/adjacency count mismatch");
    DynGraph g(weights);
    std::size_t directed = 0;
    for (std::size_t v = 0; v < lists.size(); ++v) {
      auto& l = lists[v];
      std::sort(l.begin(), l.end());
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] >= lists.size()) throw Error(ErrorCode::InactiveVertex, "neighbor id out of range");
        if (l[i] == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(v));
        if (i > 0 && l[i] == l[i - 1]) throw Error(ErrorCode::DuplicateEdge, "duplicate edge at " + std::to_string(v));
      }
      directed += l.size();
    }
    for (std::size_t v = 0; v < lists.size(); ++v) {
      for (VertexId u : lists[v]) {
        if (!std::binary_search(lists[u].begin(), lists[u].end(), static_cast<VertexId>(v))) {
          throw Error(ErrorCode::MissingEdge,
                      "asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(u));
        }
      }
    }
    g.adj_ = std::move(lists);
    g.num_edges_ = directed / 2;
    return g;
  }

  VertexId add_vertex(Weight w) {
    if (w < 0) throw Error(ErrorCode::InvalidWeight, "negative weight");
    const VertexId id = weights_.size();
    weights_.push_back(w);
    adj_.emplace_back();
    active_.push_back(1);
    ++num_vertices_;
    touch(id);
    return id;
  }

  /// Creates a vertex adjacent to `sorted_neighbors` (ascending, active, unique).
  /// The new id exceeds every existing id, so neighbor lists stay sorted by appending.
  VertexId add_vertex_with_neighbors(Weight w, std::span<const VertexId> sorted_neighbors) {
    const VertexId id = add_vertex(w);
    auto& mine = adj_[id];
    mine.assign(sorted_neighbors.begin(), sorted_neighbors.end());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      require_active(mine[i]);
      if (i > 0 && mine[i] <= mine[i - 1]) throw Error(ErrorCode::DuplicateEdge, "neighbor list not strictly ascending");
      adj_[mine[i]].push_back(id);
      touch(mine[i]);
    }
    num_edges_ += mine.size();
    return id;
  }

  void remove_vertex(VertexId v) {
    require_active(v);
    for (VertexId u : adj_[v]) {
      erase_sorted(adj_[u], v);
      touch(u);
    }
    num_edges_ -= adj_[v].size();
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    active_[v] = 0;
    --num_vertices_;
    touch(v);
  }

  void add_edge(VertexId u, VertexId v) {
    require_active(u);
    require_active(v);
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    auto& lu = adj_[u];
    auto it = std::lower_bound(lu.begin(), lu.end(), v);
    if (it != lu.end() && *it == v) {
      throw Error(ErrorCode::DuplicateEdge, std::to_string(u) + "-" + std::to_string(v));
    }
    lu.insert(it, v);
    auto& lv = adj_[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    ++num_edges_;
    touch(u);
    touch(v);
  }

  void remove_edge(VertexId u, VertexId v) {
    require_active(u);
    require_active(v);
    if (!is_adjacent(u, v)) throw Error(ErrorCode::MissingEdge, std::to_string(u) + "-" + std::to_string(v));
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --num_edges_;
    touch(u);
    touch(v);
  }

  bool is_adjacent(VertexId u, VertexId v) const {
    require_active(u);
    require_active(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    require_active(v);
    return adj_[v];
  }

  std::size_t degree(VertexId v) const {
    require_active(v);
    return adj_[v].size();
  }

  Weight weight(VertexId v) const {
    require_active(v);
    return weights_[v];
  }

  void set_weight(VertexId v, Weight w) {
    require_active(v);
    if (w < 0) throw Error(ErrorCode::InvalidWeight, "negative weight");
    weights_[v] = w;
    touch(v);
  }

  Weight neighborhood_weight(VertexId v) const {
    Weight sum = 0;
    for (VertexId u : neighbors(v)) sum += weights_[u];
    return sum;
  }

  bool is_active(VertexId v) const noexcept { return v < active_.size() && active_[v] != 0; }

  std::vector<VertexId> active_vertices() const {
    std::vector<VertexId> out;
    out.reserve(num_vertices_);
    for (VertexId v = 0; v < active_.size(); ++v) {
      if (active_[v]) out.push_back(v);
    }
    return out;
  }

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool empty() const noexcept { return num_vertices_ == 0; }

  /// One past the largest id ever issued.
  VertexId id_bound() const noexcept { return weights_.size(); }

  Weight total_weight() const {
    Weight sum = 0;
    for (VertexId v = 0; v < active_.size(); ++v) {
      if (active_[v]) sum += weights_[v];
    }
    return sum;
  }

  /// Full scan of the structural invariants; throws on the first violation.
  void check_consistency() const {
    std::size_t degree_sum = 0;
    std::size_t active = 0;
    for (VertexId v = 0; v < active_.size(); ++v) {
      if (!active_[v]) {
        if (!adj_[v].empty()) throw Error(ErrorCode::InactiveVertex, "inactive vertex keeps neighbors");
        continue;
      }
      ++active;
      const auto& l = adj_[v];
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == v) throw Error(ErrorCode::SelfLoop, std::to_string(v));
        if (i > 0 && l[i] <= l[i - 1]) throw Error(ErrorCode::DuplicateEdge, "unsorted or duplicate at " + std::to_string(v));
        if (!is_active(l[i])) throw Error(ErrorCode::InactiveVertex, "edge to inactive vertex");
        if (!std::binary_search(adj_[l[i]].begin(), adj_[l[i]].end(), v)) {
          throw Error(ErrorCode::MissingEdge, "asymmetric adjacency");
        }
      }
      degree_sum += l.size();
    }
    if (degree_sum != 2 * num_edges_) throw Error(ErrorCode::MissingEdge, "edge count mismatch");
    if (active != num_vertices_) throw Error(ErrorCode::InactiveVertex, "vertex count mismatch");
  }

  /// Same active vertices, weights and neighbor lists.
  friend bool operator==(const DynGraph& a, const DynGraph& b) {
    if (a.num_vertices_ != b.num_vertices_ || a.num_edges_ != b.num_edges_) return false;
    const VertexId bound = std::max(a.id_bound(), b.id_bound());
    for (VertexId v = 0; v < bound; ++v) {
      const bool ia = a.is_active(v);
      if (ia != b.is_active(v)) return false;
      if (ia && (a.weights_[v] != b.weights_[v] || a.adj_[v] != b.adj_[v])) return false;
    }
    return true;
  }

  /// Byte-for-byte identity including the fresh-id counter.
  bool identical(const DynGraph& other) const {
    return weights_ == other.weights_ && active_ == other.active_ && adj_ == other.adj_ &&
           num_vertices_ == other.num_vertices_ && num_edges_ == other.num_edges_;
  }

  void set_tracking(bool on) {
    tracking_ = on;
    touched_.clear();
  }
  bool tracking() const noexcept { return tracking_; }

  /// Returns and clears the touched-vertex list (may contain duplicates and inactive ids).
  std::vector<VertexId> take_touched() { return std::exchange(touched_, {}); }

 private:
  void require_active(VertexId v) const {
    if (!is_active(v)) throw Error(ErrorCode::InactiveVertex, "vertex " + std::to_string(v) + " is not active");
  }

  void touch(VertexId v) {
    if (tracking_) touched_.push_back(v);
  }

  static void erase_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
  }

  std::vector<Weight> weights_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> active_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  bool tracking_ = false;
  std::vector<VertexId> touched_;
};

/// Sum of weights of `set`, which must consist of active vertices.
inline Weight weight_of(const DynGraph& g, std::span<const VertexId> set) {
  Weight sum = 0;
  for (VertexId v : set) sum += g.weight(v);
  return sum;
}

/// True iff `set` holds distinct active, pairwise non-adjacent vertices.
inline bool is_independent(const DynGraph& g, std::span<const VertexId> set) {
  std::vector<VertexId> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (VertexId v : sorted) {
    if (!g.is_active(v)) return false;
    for (VertexId u : g.neighbors(v)) {
      if (std::binary_search(sorted.begin(), sorted.end(), u)) return false;
    }
  }
  return true;
}

}  // namespace mwis
