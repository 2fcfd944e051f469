#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/types.hpp"

namespace mwis {

enum class StructionVariant : std::uint8_t { Original, Modified, Extended, ExtendedReduced };

constexpr std::string_view to_string(StructionVariant v) {
  switch (v) {
    case StructionVariant::Original: return "original";
    case StructionVariant::Modified: return "modified";
    case StructionVariant::Extended: return "extended";
    case StructionVariant::ExtendedReduced: return "extended-reduced";
  }
  return "unknown";
}

namespace event {

/// v joined the solution; N[v] was removed.
struct IncludedVertex {
  VertexId v;
  Weight weight;
  friend bool operator==(const IncludedVertex&, const IncludedVertex&) = default;
};

/// v was removed without contributing to the solution.
struct ExcludedVertex {
  VertexId v;
  friend bool operator==(const ExcludedVertex&, const ExcludedVertex&) = default;
};

/// absorbed was removed and its weight added to kept (non-adjacent twins).
struct TwinMerge {
  VertexId kept;
  VertexId absorbed;
  friend bool operator==(const TwinMerge&, const TwinMerge&) = default;
};

/// {v, u, x} replaced by `folded` with w(folded) = w(u) + w(x) - w(v).
struct DegreeTwoFold {
  VertexId v;
  VertexId u;
  VertexId x;
  VertexId folded;
  Weight v_weight;
  friend bool operator==(const DegreeTwoFold&, const DegreeTwoFold&) = default;
};

/// What a vertex created by a struction stands for.
enum class Provenance : std::uint8_t {
  Pair,     ///< v_{x,y}: members = {x}, extra = y (original / modified)
  Set,      ///< v_c: members = c (extended, and V_C of extended-reduced)
  SetPlus,  ///< v_{c,y}: members = c, extra = y (V_E of extended-reduced)
};

struct CreatedVertex {
  VertexId id;
  Weight weight;
  Provenance kind;
  std::vector<VertexId> members;
  VertexId extra = kNoVertex;
  friend bool operator==(const CreatedVertex&, const CreatedVertex&) = default;
};

struct Struction {
  StructionVariant variant;
  VertexId center;
  Weight center_weight;
  /// N(center) at application time, ascending.
  std::vector<VertexId> neighbors;
  /// Vertices removed by the construction with their weights at removal.
  std::vector<std::pair<VertexId, Weight>> removed;
  std::vector<CreatedVertex> created;
  friend bool operator==(const Struction&, const Struction&) = default;
};

}  // namespace event

using TransformEvent =
    std::variant<event::IncludedVertex, event::ExcludedVertex, event::TwinMerge, event::DegreeTwoFold, event::Struction>;

/// Solution weight an event commits.
inline Weight offset_delta(const TransformEvent& e) {
  return std::visit(
      [](const auto& ev) -> Weight {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, event::IncludedVertex>) return ev.weight;
        else if constexpr (std::is_same_v<T, event::DegreeTwoFold>) return ev.v_weight;
        else if constexpr (std::is_same_v<T, event::Struction>) return ev.center_weight;
        else return 0;
      },
      e);
}

/// Ordered record of applied transformations plus the committed offset.
class TransformLog {
 public:
  void record(TransformEvent e) {
    offset_ += offset_delta(e);
    events_.push_back(std::move(e));
  }

  Weight offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const std::vector<TransformEvent>& events() const noexcept { return events_; }

  /// Drops every event after the first `n`, restoring the offset accordingly.
  void truncate(std::size_t n) {
    while (events_.size() > n) {
      offset_ -= offset_delta(events_.back());
      events_.pop_back();
    }
  }

  /// Appends all events of `other` (used when a sub-run continues this log).
  void append(const TransformLog& other) {
    for (const auto& e : other.events_) record(e);
  }

  friend bool operator==(const TransformLog&, const TransformLog&) = default;

 private:
  std::vector<TransformEvent> events_;
  Weight offset_ = 0;
};

namespace detail {

class Membership {
 public:
  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }
  void insert(VertexId v) {
    if (v >= bits_.size()) bits_.resize(std::max<std::size_t>(v + 1, bits_.size() * 2), 0);
    bits_[v] = 1;
  }
  void erase(VertexId v) {
    if (v < bits_.size()) bits_[v] = 0;
  }
  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) out.push_back(v);
    }
    return out;
  }

 private:
  std::vector<char> bits_;
};

inline void lift_struction(const event::Struction& s, Membership& in) {
  using event::Provenance;
  std::vector<const event::CreatedVertex*> chosen;
  for (const auto& c : s.created) {
    if (in.contains(c.id)) {
      chosen.push_back(&c);
      in.erase(c.id);
    }
  }
  const bool neighbor_chosen =
      std::any_of(s.neighbors.begin(), s.neighbors.end(), [&](VertexId u) { return in.contains(u); });

  switch (s.variant) {
    case StructionVariant::Original:
    case StructionVariant::Modified: {
      // Chosen pair vertices must share one layer x; each stands for x and y.
      if (!chosen.empty()) {
        const VertexId layer = chosen.front()->members.front();
        for (const auto* c : chosen) {
          if (c->kind != Provenance::Pair || c->members.front() != layer) {
            throw Error(ErrorCode::CorruptLog, "pair vertices from different layers selected");
          }
          in.insert(c->extra);
        }
        in.insert(layer);
      } else if (!neighbor_chosen) {
        in.insert(s.center);
      }
      break;
    }
    case StructionVariant::Extended: {
      if (chosen.size() > 1) throw Error(ErrorCode::CorruptLog, "two set vertices of one extended struction selected");
      if (chosen.empty()) {
        in.insert(s.center);
      } else {
        for (VertexId u : chosen.front()->members) in.insert(u);
      }
      break;
    }
    case StructionVariant::ExtendedReduced: {
      const std::vector<VertexId>* layer = nullptr;
      for (const auto* c : chosen) {
        if (layer == nullptr) {
          layer = &c->members;
        } else if (*layer != c->members) {
          throw Error(ErrorCode::CorruptLog, "extended-reduced vertices from different layers selected");
        }
      }
      std::size_t set_vertices = 0;
      for (const auto* c : chosen) set_vertices += c->kind == Provenance::Set ? 1 : 0;
      if (set_vertices > 1) throw Error(ErrorCode::CorruptLog, "two set vertices of one struction selected");
      if (layer == nullptr) {
        in.insert(s.center);
      } else {
        // Extension vertices without their set vertex still imply the set.
        for (VertexId u : *layer) in.insert(u);
        for (const auto* c : chosen) {
          if (c->kind == Provenance::SetPlus) in.insert(c->extra);
        }
      }
      break;
    }
  }
}

}  // namespace detail

/// Replays `log` backwards to turn an independent set of the final graph into
/// an independent set of the original graph. For any independent input the
/// result weighs at least w(kernel_solution) + log.offset(); for a maximum
/// kernel solution the two are equal. Does not check the input.
inline std::vector<VertexId> lift(const TransformLog& log, std::span<const VertexId> kernel_solution) {
  detail::Membership in;
  for (VertexId v : kernel_solution) in.insert(v);
  const auto& events = log.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, event::IncludedVertex>) {
            in.insert(ev.v);
          } else if constexpr (std::is_same_v<T, event::ExcludedVertex>) {
            // nothing to restore
          } else if constexpr (std::is_same_v<T, event::TwinMerge>) {
            if (in.contains(ev.kept)) in.insert(ev.absorbed);
          } else if constexpr (std::is_same_v<T, event::DegreeTwoFold>) {
            if (in.contains(ev.folded)) {
              in.erase(ev.folded);
              in.insert(ev.u);
              in.insert(ev.x);
            } else {
              in.insert(ev.v);
            }
          } else {
            detail::lift_struction(ev, in);
          }
        },
        *it);
  }
  return in.to_vector();
}

/// Checked variant: `kernel_solution` must be independent in `kernel`.
inline std::vector<VertexId> lift(const TransformLog& log, const DynGraph& kernel,
                                  std::span<const VertexId> kernel_solution) {
  if (!is_independent(kernel, kernel_solution)) {
    throw Error(ErrorCode::NotIndependent, "kernel solution is not an independent set of the kernel");
  }
  return lift(log, kernel_solution);
}

/// True iff `lifted` is independent in `original` and weighs `expected_weight`.
inline bool verify_lift(const DynGraph& original, std::span<const VertexId> lifted, Weight expected_weight) {
  if (!is_independent(original, lifted)) return false;
  return weight_of(original, lifted) == expected_weight;
}

}  // namespace mwis
