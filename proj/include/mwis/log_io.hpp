#pragma once

// Binary encoding of a TransformLog.
//
// Layout (all integers little-endian):
//   magic   "MWISLOG\0"  8 bytes
//   version u32          (currently 1)
//   offset  i64
//   count   u64          number of records
//   record* tag u8, length u32, payload[length]
//
// Payload fields are u64 for ids, i64 for weights, u8 for enums, and
// u64-count-prefixed arrays for lists.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "mwis/transform_log.hpp"

namespace mwis {

namespace log_io {

inline constexpr std::array<char, 8> kMagic = {'M', 'W', 'I', 'S', 'L', 'O', 'G', '\0'};
inline constexpr std::uint32_t kVersion = 1;

enum Tag : std::uint8_t { kIncluded = 1, kExcluded = 2, kTwin = 3, kFold = 4, kStruction = 5 };

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void ids(const std::vector<VertexId>& list) {
    u64(list.size());
    for (VertexId v : list) u64(v);
  }
  void bytes(const std::string& s) { buf_ += s; }
  std::string take() { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint32_t u32() {
    auto s = take(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[i])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    auto s = take(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[i])) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::vector<VertexId> ids() {
    const std::uint64_t n = u64();
    if (n > remaining() / 8) throw Error(ErrorCode::CorruptLog, "list length exceeds record");
    std::vector<VertexId> out(n);
    for (auto& v : out) v = u64();
    return out;
  }
  std::string_view take(std::size_t n) {
    if (n > remaining()) throw Error(ErrorCode::CorruptLog, "truncated log data");
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

inline void write_payload(Writer& w, const TransformEvent& e) {
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, event::IncludedVertex>) {
          w.u64(ev.v);
          w.i64(ev.weight);
        } else if constexpr (std::is_same_v<T, event::ExcludedVertex>) {
          w.u64(ev.v);
        } else if constexpr (std::is_same_v<T, event::TwinMerge>) {
          w.u64(ev.kept);
          w.u64(ev.absorbed);
        } else if constexpr (std::is_same_v<T, event::DegreeTwoFold>) {
          w.u64(ev.v);
          w.u64(ev.u);
          w.u64(ev.x);
          w.u64(ev.folded);
          w.i64(ev.v_weight);
        } else {
          w.u8(static_cast<std::uint8_t>(ev.variant));
          w.u64(ev.center);
          w.i64(ev.center_weight);
          w.ids(ev.neighbors);
          w.u64(ev.removed.size());
          for (const auto& [id, weight] : ev.removed) {
            w.u64(id);
            w.i64(weight);
          }
          w.u64(ev.created.size());
          for (const auto& c : ev.created) {
            w.u64(c.id);
            w.i64(c.weight);
            w.u8(static_cast<std::uint8_t>(c.kind));
            w.ids(c.members);
            w.u64(c.extra);
          }
        }
      },
      e);
}

inline std::uint8_t tag_of(const TransformEvent& e) {
  constexpr std::array<std::uint8_t, 5> tags = {kIncluded, kExcluded, kTwin, kFold, kStruction};
  return tags[e.index()];
}

inline TransformEvent read_payload(std::uint8_t tag, Reader& r) {
  switch (tag) {
    case kIncluded: {
      const VertexId v = r.u64();
      return event::IncludedVertex{v, r.i64()};
    }
    case kExcluded: return event::ExcludedVertex{r.u64()};
    case kTwin: {
      const VertexId kept = r.u64();
      return event::TwinMerge{kept, r.u64()};
    }
    case kFold: {
      event::DegreeTwoFold f{};
      f.v = r.u64();
      f.u = r.u64();
      f.x = r.u64();
      f.folded = r.u64();
      f.v_weight = r.i64();
      return f;
    }
    case kStruction: {
      event::Struction s{};
      const auto variant = r.u8();
      if (variant > static_cast<std::uint8_t>(StructionVariant::ExtendedReduced)) {
        throw Error(ErrorCode::CorruptLog, "unknown struction variant");
      }
      s.variant = static_cast<StructionVariant>(variant);
      s.center = r.u64();
      s.center_weight = r.i64();
      s.neighbors = r.ids();
      const std::uint64_t removed = r.u64();
      if (removed > r.remaining() / 16) throw Error(ErrorCode::CorruptLog, "removed list exceeds record");
      for (std::uint64_t i = 0; i < removed; ++i) {
        const VertexId id = r.u64();
        s.removed.emplace_back(id, r.i64());
      }
      const std::uint64_t created = r.u64();
      if (created > r.remaining() / 33) throw Error(ErrorCode::CorruptLog, "created list exceeds record");
      for (std::uint64_t i = 0; i < created; ++i) {
        event::CreatedVertex c{};
        c.id = r.u64();
        c.weight = r.i64();
        const auto kind = r.u8();
        if (kind > static_cast<std::uint8_t>(event::Provenance::SetPlus)) {
          throw Error(ErrorCode::CorruptLog, "unknown provenance kind");
        }
        c.kind = static_cast<event::Provenance>(kind);
        c.members = r.ids();
        c.extra = r.u64();
        s.created.push_back(std::move(c));
      }
      return s;
    }
    default: throw Error(ErrorCode::CorruptLog, "unknown record tag " + std::to_string(tag));
  }
}

}  // namespace log_io

inline std::string serialize_log(const TransformLog& log) {
  log_io::Writer out;
  out.bytes(std::string(log_io::kMagic.data(), log_io::kMagic.size()));
  out.u32(log_io::kVersion);
  out.i64(log.offset());
  out.u64(log.size());
  for (const auto& e : log.events()) {
    log_io::Writer payload;
    log_io::write_payload(payload, e);
    out.u8(log_io::tag_of(e));
    out.u32(static_cast<std::uint32_t>(payload.size()));
    out.bytes(payload.take());
  }
  return out.take();
}

/// Parses a log produced by serialize_log; `consumed` receives the byte count used.
inline TransformLog deserialize_log(std::string_view data, std::size_t* consumed = nullptr) {
  log_io::Reader in(data);
  if (in.take(8) != std::string_view(log_io::kMagic.data(), log_io::kMagic.size())) {
    throw Error(ErrorCode::CorruptLog, "bad log magic");
  }
  if (const auto version = in.u32(); version != log_io::kVersion) {
    throw Error(ErrorCode::CorruptLog, "unsupported log version " + std::to_string(version));
  }
  const Weight offset = in.i64();
  const std::uint64_t count = in.u64();
  TransformLog log;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint8_t tag = in.u8();
    const std::uint32_t length = in.u32();
    log_io::Reader record(in.take(length));
    log.record(log_io::read_payload(tag, record));
    if (record.remaining() != 0) throw Error(ErrorCode::CorruptLog, "record length mismatch");
  }
  if (log.offset() != offset) throw Error(ErrorCode::CorruptLog, "offset does not match records");
  if (consumed != nullptr) *consumed = data.size() - in.remaining();
  return log;
}

}  // namespace mwis
