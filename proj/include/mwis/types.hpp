#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mwis {

/// Vertex identifier. Ids are issued in increasing order and never reused
/// within one graph instance, so removed ids stay meaningful in logs.
using VertexId = std::uint64_t;

/// Vertex weight. Input graphs carry weights >= 1; reductions may lower
/// weights to 0 internally.
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class ErrorCode {
  InvalidWeight,
  InactiveVertex,
  SelfLoop,
  DuplicateEdge,
  MissingEdge,
  NotIndependent,
  CorruptLog,
  NotMinimal,
  SizeLimit,
  ParseError,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InactiveVertex: return "InactiveVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::CorruptLog: return "CorruptLog";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mwis
