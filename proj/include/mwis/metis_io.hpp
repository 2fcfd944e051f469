#pragma once

// METIS graph files (vertex-weighted variant), solution files and kernel
// sidecars.
//
// Graph file: header "n m [fmt]" with fmt 0 (unweighted) or 10 (vertex
// weights), then one line per vertex: [weight] followed by 1-indexed
// neighbors. Lines whose first non-blank character is '%' are comments.
//
// Solution file: "%weight W" followed by one 1-indexed vertex id per line,
// ascending.
//
// Sidecar (binary, little-endian): magic "MWISKRN\0", u32 version, i64
// offset, u64 original vertex count, u64 k, k x u64 internal kernel id of
// file vertex 1..k, then the serialized transformation log.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/log_io.hpp"
#include "mwis/reductions.hpp"
#include "mwis/transform_log.hpp"

namespace mwis {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline bool is_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && line[pos] == '%';
}

inline std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || used == 0 || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      parse_fail(line_no, "expected an integer");
    }
    out.push_back(value);
    i += used;
  }
  return out;
}

inline std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path + " for reading");
  return in;
}

inline std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  return out;
}

}  // namespace detail

/// Parses a graph; input vertex k becomes internal id k - 1.
inline DynGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::vector<long long>> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = detail::parse_numbers(line, line_no);
    break;
  }
  if (!header) detail::parse_fail(line_no, "missing header");
  if (header->size() < 2 || header->size() > 4) detail::parse_fail(line_no, "header must be 'n m [fmt]'");
  const long long n = (*header)[0];
  const long long m = (*header)[1];
  const long long fmt = header->size() >= 3 ? (*header)[2] : 0;
  if (n < 0 || m < 0) detail::parse_fail(line_no, "negative count in header");
  if (fmt != 0 && fmt != 10) detail::parse_fail(line_no, "unsupported format code " + std::to_string(fmt));
  if (header->size() == 4 && (*header)[3] != 1) detail::parse_fail(line_no, "only one vertex weight per vertex is supported");
  const bool weighted = fmt == 10;

  std::vector<Weight> weights(static_cast<std::size_t>(n), 1);
  std::vector<std::vector<VertexId>> lists(static_cast<std::size_t>(n));
  std::vector<std::size_t> line_of(static_cast<std::size_t>(n), 0);
  long long v = 0;
  while (v < n && std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    const auto values = detail::parse_numbers(line, line_no);
    std::size_t first = 0;
    if (weighted) {
      if (values.empty()) detail::parse_fail(line_no, "missing vertex weight");
      if (values[0] < 1) detail::parse_fail(line_no, "vertex weight must be at least 1");
      weights[v] = values[0];
      first = 1;
    }
    auto& list = lists[v];
    for (std::size_t i = first; i < values.size(); ++i) {
      const long long u = values[i];
      if (u < 1 || u > n) detail::parse_fail(line_no, "neighbor " + std::to_string(u) + " out of range");
      if (u - 1 == v) detail::parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
      list.push_back(static_cast<VertexId>(u - 1));
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) detail::parse_fail(line_no, "duplicate neighbor");
    line_of[v] = line_no;
    ++v;
  }
  if (v < n) detail::parse_fail(line_no, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(v));
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line) || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    detail::parse_fail(line_no, "unexpected content after the last vertex line");
  }

  std::size_t half_edges = 0;
  for (VertexId a = 0; a < lists.size(); ++a) {
    half_edges += lists[a].size();
    for (VertexId b : lists[a]) {
      if (!std::binary_search(lists[b].begin(), lists[b].end(), a)) {
        detail::parse_fail(line_of[a], "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                                           " is missing from the line of vertex " + std::to_string(b + 1));
      }
    }
  }
  if (half_edges != 2 * static_cast<std::size_t>(m)) {
    detail::parse_fail(1, "header declares " + std::to_string(m) + " edges, found " + std::to_string(half_edges / 2));
  }
  return DynGraph::from_adjacency(std::move(weights), std::move(lists));
}

inline DynGraph parse_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline DynGraph parse_graph_file(const std::string& path) {
  auto in = detail::open_in(path);
  return parse_graph(in);
}

/// Writes the active vertices as file vertices 1..k in ascending id order and
/// returns that order.
inline std::vector<VertexId> write_graph(const DynGraph& g, std::ostream& out) {
  const auto order = g.active_vertices();
  out << order.size() << ' ' << g.num_edges() << " 10\n";
  for (VertexId v : order) {
    out << g.weight(v);
    for (VertexId u : g.neighbors(v)) {
      out << ' ' << (std::lower_bound(order.begin(), order.end(), u) - order.begin()) + 1;
    }
    out << '\n';
  }
  return order;
}

inline std::vector<VertexId> write_graph_file(const DynGraph& g, const std::string& path) {
  auto out = detail::open_out(path);
  auto order = write_graph(g, out);
  if (!out.flush()) throw Error(ErrorCode::Io, "failed writing " + path);
  return order;
}

inline constexpr std::string_view kSidecarMagic{"MWISKRN\0", 8};
inline constexpr std::uint32_t kSidecarVersion = 1;

struct Sidecar {
  Weight offset = 0;
  std::uint64_t original_n = 0;
  /// File vertex i + 1 is internal kernel id id_map[i].
  std::vector<VertexId> id_map;
  TransformLog log;
};

inline std::string serialize_sidecar(const KernelResult& kernel, std::uint64_t original_n) {
  log_io::Writer w;
  w.bytes(std::string(kSidecarMagic));
  w.u32(kSidecarVersion);
  w.i64(kernel.offset());
  w.u64(original_n);
  const auto order = kernel.kernel.active_vertices();
  w.ids(order);
  w.bytes(serialize_log(kernel.log));
  return w.take();
}

inline Sidecar deserialize_sidecar(std::string_view data) {
  log_io::Reader r(data);
  if (r.take(kSidecarMagic.size()) != kSidecarMagic) throw Error(ErrorCode::CorruptLog, "bad sidecar magic");
  if (const auto version = r.u32(); version != kSidecarVersion) {
    throw Error(ErrorCode::CorruptLog, "unsupported sidecar version " + std::to_string(version));
  }
  Sidecar s;
  s.offset = r.i64();
  s.original_n = r.u64();
  s.id_map = r.ids();
  std::size_t consumed = 0;
  s.log = deserialize_log(data.substr(data.size() - r.remaining()), &consumed);
  if (consumed != r.remaining()) throw Error(ErrorCode::CorruptLog, "trailing bytes after sidecar log");
  if (s.log.offset() != s.offset) throw Error(ErrorCode::CorruptLog, "sidecar offset does not match its log");
  return s;
}

/// Kernel graph file plus its sidecar.
inline void write_kernel(const KernelResult& kernel, std::uint64_t original_n, const std::string& graph_path,
                         const std::string& sidecar_path) {
  write_graph_file(kernel.kernel, graph_path);
  auto out = detail::open_out(sidecar_path, std::ios::out | std::ios::binary);
  const auto bytes = serialize_sidecar(kernel, original_n);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw Error(ErrorCode::Io, "failed writing " + sidecar_path);
}

inline Sidecar read_sidecar(const std::string& path) {
  auto in = detail::open_in(path, std::ios::in | std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_sidecar(buf.str());
}

struct SolutionFile {
  std::optional<Weight> declared_weight;
  std::vector<VertexId> vertices;  // internal (0-indexed) ids, ascending
};

inline void write_solution(std::ostream& out, Weight weight, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  out << "%weight " << weight << '\n';
  for (VertexId v : vertices) out << v + 1 << '\n';
}

inline void write_solution_file(const std::string& path, Weight weight, std::vector<VertexId> vertices) {
  auto out = detail::open_out(path);
  write_solution(out, weight, std::move(vertices));
  if (!out.flush()) throw Error(ErrorCode::Io, "failed writing " + path);
}

/// Reads a solution over a graph with n vertices.
inline SolutionFile parse_solution(std::istream& in, std::size_t n) {
  SolutionFile sol;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) {
      std::istringstream words(line.substr(line.find('%') + 1));
      std::string key;
      long long w = 0;
      if (words >> key && key == "weight") {
        if (!(words >> w)) detail::parse_fail(line_no, "malformed %weight line");
        sol.declared_weight = w;
      }
      continue;
    }
    for (long long id : detail::parse_numbers(line, line_no)) {
      if (id < 1 || static_cast<std::size_t>(id) > n) detail::parse_fail(line_no, "vertex " + std::to_string(id) + " out of range");
      sol.vertices.push_back(static_cast<VertexId>(id - 1));
    }
  }
  std::sort(sol.vertices.begin(), sol.vertices.end());
  if (std::adjacent_find(sol.vertices.begin(), sol.vertices.end()) != sol.vertices.end()) {
    throw Error(ErrorCode::ParseError, "solution lists a vertex twice");
  }
  return sol;
}

inline SolutionFile parse_solution_file(const std::string& path, std::size_t n) {
  auto in = detail::open_in(path);
  return parse_solution(in, n);
}

}  // namespace mwis
