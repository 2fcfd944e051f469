#pragma once

// Command-line front end. run_cli is the whole program; main() only forwards
// argv, which keeps every command testable in-process.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mwis/blowup.hpp"
#include "mwis/metis_io.hpp"
#include "mwis/oracle.hpp"
#include "mwis/random.hpp"
#include "mwis/solver.hpp"

namespace mwis {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParse = 2;
inline constexpr int kTimeLimit = 3;
}  // namespace exit_code

namespace detail {

/// One run summary as a single line of space-separated key=value pairs.
class StatsLine {
 public:
  template <typename T>
  StatsLine& add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    fields_.emplace_back(key, s.str());
    return *this;
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
      if (!out.empty()) out += ' ';
      out += k + '=' + v;
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline void emit_stats(const StatsLine& line, const std::string& path, std::ostream& out) {
  out << line.str() << '\n';
  if (path.empty()) return;
  auto file = open_out(path);
  file << line.str() << '\n';
  if (!file.flush()) throw Error(ErrorCode::Io, "failed writing " + path);
}

inline const std::map<std::string, StructionVariant>& variant_names() {
  static const std::map<std::string, StructionVariant> names = {
      {"original", StructionVariant::Original},
      {"modified", StructionVariant::Modified},
      {"extended", StructionVariant::Extended},
      {"extended-reduced", StructionVariant::ExtendedReduced},
  };
  return names;
}

inline const std::map<std::string, Preset>& preset_names() {
  static const std::map<std::string, Preset> names = {
      {"nonincreasing", Preset::NonIncreasing},
      {"cyclic-fast", Preset::CyclicFast},
      {"cyclic-strong", Preset::CyclicStrong},
  };
  return names;
}

/// Options shared by reduce and solve.
struct KernelOptions {
  std::string input;
  std::string mode = "nonincreasing";
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> d_max;
  std::optional<std::size_t> unsuccessful;
  std::optional<double> beta;
  std::optional<double> alpha;
  std::optional<std::string> variant;
  std::optional<std::uint64_t> weight_seed;
  std::string stats_path;
  bool timings = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--in", input, "Input graph (METIS)")->required()->check(CLI::ExistingFile);
    cmd.add_option("--mode", mode, "Preprocessing preset")
        ->check(CLI::IsMember({"nonincreasing", "cyclic-fast", "cyclic-strong"}));
    cmd.add_option("--nmax", n_max, "Blow-up creation cap")->check(CLI::PositiveNumber);
    cmd.add_option("--dmax", d_max, "Maximum struction center degree")->check(CLI::PositiveNumber);
    cmd.add_option("--unsucc", unsuccessful, "Unsuccessful blow-up phases before stopping")->check(CLI::PositiveNumber);
    cmd.add_option("--beta", beta, "Tightness factor (> 1)");
    cmd.add_option("--alpha", alpha, "Size-explosion factor (>= 1)");
    cmd.add_option("--variant", variant, "Struction variant")
        ->check(CLI::IsMember({"original", "modified", "extended", "extended-reduced"}));
    cmd.add_option("--random-weights", weight_seed, "Replace input weights by uniform [1,200] draws from SEED");
    cmd.add_option("--stats", stats_path, "Write the stats line to this file");
    cmd.add_flag("--timings", timings, "Include wall-clock timings in the stats line");
  }

  Preset preset() const { return preset_names().at(mode); }

  BlowupConfig blowup_config() const {
    BlowupConfig cfg = preset_config(preset());
    if (n_max) cfg.n_max = *n_max;
    if (d_max) cfg.d_max = *d_max;
    if (unsuccessful) cfg.max_unsuccessful = *unsuccessful;
    if (beta) cfg.beta = *beta;
    if (alpha) cfg.alpha = *alpha;
    if (variant) cfg.variant = variant_names().at(*variant);
    cfg.reduce_cfg.variant = cfg.variant;
    if (d_max) cfg.reduce_cfg.d_max = std::min(cfg.reduce_cfg.d_max, *d_max);
    cfg.validate();
    return cfg;
  }

  DynGraph load() const {
    DynGraph g = parse_graph_file(input);
    if (weight_seed) assign_random_weights(g, kDefaultWeightLo, kDefaultWeightHi, *weight_seed);
    return g;
  }

  KernelResult kernelize(const DynGraph& g, BlowupStats& stats) const {
    const BlowupConfig cfg = blowup_config();
    if (preset() == Preset::NonIncreasing) {
      KernelResult r = reduce(g, cfg.reduce_cfg);
      stats = {};
      stats.initial_n = stats.final_n = r.kernel.num_vertices();
      return r;
    }
    return cyclic_blow_up(g, cfg, &stats);
  }

  std::string instance() const { return std::filesystem::path(input).filename().string(); }
  std::string seed_text() const { return weight_seed ? std::to_string(*weight_seed) : std::string("none"); }
};

inline int cmd_reduce(KernelOptions& opt, const std::string& out_path, std::string sidecar_path, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const DynGraph g = opt.load();
  const auto start = Clock::now();
  BlowupStats bstats;
  const KernelResult kernel = opt.kernelize(g, bstats);
  const double reduce_ms = ms_since(start);

  if (sidecar_path.empty()) sidecar_path = out_path + ".sidecar";
  write_kernel(kernel, g.num_vertices(), out_path, sidecar_path);

  StatsLine line;
  line.add("instance", opt.instance()).add("mode", opt.mode).add("n", g.num_vertices()).add("m", g.num_edges());
  line.add("kernel_n", kernel.kernel.num_vertices()).add("kernel_m", kernel.kernel.num_edges());
  line.add("offset", kernel.offset());
  if (kernel.kernel.empty()) {
    line.add("weight", kernel.offset());
  } else {
    line.add("weight", "NA");
  }
  line.add("status", kernel.kernel.empty() ? "solved" : "reduced").add("seed", opt.seed_text());
  line.add("initial_kernel_n", bstats.initial_n).add("accepted", bstats.accepted).add("rejected", bstats.rejected);
  if (opt.timings) line.add("reduce_ms", reduce_ms);
  emit_stats(line, opt.stats_path, out);
  return exit_code::kOk;
}

inline int cmd_solve(KernelOptions& opt, const std::string& sol_path, double time_limit, std::uint64_t seed,
                     std::ostream& out) {
  const DynGraph g = opt.load();
  SolverConfig cfg;
  cfg.preset = opt.preset();
  cfg.blowup = opt.blowup_config();
  cfg.inner.variant = cfg.blowup->variant;
  cfg.time_limit_s = time_limit;
  cfg.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  SolveStats stats;
  const KernelResult kernel = opt.kernelize(g, stats.blowup);
  stats.reduce_ms = ms_since(start);
  const SolveResult result = solve_kernel(g, kernel, cfg, stats);
  write_solution_file(sol_path, result.weight, result.solution);

  StatsLine line;
  line.add("instance", opt.instance()).add("mode", opt.mode).add("n", g.num_vertices()).add("m", g.num_edges());
  line.add("kernel_n", result.stats.kernel_n).add("kernel_m", result.stats.kernel_m);
  line.add("offset", result.stats.offset).add("weight", result.weight).add("status", to_string(result.status));
  line.add("seed", opt.seed_text()).add("branches", result.stats.branches).add("max_depth", result.stats.max_depth);
  if (opt.timings) line.add("reduce_ms", result.stats.reduce_ms).add("solve_ms", result.stats.solve_ms);
  emit_stats(line, opt.stats_path, out);
  return result.status == SolveStatus::Optimal ? exit_code::kOk : exit_code::kTimeLimit;
}

struct GenOptions {
  std::string shape = "gnp";
  std::size_t n = 0;
  double p = 0.1;
  Weight wmin = kDefaultWeightLo;
  Weight wmax = kDefaultWeightHi;
  std::uint64_t seed = 0;
  std::string out;
};

inline int cmd_gen(const GenOptions& opt, std::ostream& err) {
  if (opt.wmin < 1 || opt.wmax < opt.wmin) {
    err << "error: need 1 <= --wmin <= --wmax\n";
    return exit_code::kUsage;
  }
  DynGraph g = [&] {
    if (opt.shape == "path") return random_path(opt.n, opt.seed, opt.wmin, opt.wmax);
    if (opt.shape == "cycle") return random_cycle(opt.n, opt.seed, opt.wmin, opt.wmax);
    return random_gnp(opt.n, opt.p, opt.seed, opt.wmin, opt.wmax);
  }();
  write_graph_file(g, opt.out);
  return exit_code::kOk;
}

inline int cmd_oracle(const std::string& input, std::ostream& out) {
  const DynGraph g = parse_graph_file(input);
  const OracleResult r = brute_force_mwis(g);
  write_solution(out, r.weight, r.solution);
  return exit_code::kOk;
}

inline int cmd_verify(const std::string& input, const std::string& sol_path, std::ostream& out, std::ostream& err) {
  const DynGraph g = parse_graph_file(input);
  const SolutionFile sol = parse_solution_file(sol_path, g.num_vertices());
  if (!is_independent(g, sol.vertices)) {
    err << to_string(ErrorCode::NotIndependent) << ": solution contains adjacent vertices\n";
    return exit_code::kUsage;
  }
  const Weight w = weight_of(g, sol.vertices);
  if (sol.declared_weight && *sol.declared_weight != w) {
    err << "weight mismatch: file declares " << *sol.declared_weight << ", vertices weigh " << w << '\n';
    return exit_code::kUsage;
  }
  out << "ok weight=" << w << " size=" << sol.vertices.size() << '\n';
  return exit_code::kOk;
}

inline int cmd_lift(const std::string& kernel_path, std::string sidecar_path, const std::string& kernel_sol,
                    const std::string& out_path, std::ostream& out) {
  if (sidecar_path.empty()) sidecar_path = kernel_path + ".sidecar";
  const DynGraph kernel = parse_graph_file(kernel_path);
  const Sidecar side = read_sidecar(sidecar_path);
  if (side.id_map.size() != kernel.num_vertices()) {
    throw Error(ErrorCode::CorruptLog, "sidecar does not match the kernel graph");
  }
  const SolutionFile sol = parse_solution_file(kernel_sol, kernel.num_vertices());
  if (!is_independent(kernel, sol.vertices)) {
    throw Error(ErrorCode::NotIndependent, "kernel solution contains adjacent vertices");
  }
  std::vector<VertexId> kernel_ids;
  for (VertexId v : sol.vertices) kernel_ids.push_back(side.id_map[v]);
  const auto lifted = lift(side.log, kernel_ids);
  const Weight weight = weight_of(kernel, sol.vertices) + side.offset;
  write_solution_file(out_path, weight, lifted);
  out << "lifted size=" << lifted.size() << " weight=" << weight << '\n';
  return exit_code::kOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact maximum weight independent set solver with struction-based kernelization"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  detail::KernelOptions reduce_opt;
  std::string reduce_out;
  std::string reduce_sidecar;
  auto* reduce_cmd = app.add_subcommand("reduce", "Kernelize a graph");
  reduce_opt.attach(*reduce_cmd);
  reduce_cmd->add_option("--out", reduce_out, "Kernel graph output")->required();
  reduce_cmd->add_option("--sidecar", reduce_sidecar, "Sidecar output (default: <out>.sidecar)");

  detail::KernelOptions solve_opt;
  std::string solve_sol;
  double time_limit = 3600.0;
  std::uint64_t solve_seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Solve to optimality (or until the time limit)");
  solve_opt.attach(*solve_cmd);
  solve_cmd->add_option("--sol", solve_sol, "Solution output")->required();
  solve_cmd->add_option("--time-limit", time_limit, "Search time limit in seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve_seed, "Local search seed");

  detail::GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random weighted graph");
  gen_cmd->add_option("--shape", gen_opt.shape, "gnp, path or cycle")->check(CLI::IsMember({"gnp", "path", "cycle"}));
  gen_cmd->add_option("--n", gen_opt.n, "Number of vertices")->required();
  gen_cmd->add_option("--p", gen_opt.p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--wmin", gen_opt.wmin, "Minimum weight");
  gen_cmd->add_option("--wmax", gen_opt.wmax, "Maximum weight");
  gen_cmd->add_option("--seed", gen_opt.seed, "Generator seed (mt19937_64)");
  gen_cmd->add_option("--out", gen_opt.out, "Output graph")->required();

  std::string oracle_in;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum (at most 30 vertices)");
  oracle_cmd->add_option("--in", oracle_in, "Input graph")->required()->check(CLI::ExistingFile);

  std::string verify_in;
  std::string verify_sol;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against a graph");
  verify_cmd->add_option("--in", verify_in, "Input graph")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--sol", verify_sol, "Solution file")->required()->check(CLI::ExistingFile);

  std::string lift_kernel;
  std::string lift_sidecar;
  std::string lift_sol;
  std::string lift_out;
  auto* lift_cmd = app.add_subcommand("lift", "Map a kernel solution back to the original graph");
  lift_cmd->add_option("--kernel", lift_kernel, "Kernel graph written by reduce")->required()->check(CLI::ExistingFile);
  lift_cmd->add_option("--sidecar", lift_sidecar, "Kernel sidecar (default: <kernel>.sidecar)");
  lift_cmd->add_option("--sol", lift_sol, "Solution of the kernel graph")->required()->check(CLI::ExistingFile);
  lift_cmd->add_option("--out", lift_out, "Lifted solution output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*reduce_cmd) return detail::cmd_reduce(reduce_opt, reduce_out, reduce_sidecar, out);
    if (*solve_cmd) return detail::cmd_solve(solve_opt, solve_sol, time_limit, solve_seed, out);
    if (*gen_cmd) return detail::cmd_gen(gen_opt, err);
    if (*oracle_cmd) return detail::cmd_oracle(oracle_in, out);
    if (*verify_cmd) return detail::cmd_verify(verify_in, verify_sol, out, err);
    if (*lift_cmd) return detail::cmd_lift(lift_kernel, lift_sidecar, lift_sol, lift_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::CorruptLog:
      case ErrorCode::Io: return exit_code::kParse;
      default: return exit_code::kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace mwis
