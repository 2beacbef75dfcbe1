#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "steinred/bnb.hpp"
#include "steinred/heuristics.hpp"
#include "steinred/reduce.hpp"
#include "steinred/stp_io.hpp"

namespace fs = std::filesystem;
using namespace steinred;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("steinred");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("STEINRED_LOG_LEVEL")) {
    const std::string level = env;
    if (level == "error") spdlog::set_level(spdlog::level::err);
    else if (level == "warn") spdlog::set_level(spdlog::level::warn);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("unknown STEINRED_LOG_LEVEL '{}'", level);
  }
}

PcInstance load(const std::string& path) {
  std::vector<std::string> warnings;
  PcInstance instance = read_stp_file(path, &warnings);
  for (const auto& w : warnings) spdlog::warn("{}: {}", path, w);
  spdlog::info("{}: {} vertices, {} edges, {} terminals", path, instance.alive_vertex_count(),
               instance.alive_edge_count(), instance.terminal_count());
  return instance;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string fixed6(Cost c) { return fmt::format("{:.6f}", c); }

struct ReduceArgs {
  std::string in, out, log;
  long budget = -1;
};

int run_reduce(const ReduceArgs& args) {
  const PcInstance instance = load(args.in);
  ReduceConfig config;
  config.walk_budget = args.budget;
  const auto started = std::chrono::steady_clock::now();
  const ReduceResult r = reduce_loop(instance, config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!args.out.empty()) write_file(args.out, write_stp(r.instance, fs::path(args.in).stem().string()));
  if (!args.log.empty()) write_file(args.log, r.log.serialize());
  fmt::print("vertices {} -> {}\n", instance.alive_vertex_count(), r.instance.alive_vertex_count());
  fmt::print("edges {} -> {}\n", instance.alive_edge_count(), r.instance.alive_edge_count());
  fmt::print("offset {}\n", format_cost(r.instance.offset()));
  fmt::print("events {}\n", r.log.size());
  fmt::print("rounds {}\n", r.rounds);
  fmt::print("LB {}\nUB {}\n", format_cost(r.lower_bound), format_cost(r.upper_bound));
  spdlog::info("reduced in {:.3f} s", seconds);
  return kOk;
}

int run_solve(const std::string& in, double time_limit, const std::string& sol) {
  const PcInstance instance = load(in);
  SolveConfig config;
  config.time_limit = time_limit;
  const SolveResult r = solve(instance, config);
  fmt::print("{}", r.stats.to_text(r.lower, r.upper));
  fmt::print("optimal {}\n", r.optimal ? "true" : "false");
  if (!sol.empty()) write_file(sol, write_solution(instance, r.tree));
  return kOk;
}

int run_bounds(const std::string& in) {
  const PcInstance instance = load(in);
  const Cost lower = dual_lower_bound(instance, ReduceConfig{}.max_roots);
  const SteinerTree tree = best_heuristic_tree(instance);
  fmt::print("LB {}\nUB {}\n", format_cost(lower), format_cost(evaluate_cost(instance, tree)));
  return kOk;
}

int run_check(const std::string& in, const std::string& sol) {
  const PcInstance instance = load(in);
  const SolutionFile file = parse_solution(read_text_file(sol), instance);
  validate_tree(instance, file.tree);
  const Cost cost = evaluate_cost(instance, file.tree);
  if (!cost_equal(cost, file.claimed_value)) {
    spdlog::error("claimed value {} differs from tree cost {}", format_cost(file.claimed_value), format_cost(cost));
    return kFailure;
  }
  fmt::print("valid true\nValue {}\n", format_cost(cost));
  return kOk;
}

struct BenchRow {
  std::string name;
  std::size_t vertices = 0, edges = 0;
  Cost lower = 0, upper = 0;
  double seconds = 0;
  long nodes = 0;
  std::size_t reductions = 0;
  std::string error;
};

int run_bench(const std::string& dir, const std::string& csv, double time_limit, int jobs) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".stp") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .stp files in " + dir);

  std::vector<BenchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      BenchRow& row = rows[i];
      row.name = files[i].stem().string();
      try {
        const PcInstance instance = read_stp_file(files[i]);
        SolveConfig config;
        config.time_limit = time_limit;
        const SolveResult r = solve(instance, config);
        row.vertices = instance.alive_vertex_count();
        row.edges = instance.alive_edge_count();
        row.lower = r.lower;
        row.upper = r.upper;
        row.seconds = r.stats.seconds;
        row.nodes = r.stats.nodes;
        row.reductions = r.stats.total_reductions();
        spdlog::info("{}: LB {} UB {} in {:.3f} s", row.name, format_cost(r.lower), format_cost(r.upper),
                     r.stats.seconds);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream out(csv);
  if (!out) throw std::runtime_error("cannot write " + csv);
  fmt::print(out, "name,vertices,edges,lb,ub,time,nodes,reductions\n");
  int status = kOk;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      spdlog::error("{}: {}", row.name, row.error);
      status = kFailure;
      continue;
    }
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", row.name, row.vertices, row.edges, fixed6(row.lower),
               fixed6(row.upper), fixed6(row.seconds), row.nodes, row.reductions);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Prize-collecting Steiner tree reduction and exact solving"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Reserved; all algorithms are deterministic");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Reduce an instance and write the event log");
  reduce->add_option("--in", reduce_args.in, "Input .stp")->required();
  reduce->add_option("--out", reduce_args.out, "Reduced instance .stp");
  reduce->add_option("--log", reduce_args.log, "Event log");
  reduce->add_option("--budget", reduce_args.budget, "Walk search budget (default 10|E|)");

  std::string in, sol, dir, csv;
  double time_limit = 1e300;
  int jobs = 1;
  auto* solve_cmd = app.add_subcommand("solve", "Solve to optimality");
  solve_cmd->add_option("--in", in, "Input .stp")->required();
  solve_cmd->add_option("--time-limit", time_limit, "Seconds");
  solve_cmd->add_option("--sol", sol, "Solution output");

  auto* bounds = app.add_subcommand("bounds", "Dual-ascent lower bound and heuristic upper bound");
  bounds->add_option("--in", in, "Input .stp")->required();

  auto* check = app.add_subcommand("check", "Validate and price a solution");
  check->add_option("--in", in, "Input .stp")->required();
  check->add_option("--sol", sol, "Solution file")->required();

  double bench_limit = 60;
  auto* bench = app.add_subcommand("bench", "Solve every .stp in a directory");
  bench->add_option("--dir", dir, "Instance directory")->required();
  bench->add_option("--csv", csv, "CSV output")->required();
  bench->add_option("--time-limit", bench_limit, "Seconds per instance");
  bench->add_option("--jobs", jobs, "Parallel instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return run_reduce(reduce_args);
    if (*solve_cmd) return run_solve(in, time_limit, sol);
    if (*bounds) return run_bounds(in);
    if (*check) return run_check(in, sol);
    if (*bench) return run_bench(dir, csv, bench_limit, jobs);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  return kUsage;
}
