// dic: generate traces, replay them with verification, benchmark, and run
// consecutive-ones matrix-vector queries.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input format error.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "dic/harness.hpp"
#include "dic/omv_c1.hpp"
#include "dic/trace.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Logs go to stderr so reports and traces on stdout stay clean.
void configure_logging() {
  spdlog::set_default_logger(spdlog::stderr_logger_st("dic"));
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("DIC_LOG"); level != nullptr) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

// Opens `path` for reading; "-" is stdin.
std::istream& open_input(const std::string& path, std::unique_ptr<std::ifstream>& holder) {
  if (path == "-") return std::cin;
  holder = std::make_unique<std::ifstream>(path);
  if (!*holder) throw dic::Error(dic::Errc::BadParams, "cannot open " + path);
  return *holder;
}

// Opens `path` for writing; empty or "-" is stdout.
std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw dic::Error(dic::Errc::BadParams, "cannot write " + path);
  return *holder;
}

dic::Trace load_trace(const std::string& path) {
  std::unique_ptr<std::ifstream> holder;
  dic::Trace trace = dic::read_trace(open_input(path, holder));
  spdlog::info("loaded {} events from {}", trace.size(), path);
  return trace;
}

void write_report(const dic::Report& report, const std::string& path, bool include_timing) {
  std::unique_ptr<std::ofstream> holder;
  open_output(path, holder) << dic::to_json(report, include_timing) << '\n';
}

struct GenArgs {
  std::string kind = "uniform";
  std::size_t n = 0;
  double delete_prob = 0.0;
  dic::Coord coord_max = 1'000'000;
  dic::Coord max_len = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunArgs {
  std::string trace = "-";
  std::string mode = "dynamic";
  std::string check = "final";
  std::uint64_t seed = 0;
  std::string report;
};

struct BenchArgs {
  std::string trace = "-";
  std::string mode = "dynamic";
  std::size_t repeat = 1;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::string report;
};

struct OmvArgs {
  std::string matrix;
  std::string vectors = "-";
  std::string out;
  bool naive = false;
};

int do_gen(const GenArgs& a) {
  const dic::Trace trace = dic::generate({dic::parse_trace_kind(a.kind), a.n, a.delete_prob, a.coord_max, a.max_len, a.seed});
  std::unique_ptr<std::ofstream> holder;
  dic::write_trace(open_output(a.out, holder), trace);
  spdlog::info("generated {} events", trace.size());
  return 0;
}

int do_run(const RunArgs& a, dic::CheckLevel check) {
  const dic::Trace trace = load_trace(a.trace);
  const dic::Report report = dic::run(trace, {dic::parse_mode(a.mode), check, a.seed});
  write_report(report, a.report, true);
  if (report.checks.any_failed() || !report.failure.empty()) {
    std::cerr << "dic: check failed: " << report.failure << '\n';
    return kExitCheckFailed;
  }
  return 0;
}

int do_bench(const BenchArgs& a) {
  const dic::Trace trace = load_trace(a.trace);
  const dic::Report report = dic::bench(trace, {dic::parse_mode(a.mode), a.repeat, a.workers, a.seed});
  write_report(report, a.report, true);
  return 0;
}

int do_omv(const OmvArgs& a) {
  std::unique_ptr<std::ifstream> matrix_holder;
  const dic::omv::DenseMatrix m = dic::omv::read_matrix(open_input(a.matrix, matrix_holder));
  const std::size_t n = m.size();
  std::optional<dic::omv::C1Index> index;
  if (!a.naive) index = dic::omv::C1Index::preprocess(dic::omv::C1Matrix::from_dense(m));
  spdlog::info("matrix of dimension {} ready", n);

  std::unique_ptr<std::ifstream> vector_holder;
  std::istream& in = open_input(a.vectors, vector_holder);
  std::unique_ptr<std::ofstream> out_holder;
  std::ostream& out = open_output(a.out, out_holder);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const dic::omv::BitVector v = dic::omv::parse_bits(line, n);
    const dic::omv::BitVector r = a.naive ? dic::omv::naive_multiply(m, v) : index->multiply(v);
    // Each answer is flushed before the next query is read.
    out << dic::omv::format_bits(r) << std::endl;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Dynamic interval coloring toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a JSON Lines update trace");
  gen_cmd->add_option("--kind", gen.kind, "uniform, nested or mixed")->capture_default_str();
  gen_cmd->add_option("-n,--n", gen.n, "Number of update events")->required();
  gen_cmd->add_option("--delete-prob", gen.delete_prob, "Delete probability (mixed only)")->capture_default_str();
  gen_cmd->add_option("--coord-max", gen.coord_max, "Coordinates lie in [0, coord-max]")->capture_default_str();
  gen_cmd->add_option("--max-len", gen.max_len, "Longest interval; 0 picks coord-max/100")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path, stdout by default");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Replay a trace and report");
  RunArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a trace checking every update");
  for (auto [cmd, args] : {std::pair{run_cmd, &run}, std::pair{verify_cmd, &verify}}) {
    cmd->add_option("--trace", args->trace, "Trace path, - for stdin")->capture_default_str();
    cmd->add_option("--mode", args->mode, "incremental or dynamic")->capture_default_str();
    cmd->add_option("--seed", args->seed, "Recorded in the report")->capture_default_str();
    cmd->add_option("--report", args->report, "Report path, stdout by default");
  }
  run_cmd->add_option("--check", run.check, "none, final or every_update")->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time repeated replays without checks");
  bench_cmd->add_option("--trace", bench.trace, "Trace path, - for stdin")->capture_default_str();
  bench_cmd->add_option("--mode", bench.mode, "incremental or dynamic")->capture_default_str();
  bench_cmd->add_option("--repeat", bench.repeat, "Timed replays after one warm-up")->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Replays run in parallel")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Recorded in the report")->capture_default_str();
  bench_cmd->add_option("--report", bench.report, "Report path, stdout by default");

  OmvArgs omv;
  auto* omv_cmd = app.add_subcommand("omv", "Answer consecutive-ones matrix-vector queries online");
  omv_cmd->add_option("--matrix", omv.matrix, "Matrix file")->required();
  omv_cmd->add_option("--vectors", omv.vectors, "Query file, - for stdin")->capture_default_str();
  omv_cmd->add_option("--out", omv.out, "Output path, stdout by default");
  omv_cmd->add_flag("--naive", omv.naive, "Use the plain product instead of the interval index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen);
    if (*run_cmd) return do_run(run, dic::parse_check_level(run.check));
    if (*verify_cmd) return do_run(verify, dic::CheckLevel::EveryUpdate);
    if (*bench_cmd) return do_bench(bench);
    if (*omv_cmd) return do_omv(omv);
  } catch (const dic::Error& e) {
    std::cerr << "dic: " << e.what() << '\n';
    return e.code() == dic::Errc::CheckFailed ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dic: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
