// Command-line front end for the integer cuboid search.
//
//   cuboids search --from N --to M [--workers W] [--out PATH] [...]
//   cuboids verify PATH
//   cuboids py N
//   cuboids stats PATH
//
// search writes the table to stdout (or --out) and a summary to stderr.
// SIGINT triggers a graceful stop: the checkpoint (when enabled) holds the
// completed prefix and a rerun of the same command resumes from it.
#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cuboids/oracle.hpp"
#include "cuboids/search_engine.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

int run_search(const cuboids::SearchConfig& cfg, const std::string& out_path,
               bool header) {
  std::signal(SIGINT, on_sigint);
  cuboids::SearchReport report = cuboids::search_range(cfg);

  for (const auto& finding : report.extraordinary)
    std::cerr << "cuboids: EXTRAORDINARY: perfect cuboid candidate at N="
              << finding.n << ": " << finding.quadruple << "\n";

  if (!report.completed) {
    std::cerr << "cuboids: interrupted after edge "
              << (cfg.from + report.edges_scanned - 1) << " of " << cfg.to;
    if (!cfg.checkpoint_path.empty())
      std::cerr << "; checkpoint saved to " << cfg.checkpoint_path
                << ", rerun the same command to resume";
    std::cerr << "\n";
    return 130;
  }

  const std::string table = cuboids::format_table(report.rows, header);
  if (out_path.empty()) {
    std::cout << table;
    std::cout.flush();
  } else {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "cuboids: cannot open " << out_path << "\n";
      return 1;
    }
    f << table;
    if (!f.flush()) {
      std::cerr << "cuboids: write failed: " << out_path << "\n";
      return 1;
    }
  }

  std::fprintf(stderr,
               "cuboids: scanned %llu edges in [%llu, %llu], %llu pairs, "
               "%llu rows, %.2fs\n",
               static_cast<unsigned long long>(report.edges_scanned),
               static_cast<unsigned long long>(cfg.from),
               static_cast<unsigned long long>(cfg.to),
               static_cast<unsigned long long>(report.scan_stats.pairs),
               static_cast<unsigned long long>(report.rows.size()),
               report.elapsed_seconds);
  std::cerr << cuboids::format_stats(report.counts);
  return 0;
}

int run_verify(const std::string& path) {
  const auto violations = cuboids::verify_table_file(path);
  if (violations.empty()) {
    std::cout << "OK: " << path << " is a valid integer cuboid table\n";
    return 0;
  }
  for (const auto& v : violations)
    std::cout << path << ":" << v.line << ": " << v.message << "\n";
  std::cout << violations.size() << " violation(s)\n";
  return 1;
}

int run_stats(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cuboids: cannot open " << path << "\n";
    return 1;
  }
  std::vector<cuboids::TableRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      rows.push_back(cuboids::parse_row(line));
    } catch (const std::exception& e) {
      std::cerr << path << ":" << line_no << ": " << e.what() << "\n";
      return 1;
    }
  }
  std::cout << cuboids::format_stats(cuboids::count_kinds(rows));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer cuboid search over Pythagorean groups"};
  app.require_subcommand(1);

  cuboids::SearchConfig cfg;
  std::string out_path;
  bool header = false;
  auto* search = app.add_subcommand(
      "search", "exhaustively search an edge range and emit the cuboid table");
  search->add_option("--from", cfg.from, "first edge (default 44)");
  search->add_option("--to", cfg.to, "last edge (inclusive)")->required();
  search->add_option("--workers", cfg.workers,
                     "worker threads (default: hardware concurrency)");
  search->add_option("--chunk-size", cfg.chunk_size,
                     "edges per work unit (default 1024)");
  search->add_option("--checkpoint", cfg.checkpoint_path,
                     "checkpoint file; resumes from it when present");
  search->add_option("--checkpoint-interval", cfg.checkpoint_interval,
                     "edges between checkpoint writes (default 65536)");
  search->add_option("--out", out_path, "write the table here instead of stdout");
  search->add_flag("--header", header, "emit a human-readable header line");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "validate a cuboid table file");
  verify->add_option("path", verify_path, "table file")->required();

  cuboids::u64 py_n = 0;
  auto* py = app.add_subcommand("py", "print the Pythagorean group of an edge");
  py->add_option("n", py_n, "edge")->required();

  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "per-kind counts for a table file");
  stats->add_option("path", stats_path, "table file")->required();

  // Brute-force reference, for debugging the engine against the oracle.
  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group(""); // hidden
  cuboids::u64 oracle_partners_n = 0, oracle_cuboids_max = 0;
  auto* opart = oracle_cmd->add_subcommand("partners", "");
  opart->add_option("n", oracle_partners_n)->required();
  auto* ocub = oracle_cmd->add_subcommand("cuboids", "");
  ocub->add_option("max_edge", oracle_cuboids_max)->required();
  oracle_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) {
      cfg.cancel = &g_interrupted;
      return run_search(cfg, out_path, header);
    }
    if (verify->parsed()) return run_verify(verify_path);
    if (py->parsed()) {
      std::cout << cuboids::format_py_listing(py_n);
      return 0;
    }
    if (stats->parsed()) return run_stats(stats_path);
    if (oracle_cmd->parsed()) {
      if (opart->parsed()) {
        for (cuboids::u64 m : cuboids::oracle::partners_bruteforce(oracle_partners_n))
          std::cout << m << "\n";
        return 0;
      }
      std::vector<std::string> perfect;
      auto cubs = cuboids::oracle::cuboids_bruteforce(
          cuboids::oracle::OracleLimit{oracle_cuboids_max}, &perfect);
      for (const auto& c : cubs)
        std::cout << cuboids::format_quadruple(c) << "\n";
      for (const auto& p : perfect)
        std::cerr << "cuboids: EXTRAORDINARY (oracle): " << p << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "cuboids: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
