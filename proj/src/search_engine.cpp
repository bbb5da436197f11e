#include "cuboids/search_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace cuboids {

namespace {

struct EdgeOutput {
  std::vector<TableRow> rows; // ss == n, canonical, deduplicated
  std::vector<PerfectFinding> extraordinary;
};

// Scan one edge and keep the candidates that belong to it: reduced to
// primitive terms, canonicalized, smallest integer edge equal to n.
void process_edge(u64 n, EdgeOutput& out, ScanStats& stats) {
  const PyGroup group = py_group(n);
  const auto candidates = scan_edge(group, &stats);

  std::vector<Cuboid> kept;
  for (const RawCandidate& cand : candidates) {
    Cuboid c;
    c.x = cand.quad[0];
    c.y = cand.quad[1];
    c.z = cand.quad[2];
    c.d = cand.quad[3];
    c = reduce_primitive(c);
    const auto kind = classify(c.x, c.y, c.z, c.d);
    if (!kind) {
      c.kind = CuboidKind::Body; // placeholder for formatting only
      out.extraordinary.push_back(
          PerfectFinding{n, format_quadruple(c).substr(2)});
      continue;
    }
    c.kind = *kind;
    c = canonicalize(c);
    if (sorted_side(c) != n) continue; // owned by a smaller edge
    kept.push_back(c);
  }

  // Distinct conditions cannot rediscover the same cuboid at one edge, but
  // deduplication here is cheap and keeps the emission contract local.
  std::sort(kept.begin(), kept.end(), cuboid_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (const Cuboid& c : kept) out.rows.push_back(TableRow{0, n, c});
}

struct Checkpoint {
  u64 from = 0;
  u64 to = 0;
  u64 done = 0;
  std::vector<TableRow> rows;
};

constexpr const char* kCheckpointMagic = "cuboid-search-checkpoint v1";

void write_checkpoint_file(const std::string& path, const Checkpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("checkpoint: cannot open " + tmp);
    f << kCheckpointMagic << '\n'
      << "from " << cp.from << '\n'
      << "to " << cp.to << '\n'
      << "done " << cp.done << '\n'
      << "rows " << cp.rows.size() << '\n';
    u64 index = 0;
    for (TableRow r : cp.rows) {
      r.index = ++index;
      f << format_row(r) << '\n';
    }
    if (!f.flush()) throw std::runtime_error("checkpoint: write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("checkpoint: rename to " + path + " failed");
}

Checkpoint read_checkpoint_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("checkpoint: cannot open " + path);
  Checkpoint cp;
  std::string line;
  auto expect_field = [&](const char* name) -> u64 {
    if (!std::getline(f, line))
      throw std::runtime_error("checkpoint: truncated " + path);
    std::istringstream ss(line);
    std::string key;
    u64 value = 0;
    if (!(ss >> key >> value) || key != name)
      throw std::runtime_error("checkpoint: expected '" + std::string(name) +
                               "' in " + path);
    return value;
  };
  if (!std::getline(f, line) || line != kCheckpointMagic)
    throw std::runtime_error("checkpoint: bad magic in " + path);
  cp.from = expect_field("from");
  cp.to = expect_field("to");
  cp.done = expect_field("done");
  const u64 nrows = expect_field("rows");
  cp.rows.reserve(nrows);
  for (u64 i = 0; i < nrows; ++i) {
    if (!std::getline(f, line))
      throw std::runtime_error("checkpoint: truncated rows in " + path);
    cp.rows.push_back(parse_row(line));
  }
  return cp;
}

bool file_exists(const std::string& path) {
  std::ifstream f(path);
  return f.good();
}

// Chunk results are committed strictly in range order so the frontier (and
// with it the checkpoint) only ever covers a contiguous completed prefix.
struct Collector {
  std::mutex mu;
  std::map<u64, EdgeOutput> pending; // keyed by chunk index
  u64 next_chunk_to_commit = 0;
  std::vector<TableRow> committed;
  std::vector<PerfectFinding> extraordinary;
  ScanStats stats;
  u64 frontier = 0; // last edge whose whole prefix is complete
  u64 last_checkpoint = 0;
};

} // namespace

SearchReport search_range(const SearchConfig& cfg) {
  if (cfg.from == 0 || cfg.to < cfg.from)
    throw std::invalid_argument("search_range: need 1 <= from <= to");
  if (cfg.chunk_size == 0)
    throw std::invalid_argument("search_range: chunk_size must be positive");
  if (cfg.to > kMaxEdge)
    throw std::overflow_error(
        "search_range: edge " + std::to_string(cfg.to) +
        " exceeds the exact 128-bit capacity (max " +
        std::to_string(kMaxEdge) + ")");

  const auto t0 = std::chrono::steady_clock::now();

  u64 scan_from = cfg.from;
  Collector col;
  col.frontier = cfg.from - 1;

  const bool checkpointing = !cfg.checkpoint_path.empty();
  if (checkpointing && file_exists(cfg.checkpoint_path)) {
    Checkpoint cp = read_checkpoint_file(cfg.checkpoint_path);
    if (cp.from != cfg.from || cp.to != cfg.to)
      throw std::runtime_error(
          "checkpoint: range mismatch (checkpoint covers [" +
          std::to_string(cp.from) + ", " + std::to_string(cp.to) +
          "], requested [" + std::to_string(cfg.from) + ", " +
          std::to_string(cfg.to) + "])");
    col.committed = std::move(cp.rows);
    col.frontier = cp.done;
    col.last_checkpoint = cp.done;
    scan_from = cp.done + 1;
  }

  const u64 chunk = cfg.chunk_size;
  const u64 total_chunks =
      scan_from > cfg.to ? 0 : (cfg.to - scan_from) / chunk + 1;

  std::atomic<u64> next_chunk{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto cancelled = [&] {
    return abort.load(std::memory_order_relaxed) ||
           (cfg.cancel && cfg.cancel->load(std::memory_order_relaxed));
  };

  auto worker = [&] {
    try {
      while (!cancelled()) {
        const u64 ci = next_chunk.fetch_add(1, std::memory_order_relaxed);
        if (ci >= total_chunks) break;
        const u64 start = scan_from + ci * chunk;
        const u64 end = std::min(start + chunk - 1, cfg.to);

        EdgeOutput out;
        ScanStats stats;
        bool abandoned = false;
        for (u64 n = start; n <= end; ++n) {
          if (cancelled()) {
            abandoned = true;
            break;
          }
          process_edge(n, out, stats);
        }
        if (abandoned) break; // partial chunk: discard, resume rescans it

        u64 reached = 0;
        {
          std::lock_guard<std::mutex> lock(col.mu);
          col.stats.pairs += stats.pairs;
          col.stats.square_tests += stats.square_tests;
          col.stats.candidates += stats.candidates;
          col.pending.emplace(ci, std::move(out));
          while (!col.pending.empty() &&
                 col.pending.begin()->first == col.next_chunk_to_commit) {
            EdgeOutput& head = col.pending.begin()->second;
            col.committed.insert(col.committed.end(),
                                 std::make_move_iterator(head.rows.begin()),
                                 std::make_move_iterator(head.rows.end()));
            col.extraordinary.insert(col.extraordinary.end(),
                                     head.extraordinary.begin(),
                                     head.extraordinary.end());
            col.pending.erase(col.pending.begin());
            const u64 cstart = scan_from + col.next_chunk_to_commit * chunk;
            col.frontier = std::min(cstart + chunk - 1, cfg.to);
            ++col.next_chunk_to_commit;
          }
          reached = col.frontier;
          if (checkpointing && reached < cfg.to &&
              reached - col.last_checkpoint >= cfg.checkpoint_interval) {
            write_checkpoint_file(cfg.checkpoint_path,
                                  Checkpoint{cfg.from, cfg.to, reached,
                                             col.committed});
            col.last_checkpoint = reached;
          }
        }
        if (cfg.on_progress) cfg.on_progress(reached);
      }
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
      abort.store(true, std::memory_order_relaxed);
    }
  };

  unsigned nworkers = cfg.workers;
  if (nworkers == 0) nworkers = std::max(1u, std::thread::hardware_concurrency());
  if (total_chunks > 0) {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (unsigned i = 0; i < nworkers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  if (first_error) std::rethrow_exception(first_error);

  SearchReport report;
  report.completed = col.frontier == cfg.to;
  if (!report.completed) {
    if (checkpointing)
      write_checkpoint_file(
          cfg.checkpoint_path,
          Checkpoint{cfg.from, cfg.to, col.frontier, col.committed});
  } else if (checkpointing && file_exists(cfg.checkpoint_path)) {
    std::remove(cfg.checkpoint_path.c_str());
  }

  report.rows = std::move(col.committed);
  sort_rows(report.rows);
  report.counts = count_kinds(report.rows);
  report.edges_scanned = col.frontier >= cfg.from ? col.frontier - cfg.from + 1 : 0;
  report.extraordinary = std::move(col.extraordinary);
  report.scan_stats = col.stats;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::vector<Violation> verify_table(std::istream& in) {
  std::vector<Violation> violations;
  std::vector<std::pair<std::size_t, TableRow>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      violations.push_back(Violation{line_no, "empty line"});
      continue;
    }
    try {
      rows.emplace_back(line_no, parse_row(line));
    } catch (const std::exception& e) {
      violations.push_back(Violation{line_no, e.what()});
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].second.index != i + 1)
      violations.push_back(
          Violation{rows[i].first,
                    "index violation: expected " + std::to_string(i + 1) +
                        ", found " + std::to_string(rows[i].second.index)});
    if (i + 1 < rows.size() &&
        !row_order_less(rows[i].second, rows[i + 1].second))
      violations.push_back(
          Violation{rows[i].first, "sort-order violation: row does not "
                                   "precede the row on the next line"});
  }
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) { return a.line < b.line; });
  return violations;
}

std::vector<Violation> verify_table_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  return verify_table(f);
}

std::string format_py_listing(u64 n) {
  const PyGroup g = py_group(n);
  std::size_t width = 6;
  for (const PyEntry& e : g.entries)
    width = std::max(width, std::to_string(e.A).size() + 2);
  std::ostringstream out;
  out << "Py(" << n << ")  k = " << g.size() << '\n';
  if (g.entries.empty()) return out.str();
  auto pad = [&](const std::string& s) {
    out << std::string(width > s.size() ? width - s.size() : 1, ' ') << s;
  };
  pad("i");
  pad("d");
  pad("a");
  pad("A");
  out << '\n';
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    pad(std::to_string(i + 1));
    pad(std::to_string(g.entries[i].d));
    pad(std::to_string(g.entries[i].a));
    pad(std::to_string(g.entries[i].A));
    out << '\n';
  }
  return out.str();
}

KindCounts count_kinds(std::span<const TableRow> rows) {
  KindCounts c;
  for (const TableRow& r : rows) {
    switch (r.cuboid.kind) {
      case CuboidKind::Body: ++c.body; break;
      case CuboidKind::ComplexEdge: ++c.complex_edge; break;
      case CuboidKind::RealEdge: ++c.real_edge; break;
      case CuboidKind::Face: ++c.face; break;
    }
  }
  return c;
}

std::string format_stats(const KindCounts& c) {
  const u64 total = c.total();
  std::ostringstream out;
  auto pct = [&](u64 v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%5.1f%%",
                  total ? 100.0 * static_cast<double>(v) / static_cast<double>(total) : 0.0);
    return std::string(buf);
  };
  out << "total              " << total << '\n';
  out << "body (B)           " << c.body << "  " << pct(c.body) << '\n';
  out << "complex edge (e)   " << c.complex_edge << "  " << pct(c.complex_edge)
      << '\n';
  out << "real edge (E)      " << c.real_edge << "  " << pct(c.real_edge)
      << '\n';
  out << "face (F)           " << c.face << "  " << pct(c.face) << '\n';
  const u64 edge = c.complex_edge + c.real_edge;
  u64 g = std::gcd(std::gcd(c.body, edge), c.face);
  if (g == 0) g = 1;
  out << "body:edge:face     " << c.body / g << ":" << edge / g << ":"
      << c.face / g << '\n';
  return out.str();
}

} // namespace cuboids
