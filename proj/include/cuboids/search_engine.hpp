// Exhaustive range search. For each edge N the engine builds Py(N), scans
// all entry pairs, reduces every candidate to primitive terms and keeps
// exactly those whose smallest integer edge equals N. Group completeness
// guarantees every primitive cuboid is discoverable at its smallest integer
// edge, so this rule emits each cuboid exactly once with no shared seen-set,
// which is what makes the search embarrassingly parallel.
#pragma once

#include <atomic>
#include <functional>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "cuboids/condition_scan.hpp"
#include "cuboids/table_format.hpp"

namespace cuboids {

struct SearchConfig {
  u64 from = 44; // the first edge with a primitive cuboid
  u64 to = 0;
  unsigned workers = 0;            // 0 = hardware concurrency
  u64 chunk_size = 1024;           // contiguous edges per work unit
  std::string checkpoint_path;     // empty = no checkpointing
  u64 checkpoint_interval = 65536; // completed edges between checkpoint writes

  // Cooperative cancellation: when set, workers stop claiming work, a final
  // checkpoint is written and the report comes back with completed = false.
  const std::atomic<bool>* cancel = nullptr;

  // Invoked (outside any lock) each time the completed frontier advances.
  std::function<void(u64)> on_progress;
};

struct KindCounts {
  u64 body = 0;
  u64 complex_edge = 0;
  u64 real_edge = 0;
  u64 face = 0;
  u64 total() const { return body + complex_edge + real_edge + face; }
};

// A candidate all of whose seven lengths came out rational. None is known to
// exist; any hit is surfaced as an extraordinary finding, never dropped.
struct PerfectFinding {
  u64 n = 0;
  std::string quadruple;
  bool operator==(const PerfectFinding&) const = default;
};

struct SearchReport {
  std::vector<TableRow> rows; // sorted, indexed 1..N
  KindCounts counts;
  u64 edges_scanned = 0; // includes any checkpoint-restored prefix
  double elapsed_seconds = 0.0;
  bool completed = true; // false when cancelled before reaching cfg.to
  std::vector<PerfectFinding> extraordinary;
  ScanStats scan_stats;
};

// Throws std::invalid_argument on a bad range, std::overflow_error when an
// edge exceeds the exact-arithmetic capacity, std::runtime_error on
// checkpoint I/O failures or a checkpoint/range mismatch. A checkpoint left
// by a cancelled run resumes transparently; it is removed on completion.
SearchReport search_range(const SearchConfig& cfg);

struct Violation {
  std::size_t line = 0;
  std::string message;
};

// Parses and verifies every row, then checks index contiguity and strict
// sort order (a pairwise violation is reported at the first line of the
// offending pair). Lines starting with '#' are skipped. Empty result means
// the table is clean.
std::vector<Violation> verify_table(std::istream& in);
std::vector<Violation> verify_table_file(const std::string& path);

// d_i, a_i, A_i triples of Py(n), one row per divisor.
std::string format_py_listing(u64 n);

KindCounts count_kinds(std::span<const TableRow> rows);

// Per-kind counts plus the body : edge : face occurrence ratio.
std::string format_stats(const KindCounts& counts);

} // namespace cuboids
