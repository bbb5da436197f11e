// The Integer Cuboid Table wire format: tab-delimited ASCII, one row per
// line, no header by default:
//
//   <index> TAB <ss> TAB <type>,<x>,<y>,<z>,<d>
//
// where a radical slot is written as the parenthesized signed radicand,
// e.g. "2<TAB>60<TAB>e,60,63,(-3344),65". Lines end with a single linefeed.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuboids/cuboid.hpp"

namespace cuboids {

struct TableRow {
  u64 index = 0; // 1-based position after sorting
  u64 ss = 0;    // sorted side: smallest integer edge
  Cuboid cuboid;

  bool operator==(const TableRow&) const = default;
};

// Line that does not match the grammar; names the offending field.
struct MalformedLineError : std::runtime_error {
  MalformedLineError(std::string field_, const std::string& detail)
      : std::runtime_error("malformed line: bad " + field_ +
                           (detail.empty() ? "" : " (" + detail + ")")),
        field(std::move(field_)) {}
  std::string field;
};

// Line that parses but whose cuboid fails verification (or whose ss does not
// match the cuboid); carries the offending quadruple.
struct RowVerificationError : std::runtime_error {
  RowVerificationError(std::string quadruple_, const std::string& detail)
      : std::runtime_error("row verification failed: " + quadruple_ +
                           (detail.empty() ? "" : " (" + detail + ")")),
        quadruple(std::move(quadruple_)) {}
  std::string quadruple;
};

std::string format_side(const Side& s);
std::string format_quadruple(const Cuboid& c); // "B,44,117,240,(73225)"

// Exact serialization, no trailing whitespace, no newline.
std::string format_row(const TableRow& r);

// Inverse of format_row; the parsed cuboid must pass verify and the ss
// column must equal its sorted side.
TableRow parse_row(std::string_view line);

// Total order of the table: ascending (ss, x, y, z, type letter), slot
// values compared as numbers with radical slots contributing their signed
// radicand. No two distinct primitive cuboids share a key.
bool row_order_less(const TableRow& a, const TableRow& b);

// Sorts in place and reassigns indices 1..N.
void sort_rows(std::vector<TableRow>& rows);

// Whole-table serialization: one line per row, each terminated by '\n'.
// The optional header line mirrors the table's column captions.
std::string format_table(std::span<const TableRow> rows, bool header = false);

} // namespace cuboids
