#include "cuboids/table_format.hpp"

#include <algorithm>
#include <tuple>

namespace cuboids {

namespace {

// Splits on a delimiter without collapsing empty fields.
std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Side parse_side(std::string_view text, const char* field, bool is_diagonal) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    auto rad = parse_i128(text.substr(1, text.size() - 2));
    if (!rad || *rad == 0)
      throw MalformedLineError(field, "bad radicand '" + std::string(text) + "'");
    return Side::sqrt_of(*rad);
  }
  auto v = parse_u64(text);
  const u64 limit = is_diagonal ? kMaxDiagonalLength : kMaxEdgeLength;
  if (!v || *v == 0 || *v > limit)
    throw MalformedLineError(field, "bad integer '" + std::string(text) + "'");
  return Side::integer(*v);
}

// (ss, x, y, z, type letter); d never participates.
auto sort_key(const TableRow& r) {
  return std::tuple<u64, i128, i128, i128, char>(
      r.ss, r.cuboid.x.value, r.cuboid.y.value, r.cuboid.z.value,
      kind_letter(r.cuboid.kind));
}

} // namespace

std::string format_side(const Side& s) {
  if (s.radical) return "(" + to_string_i128(s.value) + ")";
  return to_string_i128(s.value);
}

std::string format_quadruple(const Cuboid& c) {
  std::string out(1, kind_letter(c.kind));
  for (const Side* s : {&c.x, &c.y, &c.z, &c.d}) {
    out += ',';
    out += format_side(*s);
  }
  return out;
}

std::string format_row(const TableRow& r) {
  return std::to_string(r.index) + '\t' + std::to_string(r.ss) + '\t' +
         format_quadruple(r.cuboid);
}

TableRow parse_row(std::string_view line) {
  auto fields = split(line, '\t');
  if (fields.size() != 3)
    throw MalformedLineError("line", "expected 3 tab-separated fields, got " +
                                         std::to_string(fields.size()));
  auto index = parse_u64(fields[0]);
  if (!index || *index == 0)
    throw MalformedLineError("index", "'" + std::string(fields[0]) + "'");
  auto ss = parse_u64(fields[1]);
  if (!ss || *ss == 0)
    throw MalformedLineError("ss", "'" + std::string(fields[1]) + "'");

  auto parts = split(fields[2], ',');
  if (parts.size() != 5)
    throw MalformedLineError("cuboid", "expected 5 comma-separated values");
  if (parts[0].size() != 1)
    throw MalformedLineError("type", "'" + std::string(parts[0]) + "'");
  auto kind = kind_from_letter(parts[0][0]);
  if (!kind) throw MalformedLineError("type", "'" + std::string(parts[0]) + "'");

  Cuboid c;
  c.kind = *kind;
  c.x = parse_side(parts[1], "x", false);
  c.y = parse_side(parts[2], "y", false);
  c.z = parse_side(parts[3], "z", false);
  c.d = parse_side(parts[4], "d", true);

  if (!verify(c))
    throw RowVerificationError(format_quadruple(c), "cuboid invariants fail");
  if (*ss != sorted_side(c))
    throw RowVerificationError(format_quadruple(c),
                               "ss " + std::to_string(*ss) +
                                   " != sorted side " +
                                   std::to_string(sorted_side(c)));
  return TableRow{*index, *ss, c};
}

bool row_order_less(const TableRow& a, const TableRow& b) {
  return sort_key(a) < sort_key(b);
}

void sort_rows(std::vector<TableRow>& rows) {
  std::sort(rows.begin(), rows.end(), row_order_less);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].index = i + 1;
}

std::string format_table(std::span<const TableRow> rows, bool header) {
  std::string out;
  if (header) out += "#\tss\tcuboid\n";
  for (const TableRow& r : rows) {
    out += format_row(r);
    out += '\n';
  }
  return out;
}

} // namespace cuboids
