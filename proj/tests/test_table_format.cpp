#include <algorithm>
#include <random>

#include "cuboids/search_engine.hpp"
#include "cuboids/table_format.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuboids;
using namespace cuboids::testing;

TEST_CASE("format_row serializes the raw table rows exactly") {
  CHECK(format_row(TableRow{1, 44, body(44, 117, 240, 73225)}) ==
        "1\t44\tB,44,117,240,(73225)");
  CHECK(format_row(TableRow{2, 60, edge(60, 63, -3344, 65)}) ==
        "2\t60\te,60,63,(-3344),65");
  CHECK(format_row(TableRow{7, 124, edge(124, 957, 13852800, 3845)}) ==
        "7\t124\tE,124,957,(13852800),3845");
  CHECK(format_row(TableRow{4, 104, face(153, 672, 104, 697)}) ==
        "4\t104\tF,153,672,104,697");
}

TEST_CASE("parse_row accepts valid rows") {
  const TableRow r = parse_row("4\t104\tF,153,672,104,697");
  CHECK(r.index == 4);
  CHECK(r.ss == 104);
  CHECK(r.cuboid == face(153, 672, 104, 697));
}

TEST_CASE("parse_row rejects corruption with the right error") {
  // corrupted radicand: parses but the cuboid fails verification
  CHECK_THROWS_AS(parse_row("1\t44\tB,44,117,240,(73226)"),
                  RowVerificationError);
  // ss not matching the sorted side
  CHECK_THROWS_AS(parse_row("1\t45\tB,44,117,240,(73225)"),
                  RowVerificationError);

  auto field_of = [](const char* line) {
    try {
      parse_row(line);
    } catch (const MalformedLineError& e) {
      return e.field;
    }
    return std::string("(no error)");
  };
  CHECK(field_of("x\t44\tB,44,117,240,(73225)") == "index");
  CHECK(field_of("0\t44\tB,44,117,240,(73225)") == "index");
  CHECK(field_of("1\t-2\tB,44,117,240,(73225)") == "ss");
  CHECK(field_of("1\t44\tQ,44,117,240,(73225)") == "type");
  CHECK(field_of("1\t44\tB,44,117,240") == "cuboid");
  CHECK(field_of("1\t44\tB,44,117,240,(73225),9") == "cuboid");
  CHECK(field_of("1\t44\tB,0,117,240,(73225)") == "x");
  CHECK(field_of("1\t44\tB,44,117,2x0,(73225)") == "z");
  CHECK(field_of("1\t44\tB,44,117,240,()") == "d");
  CHECK(field_of("1\t44\tB,44,117,240,(0)") == "d");
  CHECK(field_of("1\t44") == "line");
  CHECK(field_of("") == "line");
}

TEST_CASE("format and parse are inverse on searched rows") {
  const SearchReport report = search_range(SearchConfig{.from = 1, .to = 3000});
  REQUIRE(report.rows.size() > 50);
  for (const TableRow& r : report.rows) {
    CHECK(parse_row(format_row(r)) == r);
  }
}

TEST_CASE("sort_rows restores the raw table order") {
  std::vector<TableRow> rows{
      {0, 104, face(153, 672, 104, 697)},
      {0, 44, body(44, 117, 240, 73225)},
      {0, 124, edge(124, 957, 13852800, 3845)},
      {0, 117, face(520, 756, 117, 925)},
      {0, 60, edge(60, 63, -3344, 65)},
      {0, 108, edge(108, 725, -426400, 333)},
      {0, 85, body(85, 132, 720, 543049)},
  };
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    std::shuffle(rows.begin(), rows.end(), rng);
    auto sorted = rows;
    sort_rows(sorted);
    REQUIRE(sorted.size() == 7);
    CHECK(format_table(sorted) ==
          "1\t44\tB,44,117,240,(73225)\n"
          "2\t60\te,60,63,(-3344),65\n"
          "3\t85\tB,85,132,720,(543049)\n"
          "4\t104\tF,153,672,104,697\n"
          "5\t108\te,108,725,(-426400),333\n"
          "6\t117\tF,520,756,117,925\n"
          "7\t124\tE,124,957,(13852800),3845\n");
  }
}

TEST_CASE("sort_rows reindexes a single row to 1") {
  std::vector<TableRow> rows{{17, 44, body(44, 117, 240, 73225)}};
  sort_rows(rows);
  CHECK(rows[0].index == 1);
}

TEST_CASE("rows sharing ss are ordered by the next edge") {
  // synthetic pair: same ss and x, the second edge decides
  std::vector<TableRow> rows{
      {0, 44, body(44, 200, 300, 1)},
      {0, 44, body(44, 117, 240, 73225)},
  };
  sort_rows(rows);
  CHECK(rows[0].cuboid.y.value == 117);
  CHECK(rows[1].cuboid.y.value == 200);

  // real data: the first duplicated ss below 5000 is 240, a body and a
  // complex edge sharing x = 240; the second edge decides there too
  const SearchReport report = search_range(SearchConfig{.from = 1, .to = 400});
  std::vector<const TableRow*> at240;
  for (const TableRow& r : report.rows)
    if (r.ss == 240) at240.push_back(&r);
  REQUIRE(at240.size() == 2);
  CHECK(at240[0]->cuboid.x.value == 240);
  CHECK(at240[1]->cuboid.x.value == 240);
  CHECK(at240[0]->cuboid.y.value < at240[1]->cuboid.y.value);
  CHECK(at240[0]->index + 1 == at240[1]->index);
}

TEST_CASE("parse_row survives random mutations of valid lines") {
  // Anything may be rejected, nothing may misbehave: a mutated line either
  // parses to a row that re-serializes consistently or throws one of the
  // two documented errors.
  const std::vector<std::string> seeds{
      "1\t44\tB,44,117,240,(73225)",
      "2\t60\te,60,63,(-3344),65",
      "7\t124\tE,124,957,(13852800),3845",
      "4\t104\tF,153,672,104,697",
  };
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 20000; ++iter) {
    std::string line = seeds[rng() % seeds.size()];
    const int mutations = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < mutations; ++m) {
      const std::size_t pos = rng() % line.size();
      switch (rng() % 3) {
        case 0: line[pos] = static_cast<char>(rng() % 128); break;
        case 1: line.erase(pos, 1); break;
        default: line.insert(pos, 1, static_cast<char>('0' + rng() % 10));
      }
      if (line.empty()) line = "x";
    }
    try {
      const TableRow r = parse_row(line);
      CHECK(parse_row(format_row(r)) == r);
    } catch (const MalformedLineError&) {
    } catch (const RowVerificationError&) {
    }
  }
}

TEST_CASE("format_table header flag") {
  std::vector<TableRow> rows{{1, 44, body(44, 117, 240, 73225)}};
  CHECK(format_table(rows, false) == "1\t44\tB,44,117,240,(73225)\n");
  CHECK(format_table(rows, true) ==
        "#\tss\tcuboid\n1\t44\tB,44,117,240,(73225)\n");
}
