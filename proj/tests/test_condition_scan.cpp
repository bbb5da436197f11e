#include <algorithm>

#include "cuboids/condition_scan.hpp"
#include "cuboids/cuboid.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuboids;
using namespace cuboids::testing;

namespace {

bool contains(const std::vector<RawCandidate>& cands, SearchCondition cond,
              u64 lhs1, u64 lhs2, u64 s, const std::array<Side, 4>& quad) {
  return std::any_of(cands.begin(), cands.end(), [&](const RawCandidate& c) {
    return c.condition == cond && c.lhs1 == lhs1 && c.lhs2 == lhs2 &&
           c.s == s && c.quad == quad;
  });
}

} // namespace

TEST_CASE("scan_edge finds the worked examples") {
  // Py(44): 240^2 + 117^2 = 267^2 gives the body cuboid 44,117,240,sqrt(73225)
  const auto c44 = scan_edge(py_group(44));
  CHECK(contains(c44, SearchCondition::BodySum, 240, 117, 267,
                 {Side::integer(240), Side::integer(117), Side::integer(44),
                  Side::sqrt_of(73225)}));

  // Py(104): 680^2 + 153^2 = 697^2 gives the face cuboid 153,672,104,697
  const auto c104 = scan_edge(py_group(104));
  CHECK(contains(c104, SearchCondition::FaceSum, 680, 153, 697,
                 {Side::integer(153), Side::integer(672), Side::integer(104),
                  Side::integer(697)}));

  // Py(60): 65^2 - 63^2 = 16^2 gives the complex edge 60,63,sqrt(-3344),65
  const auto c60 = scan_edge(py_group(60));
  CHECK(contains(c60, SearchCondition::EdgeDiffAi, 65, 63, 16,
                 {Side::integer(60), Side::integer(63), Side::sqrt_of(-3344),
                  Side::integer(65)}));

  // k = 1: no pairs, nothing to test
  CHECK(scan_edge(py_group(3)).empty());
}

TEST_CASE("scan_edge visits every unordered pair") {
  for (u64 n : {u64(3), u64(44), u64(60), u64(104), u64(117), u64(720)}) {
    const PyGroup g = py_group(n);
    ScanStats stats;
    scan_edge(g, &stats);
    const u64 k = g.size();
    CHECK(stats.pairs == k * (k - 1) / 2);
    // five algebraic families per pair, two of which share a square test
    CHECK(stats.square_tests <= 5 * stats.pairs);
    CHECK(stats.square_tests >= 4 * stats.pairs);
  }
}

TEST_CASE("every candidate satisfies its condition and the quadruple identity") {
  u64 total = 0;
  for (u64 n = 1; n <= 500; ++n) {
    for (const RawCandidate& cand : scan_edge(py_group(n))) {
      ++total;
      CHECK(cand.n == n);
      CHECK(cand.s >= 1);

      // the recorded pair members reproduce s^2
      const u128 l1 = static_cast<u128>(cand.lhs1) * cand.lhs1;
      const u128 l2 = static_cast<u128>(cand.lhs2) * cand.lhs2;
      const u128 s2 = static_cast<u128>(cand.s) * cand.s;
      switch (cand.condition) {
        case SearchCondition::FaceSum:
        case SearchCondition::BodySum:
          CHECK(l1 + l2 == s2);
          break;
        default:
          CHECK(l1 - l2 == s2); // all difference rows store lhs1 >= lhs2
          break;
      }

      // quadruple identity over signed squares
      const i128 sum = cand.quad[0].signed_square() +
                       cand.quad[1].signed_square() +
                       cand.quad[2].signed_square();
      CHECK(sum == cand.quad[3].signed_square());

      // reduced candidates classify and pass full verification
      Cuboid c{CuboidKind::Body, cand.quad[0], cand.quad[1], cand.quad[2],
               cand.quad[3]};
      c = reduce_primitive(c);
      const auto kind = classify(c.x, c.y, c.z, c.d);
      REQUIRE(kind.has_value()); // a miss would be a perfect cuboid
      c.kind = *kind;
      CHECK(verify(canonicalize(c)));
    }
  }
  CHECK(total > 50);
}

TEST_CASE("emitted conditions use the positive-orientation row ids") {
  for (u64 n = 1; n <= 300; ++n) {
    for (const RawCandidate& cand : scan_edge(py_group(n))) {
      CHECK(cand.condition != SearchCondition::FaceDiffJI);
      CHECK(cand.condition != SearchCondition::EdgeDiffAj);
      CHECK(cand.condition != SearchCondition::EdgeNegAj);
    }
  }
}

TEST_CASE("condition table descriptions cover all eight rows") {
  for (SearchCondition c :
       {SearchCondition::FaceSum, SearchCondition::FaceDiffIJ,
        SearchCondition::FaceDiffJI, SearchCondition::EdgeDiffAi,
        SearchCondition::EdgeNegAi, SearchCondition::EdgeDiffAj,
        SearchCondition::EdgeNegAj, SearchCondition::BodySum}) {
    CHECK(std::string(condition_equation(c)).find("s^2") != std::string::npos);
    CHECK(std::string(condition_solution(c)).size() > 5);
  }
}
