// Pair scan over a Pythagorean group. For every unordered pair of entries
// the eight search conditions are tested; a satisfied condition yields a raw
// candidate whose quadruple is laid out exactly as the condition table says:
//
//   row  condition            solution (x, y, z, d)          type
//   1    A_i^2 + a_j^2 = s^2  a_i, a_j, N, s                 face
//   2    A_i^2 - A_j^2 = s^2  s, N, a_j, A_i                 face
//   3    A_j^2 - A_i^2 = s^2  s, N, a_i, A_j                 face
//   4    A_i^2 - a_j^2 = s^2  N, a_j, sqrt(s^2-N^2), A_i     edge
//   5    a_j^2 - A_i^2 = s^2  N, a_j, sqrt(-s^2-N^2), A_i    edge
//   6    A_j^2 - a_i^2 = s^2  N, a_i, sqrt(s^2-N^2), A_j     edge
//   7    a_i^2 - A_j^2 = s^2  N, a_i, sqrt(-s^2-N^2), A_j    edge
//   8    a_i^2 + a_j^2 = s^2  a_i, a_j, N, sqrt(s^2+N^2)     body
//
// Rows 3, 6 and 7 are rows 2, 4 and 5 with the pair roles swapped, so the
// scanner tests each asymmetric condition in both orientations but only
// where the left-hand side is positive (s is a positive integer), and labels
// hits with the primary row id. Row 1 is symmetric (A_i^2 + a_j^2 equals
// A_j^2 + a_i^2 because A^2 = a^2 + N^2), as is row 8.
#pragma once

#include <array>
#include <vector>

#include "cuboids/cuboid.hpp"
#include "cuboids/pythagorean.hpp"

namespace cuboids {

enum class SearchCondition {
  FaceSum,    // row 1
  FaceDiffIJ, // row 2
  FaceDiffJI, // row 3
  EdgeDiffAi, // row 4
  EdgeNegAi,  // row 5
  EdgeDiffAj, // row 6
  EdgeNegAj,  // row 7
  BodySum,    // row 8
};

// The algebraic test and solution shape of each table row, for reporting.
const char* condition_equation(SearchCondition c);
const char* condition_solution(SearchCondition c);

struct RawCandidate {
  SearchCondition condition{};
  u64 n = 0;            // the scanned edge N
  u64 lhs1 = 0, lhs2 = 0; // the two pair values whose squares were combined
  u64 s = 0;            // the square root satisfying the condition
  std::array<Side, 4> quad{}; // x, y, z, d per the solution column
};

struct ScanStats {
  u64 pairs = 0;
  u64 square_tests = 0;
  u64 candidates = 0;
};

// Evaluates all conditions over every unordered entry pair. Candidates may
// repeat across conditions and are not reduced; that is the caller's job.
std::vector<RawCandidate> scan_edge(const PyGroup& group,
                                    ScanStats* stats = nullptr);

} // namespace cuboids
