// Cuboid value type and its invariants. A cuboid is a typed quadruple
// (x, y, z, d): three edges and the body diagonal, with signed squares
// satisfying x^2 + y^2 + z^2 = d^2. Exactly one length is irrational and is
// stored as a radicand (sqrt of a signed integer):
//
//   B  body (Euler)   radical in d, all three face diagonals rational
//   E  real edge      radical in z with positive radicand
//   e  complex edge   radical in z with negative radicand
//   F  face           all four slots integers, one face diagonal irrational
#pragma once

#include <array>
#include <compare>
#include <optional>

#include "cuboids/arith.hpp"

namespace cuboids {

// Integer edge slots stay below 2^63 and the diagonal slot below
// floor(sqrt(2^127-1)), so that squares and pairwise sums of squares fit a
// signed 128-bit integer. Everything the scan can produce for edges up to
// kMaxEdge is far inside these bounds; they matter only for parsed input.
inline constexpr u64 kMaxEdgeLength = (u64(1) << 63) - 1;
inline constexpr u64 kMaxDiagonalLength = 13043817825332782212ull;

enum class CuboidKind : char {
  Body = 'B',
  ComplexEdge = 'e',
  RealEdge = 'E',
  Face = 'F',
};

// One slot of the quadruple: a positive integer length, or an irrational
// length sqrt(value) with a signed, nonzero radicand.
struct Side {
  i128 value = 0;
  bool radical = false;

  static Side integer(u64 v) { return Side{static_cast<i128>(v), false}; }
  static Side sqrt_of(i128 radicand) { return Side{radicand, true}; }

  // The signed square of the length: value^2 for integers, the radicand
  // itself for radicals. Callers keep integer slots within the bounds above.
  i128 signed_square() const { return radical ? value : value * value; }

  bool operator==(const Side&) const = default;
};

struct Cuboid {
  CuboidKind kind = CuboidKind::Body;
  Side x, y, z, d;

  bool operator==(const Cuboid&) const = default;
};

char kind_letter(CuboidKind k);
std::optional<CuboidKind> kind_from_letter(char c);

// Total order on (kind, x, y, z, d) slot values; used for deduplication.
bool cuboid_less(const Cuboid& a, const Cuboid& b);

// Classifies a quadruple whose radical slot (if any) is already in the
// position the kind implies: radical d -> body, radical z -> edge, none ->
// face. Returns nullopt when every length would be rational -- that would be
// a perfect cuboid and must be escalated, never filed under a type letter.
std::optional<CuboidKind> classify(const Side& x, const Side& y, const Side& z,
                                   const Side& d);

// Divides the integer slots by their gcd and the radicand by its square.
// Throws std::logic_error if the radicand is not divisible by gcd^2 (cannot
// happen for quadruples satisfying the defining equations).
Cuboid reduce_primitive(Cuboid c);

// Canonical slot order for a primitive, valid cuboid:
//   body        integer edges ascending in (x, y, z), radical in d
//   edge (e/E)  integer edges ascending in (x, y), radical in z
//   face        the edge shared by both rational face diagonals in z,
//               remaining edges ascending in (x, y)
// Idempotent, and invariant under permutations of the integer edges.
Cuboid canonicalize(Cuboid c);

// True iff every invariant holds: slot bounds, radical placement and sign
// matching the kind, the quadruple identity over signed squares, the
// per-kind face-diagonal conditions, non-square radicands and primitivity.
bool verify(const Cuboid& c);

// The smallest integer edge (diagonal excluded): the table's sort key "ss".
u64 sorted_side(const Cuboid& c);

} // namespace cuboids
