#include "cuboids/cuboid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuboids {

namespace {

// Gathers pointers to the integer slots of the quadruple.
template <typename C, typename S>
std::vector<S*> integer_slots(C& c) {
  std::vector<S*> out;
  for (S* s : {&c.x, &c.y, &c.z, &c.d})
    if (!s->radical) out.push_back(s);
  return out;
}

bool is_square_nonneg(i128 v) {
  return v >= 0 && perfect_square_root(static_cast<u128>(v)).has_value();
}

// Face-diagonal square over signed arithmetic: positive perfect square,
// negated perfect square, or neither. Zero counts as neither (a zero-length
// diagonal is degenerate).
enum class FaceState { PosSquare, NegSquare, NotSquare };

FaceState face_state(i128 v) {
  if (v > 0)
    return perfect_square_root(static_cast<u128>(v)) ? FaceState::PosSquare
                                                     : FaceState::NotSquare;
  if (v < 0)
    return perfect_square_root(static_cast<u128>(-v)) ? FaceState::NegSquare
                                                      : FaceState::NotSquare;
  return FaceState::NotSquare;
}

bool edge_slot_ok(const Side& s) {
  return !s.radical && s.value >= 1 &&
         s.value <= static_cast<i128>(kMaxEdgeLength);
}

} // namespace

char kind_letter(CuboidKind k) { return static_cast<char>(k); }

std::optional<CuboidKind> kind_from_letter(char c) {
  switch (c) {
    case 'B': return CuboidKind::Body;
    case 'e': return CuboidKind::ComplexEdge;
    case 'E': return CuboidKind::RealEdge;
    case 'F': return CuboidKind::Face;
    default: return std::nullopt;
  }
}

bool cuboid_less(const Cuboid& a, const Cuboid& b) {
  if (a.kind != b.kind) return kind_letter(a.kind) < kind_letter(b.kind);
  for (auto [sa, sb] : {std::pair{&a.x, &b.x}, {&a.y, &b.y}, {&a.z, &b.z},
                        {&a.d, &b.d}}) {
    if (sa->radical != sb->radical) return sb->radical;
    if (sa->value != sb->value) return sa->value < sb->value;
  }
  return false;
}

std::optional<CuboidKind> classify(const Side& x, const Side& y, const Side& z,
                                   const Side& d) {
  if (d.radical) {
    // Body candidate; a square diagonal radicand would be a perfect cuboid.
    if (d.value > 0 && is_square_nonneg(d.value)) return std::nullopt;
    return CuboidKind::Body;
  }
  if (z.radical) {
    if (z.value < 0) return CuboidKind::ComplexEdge;
    // Positive square radicand means the "irrational" edge is an integer and
    // all seven lengths are rational: a perfect cuboid.
    if (is_square_nonneg(z.value)) return std::nullopt;
    return CuboidKind::RealEdge;
  }
  // Face candidate: the x-y diagonal is the irrational one unless it is a
  // perfect square, in which case all diagonals are rational.
  if (is_square_nonneg(x.signed_square() + y.signed_square()))
    return std::nullopt;
  return CuboidKind::Face;
}

Cuboid reduce_primitive(Cuboid c) {
  auto ints = integer_slots<Cuboid, Side>(c);
  u64 g = 0;
  for (Side* s : ints) g = std::gcd(g, static_cast<u64>(s->value));
  if (g <= 1) return c;
  for (Side* s : ints) s->value /= static_cast<i128>(g);
  for (Side* s : {&c.x, &c.y, &c.z, &c.d}) {
    if (!s->radical) continue;
    const i128 g2 = static_cast<i128>(g) * static_cast<i128>(g);
    if (s->value % g2 != 0)
      throw std::logic_error("reduce_primitive: radicand " +
                             to_string_i128(s->value) +
                             " not divisible by gcd^2 = " + to_string_i128(g2));
    s->value /= g2;
  }
  return c;
}

Cuboid canonicalize(Cuboid c) {
  switch (c.kind) {
    case CuboidKind::Body: {
      std::array<i128, 3> e{c.x.value, c.y.value, c.z.value};
      std::sort(e.begin(), e.end());
      c.x.value = e[0];
      c.y.value = e[1];
      c.z.value = e[2];
      return c;
    }
    case CuboidKind::ComplexEdge:
    case CuboidKind::RealEdge: {
      if (c.y.value < c.x.value) std::swap(c.x.value, c.y.value);
      return c;
    }
    case CuboidKind::Face: {
      // The shared edge is the one adjacent to both rational face diagonals,
      // i.e. the edge not in the single non-square pair.
      std::array<i128, 3> e{c.x.value, c.y.value, c.z.value};
      for (int shared = 0; shared < 3; ++shared) {
        const i128 p = e[(shared + 1) % 3];
        const i128 q = e[(shared + 2) % 3];
        if (!is_square_nonneg(p * p + q * q)) {
          c.z.value = e[shared];
          c.x.value = std::min(p, q);
          c.y.value = std::max(p, q);
          return c;
        }
      }
      throw std::logic_error(
          "canonicalize: face cuboid with all diagonals rational");
    }
  }
  throw std::logic_error("canonicalize: bad kind");
}

bool verify(const Cuboid& c) {
  // Slot shape: radical position determined by the kind, integers positive
  // and within the exact-arithmetic bounds.
  const bool radical_in_d = c.kind == CuboidKind::Body;
  const bool radical_in_z =
      c.kind == CuboidKind::RealEdge || c.kind == CuboidKind::ComplexEdge;
  if (!edge_slot_ok(c.x) || !edge_slot_ok(c.y)) return false;
  if (radical_in_z != c.z.radical) return false;
  if (!radical_in_z && !edge_slot_ok(c.z)) return false;
  if (radical_in_d != c.d.radical) return false;
  if (!radical_in_d &&
      (c.d.radical || c.d.value < 1 ||
       c.d.value > static_cast<i128>(kMaxDiagonalLength)))
    return false;

  // Radicand sign and irrationality. A nonnegative perfect-square radicand
  // would make the stored "irrational" length rational (type letter wrong).
  for (const Side* s : {&c.z, &c.d}) {
    if (!s->radical) continue;
    if (s->value == 0) return false;
    if (s->value > 0 && is_square_nonneg(s->value)) return false;
  }
  if (c.kind == CuboidKind::ComplexEdge && c.z.value >= 0) return false;
  if (c.kind == CuboidKind::RealEdge && c.z.value <= 0) return false;
  if (c.kind == CuboidKind::Body && c.d.value <= 0) return false;

  // Quadruple identity over signed squares: x^2 + y^2 + z^2 = d^2. Split
  // into nonnegative magnitudes so nothing overflows the u128 accumulator.
  u128 lhs = 0, rhs = 0;
  for (const Side* s : {&c.x, &c.y, &c.z}) {
    const i128 sq = s->signed_square();
    if (sq >= 0)
      lhs += static_cast<u128>(sq);
    else
      rhs += static_cast<u128>(-sq);
  }
  const i128 dsq = c.d.signed_square();
  if (dsq >= 0)
    rhs += static_cast<u128>(dsq);
  else
    lhs += static_cast<u128>(-dsq);
  if (lhs != rhs) return false;

  // Face diagonals per kind.
  const i128 xx = c.x.signed_square();
  const i128 yy = c.y.signed_square();
  const i128 zz = c.z.signed_square();
  switch (c.kind) {
    case CuboidKind::Body:
      if (face_state(xx + yy) != FaceState::PosSquare) return false;
      if (face_state(xx + zz) != FaceState::PosSquare) return false;
      if (face_state(yy + zz) != FaceState::PosSquare) return false;
      break;
    case CuboidKind::RealEdge:
      if (face_state(xx + yy) != FaceState::PosSquare) return false;
      if (face_state(xx + zz) != FaceState::PosSquare) return false;
      if (face_state(yy + zz) != FaceState::PosSquare) return false;
      break;
    case CuboidKind::ComplexEdge: {
      if (face_state(xx + yy) != FaceState::PosSquare) return false;
      // Only the smaller edge's diagonal may be the negation of a square;
      // the larger edge's must be an ordinary positive square. (Quadruples
      // with both diagonals imaginary do exist numerically but are not
      // cuboids: three of the seven lengths would be non-real.)
      const i128 lo = std::min(xx, yy);
      const i128 hi = std::max(xx, yy);
      if (face_state(hi + zz) != FaceState::PosSquare) return false;
      if (face_state(lo + zz) == FaceState::NotSquare) return false;
      break;
    }
    case CuboidKind::Face:
      if (face_state(xx + zz) != FaceState::PosSquare) return false;
      if (face_state(yy + zz) != FaceState::PosSquare) return false;
      if (face_state(xx + yy) != FaceState::NotSquare) return false;
      break;
  }

  // Primitivity over the integer slots.
  const Cuboid& cc = c;
  u64 g = 0;
  for (const Side* s : integer_slots<const Cuboid, const Side>(cc))
    g = std::gcd(g, static_cast<u64>(s->value));
  return g == 1;
}

u64 sorted_side(const Cuboid& c) {
  i128 best = -1;
  for (const Side* s : {&c.x, &c.y, &c.z}) {
    if (s->radical) continue;
    if (best < 0 || s->value < best) best = s->value;
  }
  return static_cast<u64>(best);
}

} // namespace cuboids
