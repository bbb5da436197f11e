// Shared test construction helpers.
#pragma once

#include "cuboids/cuboid.hpp"

namespace cuboids::testing {

inline Cuboid body(u64 x, u64 y, u64 z, i128 radicand) {
  return Cuboid{CuboidKind::Body, Side::integer(x), Side::integer(y),
                Side::integer(z), Side::sqrt_of(radicand)};
}

inline Cuboid edge(u64 x, u64 y, i128 radicand, u64 d) {
  return Cuboid{radicand < 0 ? CuboidKind::ComplexEdge : CuboidKind::RealEdge,
                Side::integer(x), Side::integer(y), Side::sqrt_of(radicand),
                Side::integer(d)};
}

inline Cuboid face(u64 x, u64 y, u64 z, u64 d) {
  return Cuboid{CuboidKind::Face, Side::integer(x), Side::integer(y),
                Side::integer(z), Side::integer(d)};
}

} // namespace cuboids::testing
