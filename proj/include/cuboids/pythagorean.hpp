// Pythagorean group construction: for an edge n, the set of all positive
// integers m with m^2 + n^2 a perfect square. Every such m arises from a
// divisor d of n^2 (odd n) or twice a divisor of (n/2)^2 (even n) with
// d < n, via m = (n^2 - d^2) / (2d) and hypotenuse m + d.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cuboids/arith.hpp"

namespace cuboids {

// Largest edge the engine handles exactly. Entries satisfy a < A <= (n^2+1)/2,
// so with n <= 2^32-1 we get n^2 < 2^64 (fits u64), A < 2^63, every tested
// square A^2 < 2^126 (fits u128) and every pair sum, difference and signed
// radicand within a signed 128-bit integer. Larger edges would need arbitrary
// precision; py_group refuses them loudly rather than risk wraparound.
inline constexpr u64 kMaxEdge = 4294967295ull;

struct DivisorSet {
  u64 n = 0;
  std::vector<u64> divisors; // strictly ascending, each < n
  std::size_t count() const { return divisors.size(); }
};

struct PyEntry {
  u64 d = 0; // generating divisor
  u64 a = 0; // leg: a^2 + n^2 = A^2
  u64 A = 0; // hypotenuse: A = a + d
};

struct PyGroup {
  u64 n = 0;
  std::vector<PyEntry> entries; // ascending d, hence descending a and A
  std::size_t size() const { return entries.size(); }
};

// Trial division; returns (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

// The generating divisors of n: divisors of n^2 below n when n is odd,
// twice the divisors of (n/2)^2 below n when n is even. n itself is factored
// once and the divisors are synthesized with doubled exponents; n^2 is never
// factored directly. n = 1 or 2 yields the empty set.
DivisorSet divisor_set(u64 n);

// Throws std::overflow_error for n > kMaxEdge, std::invalid_argument for n = 0.
PyGroup py_group(u64 n);

} // namespace cuboids
