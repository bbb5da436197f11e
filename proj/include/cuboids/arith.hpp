// Exact wide-integer arithmetic: 128-bit helpers, integer square roots and
// the perfect-square test used by every "= s^2" condition in the scan.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cuboids {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// floor(sqrt(v)), exact over the whole unsigned 128-bit range.
u64 isqrt_u128(u128 v);

// Returns r with r*r == v when v is a perfect square, nullopt otherwise.
// A quadratic-residue prefilter (mod 64, then mod 63/65/11 via one fold
// modulo 45045) rejects about 99% of non-squares before the square root.
std::optional<u64> perfect_square_root(u128 v);

// Same test with the prefilter bypassed. Only used to demonstrate that the
// prefilter never changes the outcome; not for production paths.
std::optional<u64> perfect_square_root_unfiltered(u128 v);

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

// Strict decimal parses: the whole string must be one number, no sign for
// u64, optional leading '-' for i128. nullopt on malformed input/overflow.
std::optional<u64> parse_u64(std::string_view s);
std::optional<i128> parse_i128(std::string_view s);

} // namespace cuboids
