#include "cuboids/arith.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace cuboids {

namespace {

constexpr u64 square_residue_mask_64() {
  u64 m = 0;
  for (int i = 0; i < 64; ++i) m |= u64(1) << ((i * i) & 63);
  return m;
}

template <int M>
constexpr std::array<bool, M> square_residue_table() {
  std::array<bool, M> t{};
  for (int i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}

constexpr u64 kMask64 = square_residue_mask_64();
constexpr auto kQr63 = square_residue_table<63>();
constexpr auto kQr65 = square_residue_table<65>();
constexpr auto kQr11 = square_residue_table<11>();

constexpr u32 kFold = 63 * 65 * 11; // 45045
constexpr u64 kTwo64ModFold = static_cast<u64>((u128(1) << 64) % kFold); // 16

} // namespace

u64 isqrt_u128(u128 v) {
  if (v == 0) return 0;
  // Float estimate, then fix up to the exact floor. x86-64 long double has a
  // 64-bit mantissa, so the estimate is off by at most a few ulps; the loops
  // terminate quickly even on platforms where long double is only a double.
  long double e = sqrtl(static_cast<long double>(v));
  u64 r;
  if (e >= 18446744073709551615.0L) {
    r = std::numeric_limits<u64>::max();
  } else {
    r = static_cast<u64>(e);
  }
  while (r > 0 && static_cast<u128>(r) * r > v) --r;
  while (r != std::numeric_limits<u64>::max() &&
         static_cast<u128>(r + 1) * (r + 1) <= v)
    ++r;
  return r;
}

std::optional<u64> perfect_square_root(u128 v) {
  if (!((kMask64 >> static_cast<unsigned>(v & 63)) & 1)) return std::nullopt;
  u64 lo = static_cast<u64>(v);
  u64 hi = static_cast<u64>(v >> 64);
  u32 m = static_cast<u32>((lo % kFold + (hi % kFold) * kTwo64ModFold) % kFold);
  if (!kQr63[m % 63] || !kQr65[m % 65] || !kQr11[m % 11]) return std::nullopt;
  return perfect_square_root_unfiltered(v);
}

std::optional<u64> perfect_square_root_unfiltered(u128 v) {
  u64 r = isqrt_u128(v);
  if (static_cast<u128>(r) * r != v) return std::nullopt;
  return r;
}

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, 40 - pos);
}

std::string to_string_i128(i128 v) {
  if (v >= 0) return to_string_u128(static_cast<u128>(v));
  return "-" + to_string_u128(static_cast<u128>(0) - static_cast<u128>(v));
}

std::optional<u64> parse_u64(std::string_view s) {
  if (s.empty() || s.size() > 20) return std::nullopt;
  u64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    u64 digit = static_cast<u64>(c - '0');
    if (v > (std::numeric_limits<u64>::max() - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

std::optional<i128> parse_i128(std::string_view s) {
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (s.empty() || s.size() > 39) return std::nullopt;
  constexpr u128 kLimitPos = static_cast<u128>(std::numeric_limits<i128>::max());
  const u128 limit = neg ? kLimitPos + 1 : kLimitPos;
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    u128 digit = static_cast<u128>(c - '0');
    if (v > (limit - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  if (neg) return -static_cast<i128>(v - 1) - 1; // handles -2^127
  return static_cast<i128>(v);
}

} // namespace cuboids
