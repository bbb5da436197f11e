#include "cuboids/pythagorean.hpp"

#include <algorithm>
#include <cassert>

namespace cuboids {

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> factors;
  for (u64 p : {u64(2), u64(3)}) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  // 6k +- 1 wheel
  for (u64 p = 5; p * p <= n; p += (p % 6 == 5) ? 2 : 4) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

DivisorSet divisor_set(u64 n) {
  if (n == 0) throw std::invalid_argument("divisor_set: n must be positive");
  // Odd n: divisors of n^2 below n. Even n: 2e for divisors e of (n/2)^2
  // below n/2. Either way: factor base once, double the exponents, and
  // prune partial products at the cap (a partial product already at the cap
  // can only grow, so pruning loses nothing).
  const u64 base = (n % 2 == 0) ? n / 2 : n;
  const u64 cap = base;
  std::vector<u64> divs;
  if (cap > 1) {
    divs.push_back(1);
    for (const auto& [p, e] : factorize(base)) {
      const std::size_t before = divs.size();
      u128 pk = 1;
      for (unsigned k = 0; k < 2 * e; ++k) {
        pk *= p;
        if (pk >= cap) break;
        for (std::size_t i = 0; i < before; ++i) {
          u128 d = divs[i] * pk;
          if (d < cap) divs.push_back(static_cast<u64>(d));
        }
      }
    }
    std::sort(divs.begin(), divs.end());
  }
  if (n % 2 == 0)
    for (u64& d : divs) d *= 2;
  return DivisorSet{n, std::move(divs)};
}

PyGroup py_group(u64 n) {
  if (n == 0) throw std::invalid_argument("py_group: n must be positive");
  if (n > kMaxEdge)
    throw std::overflow_error("py_group: edge " + std::to_string(n) +
                              " exceeds the exact 128-bit capacity (max " +
                              std::to_string(kMaxEdge) + ")");
  DivisorSet ds = divisor_set(n);
  PyGroup g;
  g.n = n;
  g.entries.reserve(ds.divisors.size());
  const u64 n2 = n * n; // n <= 2^32-1, so n^2 fits u64
  for (u64 d : ds.divisors) {
    assert((n2 - d * d) % (2 * d) == 0);
    const u64 a = (n2 - d * d) / (2 * d);
    g.entries.push_back(PyEntry{d, a, a + d});
  }
  return g;
}

} // namespace cuboids
