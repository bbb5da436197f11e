#include "cuboids/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cuboids::oracle {

namespace {

// Independent square test: mod-16 filter, double sqrt, exact fixup.
// Good for any u64 whose root stays below 2^32 (all oracle values do).
bool osquare(u64 v, u64* root = nullptr) {
  const u64 m = v & 15;
  if (m != 0 && m != 1 && m != 4 && m != 9) return false;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

u64 osqrt_exact(u64 v) {
  u64 r = 0;
  if (!osquare(v, &r))
    throw std::logic_error("oracle: expected a perfect square");
  return r;
}

// Keeps every oracle intermediate (squares, their sums) within u64 and the
// fixup loop overflow-free.
constexpr u64 kMaxOracleEdge = 65535;

std::string describe(u64 n, const std::string& what) {
  return "N=" + std::to_string(n) + ": " + what;
}

} // namespace

std::vector<u64> partners_bruteforce(u64 n) {
  if (n == 0 || n > kMaxOracleEdge)
    throw std::invalid_argument("partners_bruteforce: n out of oracle range");
  std::vector<u64> out;
  const u64 n2 = n * n;
  const u64 m_max = n2 >= 1 ? (n2 - 1) / 2 : 0;
  for (u64 m = 1; m <= m_max; ++m) {
    if (osquare(m * m + n2)) out.push_back(m);
  }
  return out;
}

std::vector<Cuboid> cuboids_bruteforce(OracleLimit limit,
                                       std::vector<std::string>* perfect) {
  if (limit.max_edge == 0 || limit.max_edge > kMaxOracleEdge)
    throw std::invalid_argument("cuboids_bruteforce: limit out of oracle range");

  std::vector<Cuboid> found;
  auto flag_perfect = [&](u64 n, const std::string& what) {
    if (perfect) perfect->push_back(describe(n, what));
  };

  for (u64 n = 1; n <= limit.max_edge; ++n) {
    const u64 n2 = n * n;
    const std::vector<u64> partners = partners_bruteforce(n);

    // Body and shared-edge face cuboids: both remaining edges p, q are
    // partners of n (their diagonals with n are rational by definition).
    // p^2 + q^2 square makes a body cuboid; non-square with an integer body
    // diagonal makes a face cuboid whose irrational diagonal is the p-q one.
    for (std::size_t i = 0; i < partners.size(); ++i) {
      const u64 p = partners[i];
      if (p <= n) continue;
      for (std::size_t j = i + 1; j < partners.size(); ++j) {
        const u64 q = partners[j];
        if (q <= n) continue;
        if (std::gcd(std::gcd(n, p), q) != 1) continue;
        const u64 pq = p * p + q * q;
        const u64 diag = n2 + pq;
        u64 droot = 0;
        if (osquare(pq)) {
          if (osquare(diag)) {
            flag_perfect(n, std::to_string(n) + "," + std::to_string(p) + "," +
                                std::to_string(q) + " with rational diagonal");
            continue;
          }
          Cuboid c;
          c.kind = CuboidKind::Body;
          c.x = Side::integer(n);
          c.y = Side::integer(p);
          c.z = Side::integer(q);
          c.d = Side::sqrt_of(static_cast<i128>(diag));
          found.push_back(canonicalize(c));
        } else if (osquare(diag, &droot)) {
          Cuboid c;
          c.kind = CuboidKind::Face;
          c.x = Side::integer(p);
          c.y = Side::integer(q);
          c.z = Side::integer(n); // n is adjacent to both rational diagonals
          c.d = Side::integer(droot);
          found.push_back(canonicalize(c));
        }
      }
    }

    // Face cuboids whose irrational diagonal touches n: the other edge of
    // that face is e with e^2 = c^2 - p^2 for partners p (the shared edge)
    // and c (the e-p diagonal; c is a partner because c^2 + n^2 is the
    // squared body diagonal).
    for (const u64 p : partners) {
      if (p <= n) continue;
      for (const u64 c : partners) {
        if (c <= p) continue;
        u64 e = 0;
        if (!osquare(c * c - p * p, &e)) continue;
        if (e < n || e == 0) continue; // n must stay the smallest edge
        if (osquare(e * e + n2)) {
          flag_perfect(n, std::to_string(n) + "," + std::to_string(e) + "," +
                              std::to_string(p) + " with all diagonals rational");
          continue;
        }
        if (std::gcd(std::gcd(n, e), p) != 1) continue;
        Cuboid cu;
        cu.kind = CuboidKind::Face;
        cu.x = Side::integer(std::min(n, e));
        cu.y = Side::integer(std::max(n, e));
        cu.z = Side::integer(p);
        cu.d = Side::integer(osqrt_exact(n2 + c * c));
        found.push_back(canonicalize(cu));
      }
    }

    // Edge cuboids (n, p, sqrt(r), d): the integer face forces p to be a
    // partner; the p-face diagonal squared is d^2 - n^2, so d runs over the
    // hypotenuses d = sqrt(m^2 + n^2) of the partners m, which fixes the
    // radicand r = m^2 - p^2. The n-face diagonal squared n^2 + r must then
    // be a square or the negation of one.
    for (const u64 p : partners) {
      if (p <= n) continue;
      for (const u64 m : partners) {
        if (m == p) continue;
        const u64 d = osqrt_exact(m * m + n2);
        if (std::gcd(std::gcd(n, p), d) != 1) continue;
        const i128 r = static_cast<i128>(m) * m - static_cast<i128>(p) * p;
        const i128 nface = static_cast<i128>(n2) + r;
        if (nface == 0) continue; // degenerate zero-length diagonal
        if (nface > 0 ? !osquare(static_cast<u64>(nface))
                      : !osquare(static_cast<u64>(-nface)))
          continue;
        Cuboid c;
        if (r > 0) {
          if (osquare(static_cast<u64>(r))) {
            flag_perfect(n, std::to_string(n) + "," + std::to_string(p) +
                                ",sqrt(" + to_string_i128(r) +
                                ") with rational edge");
            continue;
          }
          c.kind = CuboidKind::RealEdge;
        } else {
          c.kind = CuboidKind::ComplexEdge;
        }
        c.x = Side::integer(n);
        c.y = Side::integer(p);
        c.z = Side::sqrt_of(r);
        c.d = Side::integer(d);
        found.push_back(canonicalize(c));
      }
    }
  }

  std::sort(found.begin(), found.end(), cuboid_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

} // namespace cuboids::oracle
