#include <vector>

#include "cuboids/pythagorean.hpp"
#include "doctest.h"

using namespace cuboids;

namespace {

// Reference divisor enumeration by trial division, no factorization.
std::vector<u64> naive_divisors(u64 n) {
  std::vector<u64> out;
  if (n % 2 == 1) {
    const u64 n2 = n * n;
    for (u64 d = 1; d < n; ++d)
      if (n2 % d == 0) out.push_back(d);
  } else {
    const u64 h = n / 2, h2 = h * h;
    for (u64 d = 2; d < n; d += 2)
      if (h2 % (d / 2) == 0) out.push_back(d);
  }
  return out;
}

} // namespace

TEST_CASE("divisor_set worked examples") {
  CHECK(divisor_set(44).divisors == std::vector<u64>{2, 4, 8, 22});
  CHECK(divisor_set(117).divisors == std::vector<u64>{1, 3, 9, 13, 27, 39, 81});
  CHECK(divisor_set(1).divisors.empty());
  CHECK(divisor_set(2).divisors.empty());
  CHECK(divisor_set(3).divisors == std::vector<u64>{1});
  CHECK(divisor_set(4).divisors == std::vector<u64>{2});
  CHECK_THROWS_AS(divisor_set(0), std::invalid_argument);
}

TEST_CASE("divisor_set matches naive enumeration up to 10^4") {
  for (u64 n = 1; n <= 10000; ++n) {
    const DivisorSet ds = divisor_set(n);
    REQUIRE(ds.n == n);
    REQUIRE(ds.divisors == naive_divisors(n));
  }
}

TEST_CASE("py_group worked examples") {
  auto alist = [](const PyGroup& g) {
    std::vector<u64> v;
    for (const auto& e : g.entries) v.push_back(e.a);
    return v;
  };
  auto Alist = [](const PyGroup& g) {
    std::vector<u64> v;
    for (const auto& e : g.entries) v.push_back(e.A);
    return v;
  };

  const PyGroup g44 = py_group(44);
  CHECK(alist(g44) == std::vector<u64>{483, 240, 117, 33});
  CHECK(Alist(g44) == std::vector<u64>{485, 244, 125, 55});

  const PyGroup g104 = py_group(104);
  CHECK(alist(g104) == std::vector<u64>{2703, 1350, 672, 330, 195, 153, 78});
  CHECK(Alist(g104) == std::vector<u64>{2705, 1354, 680, 346, 221, 185, 130});

  const PyGroup g117 = py_group(117);
  CHECK(alist(g117) == std::vector<u64>{6844, 2280, 756, 520, 240, 156, 44});
  CHECK(Alist(g117) == std::vector<u64>{6845, 2283, 765, 533, 267, 195, 125});

  const PyGroup g3 = py_group(3);
  CHECK(alist(g3) == std::vector<u64>{4});
  CHECK(Alist(g3) == std::vector<u64>{5});
}

TEST_CASE("py_group invariants for n up to 2000") {
  for (u64 n = 1; n <= 2000; ++n) {
    const PyGroup g = py_group(n);
    const u128 n2 = static_cast<u128>(n) * n;
    u64 prev_d = 0;
    u64 prev_a = 0, prev_A = 0;
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
      const PyEntry& e = g.entries[i];
      REQUIRE(e.d > prev_d);
      prev_d = e.d;
      // exactness of eq a = (n^2 - d^2) / 2d and the A = a + d shortcut
      REQUIRE((n2 - static_cast<u128>(e.d) * e.d) % (2 * e.d) == 0);
      REQUIRE(static_cast<u128>(e.a) ==
              (n2 - static_cast<u128>(e.d) * e.d) / (2 * e.d));
      REQUIRE(e.A == e.a + e.d);
      REQUIRE(e.a > 0);
      // a^2 + n^2 = A^2, equivalently A = (n^2 + d^2) / 2d
      REQUIRE(static_cast<u128>(e.a) * e.a + n2 ==
              static_cast<u128>(e.A) * e.A);
      REQUIRE((n2 + static_cast<u128>(e.d) * e.d) % (2 * e.d) == 0);
      REQUIRE(static_cast<u128>(e.A) ==
              (n2 + static_cast<u128>(e.d) * e.d) / (2 * e.d));
      if (i > 0) {
        REQUIRE(e.a < prev_a);
        REQUIRE(e.A < prev_A);
      }
      prev_a = e.a;
      prev_A = e.A;
    }
  }
}

TEST_CASE("py_group at the capacity bound and beyond") {
  CHECK_THROWS_AS(py_group(0), std::invalid_argument);
  CHECK_THROWS_AS(py_group(kMaxEdge + 1), std::overflow_error);

  // The largest accepted edge still has exact entries.
  const PyGroup g = py_group(kMaxEdge);
  REQUIRE(!g.entries.empty());
  const u128 n2 = static_cast<u128>(kMaxEdge) * kMaxEdge;
  for (const auto& e : g.entries) {
    REQUIRE(static_cast<u128>(e.a) * e.a + n2 == static_cast<u128>(e.A) * e.A);
  }
}
