#include <algorithm>

#include "cuboids/oracle.hpp"
#include "cuboids/pythagorean.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuboids;
using namespace cuboids::testing;

TEST_CASE("partners_bruteforce examples") {
  CHECK(oracle::partners_bruteforce(44) ==
        std::vector<u64>{33, 117, 240, 483});
  CHECK(oracle::partners_bruteforce(3) == std::vector<u64>{4});
  CHECK(oracle::partners_bruteforce(2).empty());
  CHECK(oracle::partners_bruteforce(1).empty());
  CHECK_THROWS_AS(oracle::partners_bruteforce(0), std::invalid_argument);
}

TEST_CASE("partners_bruteforce equals the ascending a-list (small n)") {
  for (u64 n = 1; n <= 300; ++n) {
    std::vector<u64> alist;
    for (const auto& e : py_group(n).entries) alist.push_back(e.a);
    std::sort(alist.begin(), alist.end());
    REQUIRE(oracle::partners_bruteforce(n) == alist);
  }
}

TEST_CASE("cuboids_bruteforce examples") {
  std::vector<std::string> perfect;

  const auto at44 = oracle::cuboids_bruteforce({44}, &perfect);
  REQUIRE(at44.size() == 1);
  CHECK(at44[0] == body(44, 117, 240, 73225));

  CHECK(oracle::cuboids_bruteforce({43}, &perfect).empty());

  const auto at124 = oracle::cuboids_bruteforce({124}, &perfect);
  std::vector<Cuboid> expected{
      body(44, 117, 240, 73225),      edge(60, 63, -3344, 65),
      body(85, 132, 720, 543049),     face(153, 672, 104, 697),
      edge(108, 725, -426400, 333),   face(520, 756, 117, 925),
      edge(124, 957, 13852800, 3845),
  };
  std::sort(expected.begin(), expected.end(), cuboid_less);
  CHECK(at124 == expected);

  CHECK(perfect.empty());
}
