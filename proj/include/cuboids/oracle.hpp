// Brute-force reference implementations for the test suite. These share no
// search logic with the engine: partners come from a direct scan of every
// candidate leg (no divisor theory), squares are tested with an independent
// check, and cuboids are assembled from the defining equations of each kind
// rather than the condition table. Slow by design; keep the limits small.
#pragma once

#include <string>
#include <vector>

#include "cuboids/cuboid.hpp"

namespace cuboids::oracle {

struct OracleLimit {
  u64 max_edge = 0; // exhaustive loops stop at this smallest integer edge
};

// All m in 1..(n^2-1)/2 with m^2 + n^2 a perfect square, ascending, found by
// scanning every m. Practical for n up to a few thousand.
std::vector<u64> partners_bruteforce(u64 n);

// Every primitive cuboid whose smallest integer edge is at most
// limit.max_edge, canonicalized and sorted. Configurations in which all
// seven lengths come out rational (perfect cuboids) are appended to
// *perfect when given, and never returned as cuboids.
std::vector<Cuboid> cuboids_bruteforce(OracleLimit limit,
                                       std::vector<std::string>* perfect = nullptr);

} // namespace cuboids::oracle
