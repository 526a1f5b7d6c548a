#ifndef TESTS_SUPPORT_CORPORA_HPP
#define TESTS_SUPPORT_CORPORA_HPP

// Shared helpers for oracle-equivalence sweeps.

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "labeling/graph.hpp"

namespace test_support {

// Compares a decoder against the brute-force oracle: every pair when
// n <= exhaustive_cap, otherwise `samples` seeded random pairs.
// Returns the number of mismatches.
inline int64_t oracle_mismatches(const labeling::Graph& g,
                                 const std::function<bool(int, int)>& decode,
                                 int exhaustive_cap = 512, int64_t samples = 100000,
                                 uint64_t seed = 1) {
  int64_t bad = 0;
  if (g.n <= exhaustive_cap) {
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (decode(u, v) != labeling::oracle_adjacent(g, u, v)) ++bad;
  } else {
    std::mt19937_64 rng(seed);
    for (int64_t i = 0; i < samples; ++i) {
      int u = static_cast<int>(rng() % g.n);
      int v = static_cast<int>(rng() % g.n);
      if (u == v) continue;
      if (decode(u, v) != labeling::oracle_adjacent(g, u, v)) ++bad;
    }
  }
  return bad;
}

}  // namespace test_support

#endif
