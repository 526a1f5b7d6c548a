#ifndef LABELING_UTIL_HPP
#define LABELING_UTIL_HPP

#include <bit>
#include <cstdint>

namespace labeling {

// Bits needed to store any value in [0, x]; 0 when x <= 0.
inline int bits_for(long long x) {
  if (x <= 0) return 0;
  return std::bit_width(static_cast<unsigned long long>(x));
}

// ceil(log2(x)) for x >= 1.
inline int ceil_log2(long long x) { return bits_for(x - 1); }

// Deterministic bounded draw; the slight modulo bias is irrelevant for
// test-corpus generation.
template <class Rng>
uint64_t draw_below(Rng& rng, uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace labeling

#endif
