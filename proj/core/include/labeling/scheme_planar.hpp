#ifndef LABELING_SCHEME_PLANAR_HPP
#define LABELING_SCHEME_PLANAR_HPP

#include <vector>

#include "labeling/bitstring.hpp"
#include "labeling/embed.hpp"
#include "labeling/graph.hpp"
#include "labeling/universal.hpp"

namespace labeling {

/// Label layout over the sqrt-cluster host graph. Unlike the outerplanar
/// scheme, labels are not padded to a uniform length: the fixed-width level
/// field read first makes every label self-describing, and uniform padding
/// would destroy the average-size behavior.
struct PlanarScheme {
  int delta = 1;
  int slots = 1;  // ceil(delta/2), one per outgoing Euler-orientation edge
  int level_width = 0;
  UniversalParams params;
  std::vector<int> id_width;    // [1..k] per level
  std::vector<int> slot_width;  // [1..k] per level

  static PlanarScheme make(int n, int delta);
  int label_bits(int level) const {
    return level_width + id_width[level] + slots * slot_width[level];
  }
};

struct PlanarEncodeResult {
  PlanarScheme scheme;
  Embedding embedding;
  std::vector<BitString> labels;
};

PlanarEncodeResult encode_planar(const Graph& g);

bool decode_planar(const PlanarScheme& scheme, const BitString& a, const BitString& b);

struct SizeReport {
  int max_bits = 0;
  double mean_bits = 0;
};

SizeReport size_report(const std::vector<BitString>& labels);

}  // namespace labeling

#endif
