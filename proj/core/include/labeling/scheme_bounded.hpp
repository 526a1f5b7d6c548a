#ifndef LABELING_SCHEME_BOUNDED_HPP
#define LABELING_SCHEME_BOUNDED_HPP

#include <utility>
#include <vector>

#include "labeling/bitstring.hpp"
#include "labeling/graph.hpp"
#include "labeling/scheme_outerplanar.hpp"

namespace labeling {

/// Each original edge directed by an Eulerian circuit of the graph augmented
/// with a matching on its odd-degree vertices; out-degree <= ceil(delta/2).
struct Orientation {
  std::vector<std::vector<int>> out_sets;       // per-vertex heads, ascending
  std::vector<std::pair<int, int>> matching;    // augmenting edges, not labeled
};

Orientation euler_orient(const Graph& g);

/// Plain neighbor-list labels: vertex id plus ceil(delta/2) out-neighbor
/// slots, every field bit_width(n) wide. Decode needs only delta.
std::vector<BitString> encode_neighbor_list(const Graph& g);
bool decode_neighbor_list(int delta, const BitString& a, const BitString& b);

/// Edge-disjoint forests covering E(G); targets ceil(delta/2) forests via
/// exchange insertion, with one overflow forest allowed on cycle-tight
/// instances.
struct ForestDecomposition {
  std::vector<std::vector<std::pair<int, int>>> forests;
};

ForestDecomposition forest_decompose(const Graph& g);

/// Concatenation of one single-slot tree label per forest; block boundaries
/// are recovered from the total length and the block count alone.
struct ConcatResult {
  int forest_count = 0;
  SchemeConfig block_cfg;
  std::vector<BitString> labels;
};

ConcatResult encode_concat(const Graph& g);
bool decode_concat(const SchemeConfig& block_cfg, int forest_count, const BitString& a,
                   const BitString& b);

}  // namespace labeling

#endif
