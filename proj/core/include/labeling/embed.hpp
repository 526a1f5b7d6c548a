#ifndef LABELING_EMBED_HPP
#define LABELING_EMBED_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "labeling/graph.hpp"
#include "labeling/universal.hpp"

namespace labeling {

/// Total coloring of a job's vertex set; color values in [1, k_colors].
struct Coloring {
  std::vector<int> color_of;  // aligned with the vertex list handed to bisect
  int k_colors = 1;
};

struct BisectionResult {
  std::vector<int> separator;
  std::vector<int> side_a;
  std::vector<int> side_b;
};

/// Separator budget per bisect call. Logarithmic for trees and outerplanar
/// graphs, sqrt-scale for planar ones (BFS-layer separators).
int64_t bisector_budget(Family family, int64_t m, int k_colors);

/// Splits `verts` into separator + two sides with no crossing edge and every
/// color class balanced within +-1. `outer_pos` maps vertex -> position in
/// the outer-cycle order and is required for outerplanar inputs.
BisectionResult bisect(const Graph& g, const std::vector<int>& verts, const Coloring& coloring,
                       Family family, const std::vector<int>* outer_pos = nullptr);

struct Embedding {
  std::vector<int64_t> phi;                            // vertex -> host id, 1-based
  std::vector<int> level_of;                           // level of phi(v)
  std::unordered_map<int64_t, int64_t> cluster_usage;  // node index -> occupancy
};

struct LevelOccupancy {
  int level = 0;
  int64_t clusters_used = 0;
  int64_t max_used = 0;
  int64_t capacity = 0;
  int64_t stored = 0;
};

/// Injective, edge-preserving, capacity-respecting map into the host graph.
/// Throws CapacityError with diagnostics when a cluster overflows.
Embedding embed(const Graph& g, const UniversalParams& p, Family family);

std::vector<LevelOccupancy> occupancy_by_level(const Embedding& e, const UniversalParams& p);

}  // namespace labeling

#endif
