#ifndef LABELING_UNIVERSAL_HPP
#define LABELING_UNIVERSAL_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace labeling {

/// H: clusters of size ~ c*log2(N/2^t)  (trees, outerplanar graphs).
/// PL: clusters of size ~ c*sqrt(N/2^t) (planar graphs).
enum class Flavor { H, PL };

/// Address of a cluster: level t in [1, kLevels] (root level 1) and position
/// in [1, 2^(t-1)] within the level, left to right.
struct ClusterAddr {
  int t = 0;
  int64_t pos = 0;
  friend bool operator==(const ClusterAddr&, const ClusterAddr&) = default;
};

ClusterAddr parent_addr(const ClusterAddr& a);
std::pair<ClusterAddr, ClusterAddr> children_addr(const ClusterAddr& a);

/// All derived constants of the host graph, shared bit-exactly by encoder and
/// decoder: both sides rebuild identical tables from (n, delta, flavor).
/// The host graph is never materialized; every query is closed-form over the
/// per-level tables below.
struct UniversalParams {
  int n = 0;
  int delta = 0;
  Flavor flavor = Flavor::H;
  int k_levels = 0;    // min { s : 2^s - 1 >= n }
  int64_t N = 0;       // 2^k_levels - 1
  int64_t c = 0;       // cluster constant
  int g = 0;           // cluster-distance radius

  std::vector<int64_t> level_size;     // [1..k] cluster size per level
  std::vector<int64_t> level_prefix;   // [1..k+1] vertices on levels < t
  std::vector<int64_t> level_neighbor_count;       // [1..k]
  std::vector<int64_t> neighbor_count_suffix_max;  // [1..k] max over levels >= t
  int64_t total_vertices = 0;

  static UniversalParams make(int n, int delta, Flavor flavor);
  /// Explicit constants, for tests and sweeps.
  static UniversalParams make_with_constants(int n, int delta, Flavor flavor, int64_t c, int g);
};

/// The compiled constant tables; raised at build time if the embedder ever
/// overflows a cluster on the test corpus, never at run time.
int64_t cluster_constant(int delta, Flavor flavor);
int distance_radius(int delta);  // g(delta), clamped so delta = 1 behaves like 2
int color_count(int delta);      // k(delta) = ceil(log2 delta) + 1

int64_t cluster_size(const UniversalParams& p, int t);
std::pair<int64_t, int64_t> cluster_range(const UniversalParams& p, const ClusterAddr& a);

struct ClusterLocation {
  ClusterAddr addr;
  int64_t offset = 0;  // 1-based within the cluster
};
ClusterLocation id_to_cluster(const UniversalParams& p, int64_t id);

/// Distance in the level tree, capped at cap (returns cap + 1 when larger).
int cluster_distance(const ClusterAddr& a, const ClusterAddr& b, int cap);
bool clusters_adjacent(const UniversalParams& p, const ClusterAddr& a, const ClusterAddr& b);

/// Vertices of the host graph adjacent to any vertex of cluster a: the total
/// size of all clusters within distance g, minus the vertex itself.
int64_t neighbor_count(const UniversalParams& p, const ClusterAddr& a);

/// Rank of u among the host-graph neighbors of v in increasing id order,
/// 1-based. Requires v != u and their clusters within distance g.
int64_t edge_rank(const UniversalParams& p, int64_t v, int64_t u);

struct AlphaBeta {
  int alpha = 0;  // bits for a vertex id at level <= t
  int beta = 0;   // bits for an edge id at level >= t
};
AlphaBeta alpha_beta(const UniversalParams& p, int t);

/// Enumerates every cluster within distance g of a, exactly once.
void for_each_nearby_cluster(const UniversalParams& p, const ClusterAddr& a,
                             const std::function<void(const ClusterAddr&)>& fn);

}  // namespace labeling

#endif
