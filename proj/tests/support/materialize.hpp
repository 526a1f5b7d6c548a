#ifndef TESTS_SUPPORT_MATERIALIZE_HPP
#define TESTS_SUPPORT_MATERIALIZE_HPP

// Debug-only materializer: builds the host graph explicitly (every cluster,
// every vertex id) so closed-form navigation can be cross-checked against
// plain enumeration. Usable up to a few thousand host vertices.
//
// Deliberately independent of the closed-form code paths: distances come from
// full root paths, neighbor sets from scanning all ids.

#include <algorithm>
#include <vector>

#include "labeling/universal.hpp"

namespace test_support {

struct MaterializedHost {
  const labeling::UniversalParams& p;
  std::vector<labeling::ClusterAddr> cluster_of;  // per id, 1-based ids
  std::vector<std::vector<int64_t>> neighbors;    // per id, ascending

  explicit MaterializedHost(const labeling::UniversalParams& params) : p(params) {
    cluster_of.assign(p.total_vertices + 1, {});
    for (int t = 1; t <= p.k_levels; ++t) {
      int64_t clusters = int64_t{1} << (t - 1);
      for (int64_t pos = 1; pos <= clusters; ++pos) {
        auto [lo, hi] = labeling::cluster_range(p, {t, pos});
        for (int64_t id = lo; id <= hi; ++id) cluster_of[id] = {t, pos};
      }
    }
    neighbors.assign(p.total_vertices + 1, {});
    for (int64_t v = 1; v <= p.total_vertices; ++v)
      for (int64_t u = 1; u <= p.total_vertices; ++u)
        if (u != v && tree_distance(cluster_of[v], cluster_of[u]) <= p.g)
          neighbors[v].push_back(u);
  }

  // Distance via explicit root paths; independent of cluster_distance().
  static int tree_distance(labeling::ClusterAddr a, labeling::ClusterAddr b) {
    auto path = [](labeling::ClusterAddr x) {
      std::vector<labeling::ClusterAddr> out = {x};
      while (x.t > 1) {
        x = labeling::parent_addr(x);
        out.push_back(x);
      }
      std::reverse(out.begin(), out.end());
      return out;
    };
    auto pa = path(a), pb = path(b);
    size_t common = 0;
    while (common < pa.size() && common < pb.size() && pa[common] == pb[common]) ++common;
    return static_cast<int>(pa.size() - common + pb.size() - common);
  }

  int64_t rank_of(int64_t v, int64_t u) const {
    const auto& nb = neighbors[v];
    auto it = std::lower_bound(nb.begin(), nb.end(), u);
    return (it - nb.begin()) + 1;
  }
};

}  // namespace test_support

#endif
