#include "labeling/universal.hpp"

#include <algorithm>
#include <cmath>

#include "labeling/errors.hpp"
#include "labeling/util.hpp"

namespace labeling {

namespace {

void check_addr(const UniversalParams& p, const ClusterAddr& a) {
  if (a.t < 1 || a.t > p.k_levels || a.pos < 1 || a.pos > (int64_t{1} << (a.t - 1)))
    throw Error("universal: cluster address out of range");
}

void check_id(const UniversalParams& p, int64_t id) {
  if (id < 1 || id > p.total_vertices) throw Error("universal: vertex id out of range");
}

// Visits node and all its descendants within `depth` extra levels.
void visit_subtree(const UniversalParams& p, const ClusterAddr& a, int depth,
                   const std::function<void(const ClusterAddr&)>& fn) {
  fn(a);
  if (depth == 0 || a.t >= p.k_levels) return;
  auto [l, r] = children_addr(a);
  visit_subtree(p, l, depth - 1, fn);
  visit_subtree(p, r, depth - 1, fn);
}

}  // namespace

ClusterAddr parent_addr(const ClusterAddr& a) {
  if (a.t < 2) throw Error("universal: root has no parent");
  return {a.t - 1, (a.pos + 1) / 2};
}

std::pair<ClusterAddr, ClusterAddr> children_addr(const ClusterAddr& a) {
  return {{a.t + 1, 2 * a.pos - 1}, {a.t + 1, 2 * a.pos}};
}

int64_t cluster_constant(int delta, Flavor flavor) {
  int64_t d = std::max(delta, 1);
  if (flavor == Flavor::H) return 4 * (ceil_log2(d) + 1) * (d + 2);
  return 2 * (d + 2);
}

int distance_radius(int delta) { return 2 * ceil_log2(std::max(delta, 2)) + 2; }

int color_count(int delta) { return ceil_log2(std::max(delta, 1)) + 1; }

UniversalParams UniversalParams::make(int n, int delta, Flavor flavor) {
  return make_with_constants(n, delta, flavor, cluster_constant(delta, flavor),
                             distance_radius(delta));
}

UniversalParams UniversalParams::make_with_constants(int n, int delta, Flavor flavor, int64_t c,
                                                     int g) {
  if (n < 1) throw Error("universal: n must be >= 1");
  if (c < 1 || g < 1) throw Error("universal: bad constants");
  UniversalParams p;
  p.n = n;
  p.delta = delta;
  p.flavor = flavor;
  p.c = c;
  p.g = g;
  p.k_levels = bits_for(n);
  p.N = (int64_t{1} << p.k_levels) - 1;

  int k = p.k_levels;
  p.level_size.assign(k + 1, 0);
  const long double logN = log2l(static_cast<long double>(p.N));
  for (int t = 1; t <= k; ++t) {
    long double raw;
    if (flavor == Flavor::H) {
      raw = static_cast<long double>(c) * (logN - t);
    } else {
      raw = static_cast<long double>(c) *
            sqrtl(static_cast<long double>(p.N) / static_cast<long double>(int64_t{1} << t));
    }
    int64_t size = raw <= 0 ? 0 : static_cast<int64_t>(ceill(raw));
    p.level_size[t] = std::max<int64_t>(1, size);
  }
  p.level_prefix.assign(k + 2, 0);
  for (int t = 1; t <= k; ++t)
    p.level_prefix[t + 1] = p.level_prefix[t] + (int64_t{1} << (t - 1)) * p.level_size[t];
  p.total_vertices = p.level_prefix[k + 1];

  // Neighbor counts are position-independent: the tree is complete, so the
  // multiset of levels within distance g of a cluster depends only on its
  // level.
  p.level_neighbor_count.assign(k + 1, 0);
  for (int t = 1; t <= k; ++t) {
    int64_t total = 0;
    for_each_nearby_cluster(p, {t, 1},
                            [&](const ClusterAddr& b) { total += p.level_size[b.t]; });
    p.level_neighbor_count[t] = total - 1;
  }
  p.neighbor_count_suffix_max.assign(k + 1, 0);
  for (int t = k; t >= 1; --t)
    p.neighbor_count_suffix_max[t] =
        std::max(p.level_neighbor_count[t], t == k ? int64_t{0} : p.neighbor_count_suffix_max[t + 1]);
  return p;
}

int64_t cluster_size(const UniversalParams& p, int t) {
  if (t < 1 || t > p.k_levels) throw Error("universal: level out of range");
  return p.level_size[t];
}

std::pair<int64_t, int64_t> cluster_range(const UniversalParams& p, const ClusterAddr& a) {
  check_addr(p, a);
  int64_t base = p.level_prefix[a.t] + (a.pos - 1) * p.level_size[a.t];
  return {base + 1, base + p.level_size[a.t]};
}

ClusterLocation id_to_cluster(const UniversalParams& p, int64_t id) {
  check_id(p, id);
  // Binary search over the closed-form per-level prefix sums.
  int lo = 1, hi = p.k_levels;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (id <= p.level_prefix[mid + 1])
      hi = mid;
    else
      lo = mid + 1;
  }
  int t = lo;
  int64_t off = id - p.level_prefix[t] - 1;
  return {{t, off / p.level_size[t] + 1}, off % p.level_size[t] + 1};
}

int cluster_distance(const ClusterAddr& a, const ClusterAddr& b, int cap) {
  ClusterAddr x = a, y = b;
  int dist = 0;
  while (x.t > y.t) {
    if (++dist > cap) return cap + 1;
    x = parent_addr(x);
  }
  while (y.t > x.t) {
    if (++dist > cap) return cap + 1;
    y = parent_addr(y);
  }
  while (!(x == y)) {
    dist += 2;
    if (dist > cap) return cap + 1;
    x = parent_addr(x);
    y = parent_addr(y);
  }
  return dist;
}

bool clusters_adjacent(const UniversalParams& p, const ClusterAddr& a, const ClusterAddr& b) {
  check_addr(p, a);
  check_addr(p, b);
  return cluster_distance(a, b, p.g) <= p.g;
}

void for_each_nearby_cluster(const UniversalParams& p, const ClusterAddr& a,
                             const std::function<void(const ClusterAddr&)>& fn) {
  check_addr(p, a);
  visit_subtree(p, a, p.g, fn);
  ClusterAddr cur = a;
  for (int up = 1; up <= p.g && cur.t > 1; ++up) {
    ClusterAddr par = parent_addr(cur);
    fn(par);
    int remaining = p.g - up - 1;
    if (remaining >= 0 && par.t < p.k_levels) {
      auto [l, r] = children_addr(par);
      const ClusterAddr& sibling = (l == cur) ? r : l;
      visit_subtree(p, sibling, remaining, fn);
    }
    cur = par;
  }
}

int64_t neighbor_count(const UniversalParams& p, const ClusterAddr& a) {
  check_addr(p, a);
  return p.level_neighbor_count[a.t];
}

int64_t edge_rank(const UniversalParams& p, int64_t v, int64_t u) {
  check_id(p, v);
  check_id(p, u);
  if (v == u) throw Error("edge_rank: identical vertices");
  ClusterAddr av = id_to_cluster(p, v).addr;
  ClusterAddr au = id_to_cluster(p, u).addr;
  if (cluster_distance(av, au, p.g) > p.g) throw Error("edge_rank: not host-graph neighbors");
  int64_t rank = 0;
  for_each_nearby_cluster(p, av, [&](const ClusterAddr& b) {
    auto [lo, hi] = cluster_range(p, b);
    if (lo <= u) rank += std::min(hi, u) - lo + 1;
  });
  if (v <= u) --rank;  // v itself is not its own neighbor
  return rank;
}

AlphaBeta alpha_beta(const UniversalParams& p, int t) {
  if (t < 1 || t > p.k_levels) throw Error("universal: level out of range");
  return {bits_for(p.level_prefix[t + 1]), bits_for(p.neighbor_count_suffix_max[t])};
}

}  // namespace labeling
