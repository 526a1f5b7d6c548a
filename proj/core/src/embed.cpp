#include "labeling/embed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "labeling/errors.hpp"
#include "labeling/util.hpp"

namespace labeling {

namespace {

// Membership scratch shared across bisection rounds; values compare against a
// round stamp so clearing is O(1).
struct Scratch {
  std::vector<int> stamp;
  std::vector<int> value;
  int round = 0;

  explicit Scratch(int n) : stamp(n, -1), value(n, 0) {}
  void next() { ++round; }
  void set(int v, int x) {
    stamp[v] = round;
    value[v] = x;
  }
  bool has(int v) const { return stamp[v] == round; }
  int get(int v) const { return has(v) ? value[v] : 0; }
};

std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& verts,
                                         Scratch& in_set) {
  in_set.next();
  for (int v : verts) in_set.set(v, 1);
  std::vector<std::vector<int>> comps;
  std::vector<int> order = verts;
  std::sort(order.begin(), order.end());
  // local visited flags keyed by vertex id
  static thread_local std::vector<int> seen;
  static thread_local int seen_round = 0;
  if (seen.size() < static_cast<size_t>(g.n)) seen.assign(g.n, 0);
  ++seen_round;
  for (int s : order) {
    if (seen[s] == seen_round) continue;
    std::vector<int> comp;
    std::vector<int> stack = {s};
    seen[s] = seen_round;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (in_set.has(u) && seen[u] != seen_round) {
          seen[u] = seen_round;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Centroid of a connected induced tree component.
int tree_centroid(const Graph& g, const std::vector<int>& comp, Scratch& in_set) {
  in_set.next();
  for (size_t i = 0; i < comp.size(); ++i) in_set.set(comp[i], static_cast<int>(i));
  int m = static_cast<int>(comp.size());
  std::vector<int> order, parent(m, -1), size(m, 1);
  order.reserve(m);
  std::vector<int> stack = {0};
  std::vector<char> visited(m, 0);
  visited[0] = 1;
  while (!stack.empty()) {
    int li = stack.back();
    stack.pop_back();
    order.push_back(li);
    for (int u : g.adj[comp[li]]) {
      if (!in_set.has(u)) continue;
      int lu = in_set.get(u);
      if (!visited[lu]) {
        visited[lu] = 1;
        parent[lu] = li;
        stack.push_back(lu);
      }
    }
  }
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  int best = -1, best_weight = m + 1;
  for (int li = 0; li < m; ++li) {
    int heaviest = m - size[li];
    for (int u : g.adj[comp[li]]) {
      if (!in_set.has(u)) continue;
      int lu = in_set.get(u);
      if (parent[lu] == li) heaviest = std::max(heaviest, size[lu]);
    }
    if (heaviest < best_weight || (heaviest == best_weight && comp[li] < comp[best])) {
      best_weight = heaviest;
      best = li;
    }
  }
  return comp[best];
}

// Chord split for an outerplanar component: remove the two endpoints of the
// chord whose arcs are most balanced. Edges of the component never cross, so
// no edge joins the two open arcs of a chord.
std::vector<int> split_outerplanar(const Graph& g, const std::vector<int>& comp,
                                   const std::vector<int>& outer_pos, Scratch& in_set) {
  int m = static_cast<int>(comp.size());
  std::vector<int> by_pos = comp;
  std::sort(by_pos.begin(), by_pos.end(),
            [&](int a, int b) { return outer_pos[a] < outer_pos[b]; });
  in_set.next();
  for (int i = 0; i < m; ++i) in_set.set(by_pos[i], i);
  int edge_count = 0;
  int best_u = -1, best_v = -1;
  int64_t best_span = m + 1;
  for (int v : comp) {
    for (int u : g.adj[v]) {
      if (!in_set.has(u) || u < v) continue;
      ++edge_count;
      int iu = in_set.get(u), iv = in_set.get(v);
      int lo = std::min(iu, iv), hi = std::max(iu, iv);
      int inner = hi - lo - 1;
      int outer = m - 2 - inner;
      if (inner == 0 || outer == 0) continue;  // hull edge, splits nothing
      int64_t span = std::max(inner, outer);
      if (span < best_span) {
        best_span = span;
        best_u = std::min(u, v);
        best_v = std::max(u, v);
      }
    }
  }
  if (best_u >= 0) return {best_u, best_v};
  if (edge_count == m - 1) return {tree_centroid(g, comp, in_set)};
  // Chordless cycle: cut at two near-opposite positions.
  return {std::min(by_pos[0], by_pos[m / 2]), std::max(by_pos[0], by_pos[m / 2])};
}

// BFS-layer split for a planar component.
std::vector<int> split_planar(const Graph& g, const std::vector<int>& comp, Scratch& in_set) {
  int m = static_cast<int>(comp.size());
  in_set.next();
  for (int v : comp) in_set.set(v, 1);
  std::vector<std::vector<int>> layers;
  static thread_local std::vector<int> depth;
  if (depth.size() < static_cast<size_t>(g.n)) depth.assign(g.n, -1);
  for (int v : comp) depth[v] = -1;
  std::vector<int> frontier = {comp[0]};
  depth[comp[0]] = 0;
  while (!frontier.empty()) {
    layers.push_back(frontier);
    std::vector<int> next;
    for (int v : frontier)
      for (int u : g.adj[v])
        if (in_set.has(u) && depth[u] < 0) {
          depth[u] = static_cast<int>(layers.size());
          next.push_back(u);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  int64_t limit = static_cast<int64_t>(std::ceil(std::sqrt(2.0 * m))) + 1;
  int64_t before = 0;
  int best = -1;
  int64_t best_imbalance = m + 1;
  int64_t thinnest = -1;
  for (size_t j = 0; j < layers.size(); ++j) {
    int64_t inside = before;
    int64_t outside = m - before - static_cast<int64_t>(layers[j].size());
    if (static_cast<int64_t>(layers[j].size()) <= limit) {
      int64_t imb = std::llabs(inside - outside);
      if (imb < best_imbalance) {
        best_imbalance = imb;
        best = static_cast<int>(j);
      }
    }
    if (thinnest < 0 || layers[j].size() < layers[thinnest].size()) thinnest = j;
    before += static_cast<int64_t>(layers[j].size());
  }
  if (best < 0) best = static_cast<int>(thinnest);
  return layers[best];
}

std::vector<int> split_component(const Graph& g, const std::vector<int>& comp, Family family,
                                 const std::vector<int>* outer_pos, Scratch& in_set) {
  if (comp.size() == 1) return {comp[0]};
  switch (family) {
    case Family::tree:
      return {tree_centroid(g, comp, in_set)};
    case Family::outerplanar:
      return split_outerplanar(g, comp, *outer_pos, in_set);
    case Family::planar:
      return split_planar(g, comp, in_set);
    default:
      throw Error("bisect: unsupported family");
  }
}

}  // namespace

int64_t bisector_budget(Family family, int64_t m, int k_colors) {
  if (family == Family::planar)
    return 4 * k_colors * (static_cast<int64_t>(std::ceil(std::sqrt(2.0 * m))) + bits_for(m) + 1);
  int64_t cb = family == Family::outerplanar ? 8 : 4;
  return cb * k_colors * (bits_for(m) + 1);
}

BisectionResult bisect(const Graph& g, const std::vector<int>& verts, const Coloring& coloring,
                       Family family, const std::vector<int>* outer_pos) {
  if (coloring.color_of.size() != verts.size()) throw Error("bisect: coloring not total");
  if (family == Family::outerplanar && outer_pos == nullptr)
    throw Error("bisect: outerplanar bisection needs the outer-cycle order");
  const int kc = std::max(coloring.k_colors, 1);
  const int64_t m = static_cast<int64_t>(verts.size());
  const int64_t budget = bisector_budget(family, m, kc);

  Scratch scratch(g.n);
  static thread_local std::vector<int> color;
  if (color.size() < static_cast<size_t>(g.n)) color.assign(g.n, 1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int c = coloring.color_of[i];
    if (c < 1 || c > kc) throw Error("bisect: color out of range");
    color[verts[i]] = c;
  }

  std::vector<int> separator;
  std::vector<int> working = verts;

  while (true) {
    auto comps = components(g, working, scratch);
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.front() < b.front();
    });
    std::vector<int64_t> cnt_a(kc + 1, 0), cnt_b(kc + 1, 0);
    int64_t tot_a = 0, tot_b = 0;
    std::vector<char> to_a(comps.size(), 0);
    std::vector<int64_t> comp_cnt(kc + 1, 0);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      std::fill(comp_cnt.begin(), comp_cnt.end(), 0);
      for (int v : comps[ci]) ++comp_cnt[color[v]];
      int64_t score_a = 0, score_b = 0;
      for (int c = 1; c <= kc; ++c) {
        score_a += std::llabs((cnt_a[c] + comp_cnt[c]) - cnt_b[c]);
        score_b += std::llabs(cnt_a[c] - (cnt_b[c] + comp_cnt[c]));
      }
      bool take_a = score_a < score_b ||
                    (score_a == score_b &&
                     std::llabs(tot_a + static_cast<int64_t>(comps[ci].size()) - tot_b) <=
                         std::llabs(tot_a - (tot_b + static_cast<int64_t>(comps[ci].size()))));
      if (take_a) {
        to_a[ci] = 1;
        tot_a += static_cast<int64_t>(comps[ci].size());
        for (int c = 1; c <= kc; ++c) cnt_a[c] += comp_cnt[c];
      } else {
        tot_b += static_cast<int64_t>(comps[ci].size());
        for (int c = 1; c <= kc; ++c) cnt_b[c] += comp_cnt[c];
      }
    }
    int64_t excess = 0;
    int worst_color = 0, worst_diff = 0;
    for (int c = 1; c <= kc; ++c) {
      int64_t d = std::llabs(cnt_a[c] - cnt_b[c]);
      if (d > 1) excess += d - 1;
      if (d > worst_diff) {
        worst_diff = static_cast<int>(d);
        worst_color = c;
      }
    }
    size_t largest_splittable = comps.size();
    if (excess > kc) {
      // Prefer splitting a component that actually carries the worst color.
      int64_t best_key = -1;
      for (size_t ci = 0; ci < comps.size(); ++ci) {
        if (comps[ci].size() < 2) continue;
        int64_t carried = 0;
        for (int v : comps[ci])
          if (color[v] == worst_color) ++carried;
        int64_t key = carried * (static_cast<int64_t>(g.n) + 1) + static_cast<int64_t>(comps[ci].size());
        if (key > best_key) {
          best_key = key;
          largest_splittable = ci;
        }
      }
    }
    if (excess <= kc || largest_splittable == comps.size()) {
      // Assemble sides, then absorb per-color leftovers into the separator.
      BisectionResult r;
      r.separator = separator;
      for (size_t ci = 0; ci < comps.size(); ++ci) {
        auto& side = to_a[ci] ? r.side_a : r.side_b;
        side.insert(side.end(), comps[ci].begin(), comps[ci].end());
      }
      std::sort(r.side_a.begin(), r.side_a.end());
      std::sort(r.side_b.begin(), r.side_b.end());
      for (int c = 1; c <= kc; ++c) {
        int64_t d = cnt_a[c] - cnt_b[c];
        auto& heavy = d > 0 ? r.side_a : r.side_b;
        int64_t need = std::llabs(d) - 1;
        for (size_t i = 0; i < heavy.size() && need > 0;) {
          if (color[heavy[i]] == c) {
            r.separator.push_back(heavy[i]);
            heavy.erase(heavy.begin() + static_cast<long>(i));
            --need;
          } else {
            ++i;
          }
        }
      }
      std::sort(r.separator.begin(), r.separator.end());
      if (static_cast<int64_t>(r.separator.size()) > budget) {
        std::ostringstream msg;
        msg << "bisect: separator budget exceeded (" << r.separator.size() << " > " << budget
            << ", m=" << m << ", family=" << family_name(family) << ")";
        throw CapacityError(msg.str());
      }
      return r;
    }
    auto extracted = split_component(g, comps[largest_splittable], family, outer_pos, scratch);
    scratch.next();
    for (int v : extracted) scratch.set(v, 1);
    separator.insert(separator.end(), extracted.begin(), extracted.end());
    std::vector<int> next_working;
    next_working.reserve(working.size());
    for (int v : working)
      if (!scratch.has(v)) next_working.push_back(v);
    working = std::move(next_working);
    if (static_cast<int64_t>(separator.size()) > budget) {
      std::ostringstream msg;
      msg << "bisect: separator budget exceeded (" << separator.size() << " > " << budget
          << ", m=" << m << ", family=" << family_name(family) << ")";
      throw CapacityError(msg.str());
    }
  }
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& g, const UniversalParams& p, Family family)
      : g_(g), p_(p), family_(family), mark_(g.n) {
    if (family == Family::outerplanar) {
      outer_pos_.assign(g.n, 0);
      std::vector<int> order = derive_outer_order(g);
      for (int i = 0; i < g.n; ++i) outer_pos_[order[i]] = i;
    }
    k_colors_ = color_count(std::max(p.delta, 1));
    result_.phi.assign(g.n, 0);
    result_.level_of.assign(g.n, 0);
  }

  Embedding run() {
    std::vector<int> all(g_.n);
    for (int i = 0; i < g_.n; ++i) all[i] = i;
    process(1, 1, std::move(all), {});
    return std::move(result_);
  }

 private:
  void assign(int t, int64_t pos, const std::vector<int>& verts) {
    auto [lo, hi] = cluster_range(p_, {t, pos});
    int64_t node = (int64_t{1} << (t - 1)) + pos - 1;
    int64_t& used = result_.cluster_usage[node];
    for (int v : verts) {
      if (lo + used > hi) overflow(t, pos, verts.size());
      result_.phi[v] = lo + used;
      result_.level_of[v] = t;
      ++used;
    }
  }

  [[noreturn]] void overflow(int t, int64_t pos, size_t attempted) {
    std::ostringstream msg;
    msg << "embed: cluster overflow at level " << t << " pos " << pos << " (capacity "
        << cluster_size(p_, t) << ", adding " << attempted << ", n=" << g_.n
        << ", delta=" << p_.delta << ")";
    throw CapacityError(msg.str());
  }

  // frames[d-1] points at the set stored d levels up.
  using Frames = std::vector<const std::vector<int>*>;

  void process(int t, int64_t pos, std::vector<int> verts, Frames frames) {
    if (verts.empty()) return;
    std::sort(verts.begin(), verts.end());
    int64_t capacity = cluster_size(p_, t);
    int64_t node = (int64_t{1} << (t - 1)) + pos - 1;
    int64_t used = 0;
    if (auto it = result_.cluster_usage.find(node); it != result_.cluster_usage.end())
      used = it->second;
    if (static_cast<int64_t>(verts.size()) <= capacity - used) {
      assign(t, pos, verts);
      return;
    }
    if (t == p_.k_levels) overflow(t, pos, verts.size());

    // Vertices adjacent to the set stored k(delta) levels up must be placed
    // here; any deeper and the edge would leave the distance-g ball.
    std::vector<int> forced, core;
    if (static_cast<int>(frames.size()) >= k_colors_) {
      mark_.next();
      for (int w : *frames[k_colors_ - 1]) mark_.set(w, 1);
      for (int v : verts) {
        bool hit = false;
        for (int u : g_.adj[v])
          if (mark_.has(u)) {
            hit = true;
            break;
          }
        (hit ? forced : core).push_back(v);
      }
    } else {
      core = verts;
    }

    Coloring coloring;
    coloring.k_colors = k_colors_;
    coloring.color_of.assign(core.size(), k_colors_);
    int tracked = std::min<int>(k_colors_ - 1, static_cast<int>(frames.size()));
    if (tracked > 0) {
      mark_.next();
      for (int d = tracked; d >= 1; --d)
        for (int w : *frames[d - 1]) mark_.set(w, d);
      for (size_t i = 0; i < core.size(); ++i) {
        int best = k_colors_;
        for (int u : g_.adj[core[i]])
          if (mark_.has(u)) best = std::min(best, mark_.get(u));
        coloring.color_of[i] = best;
      }
    }

    BisectionResult bis =
        bisect(g_, core, coloring, family_, outer_pos_.empty() ? nullptr : &outer_pos_);
    std::vector<int> store = std::move(forced);
    store.insert(store.end(), bis.separator.begin(), bis.separator.end());
    std::sort(store.begin(), store.end());
    if (static_cast<int64_t>(store.size()) > capacity - used) overflow(t, pos, store.size());
    assign(t, pos, store);

    stored_sets_.push_back(std::move(store));
    frames.insert(frames.begin(), &stored_sets_.back());
    if (static_cast<int>(frames.size()) > k_colors_) frames.pop_back();
    process(t + 1, 2 * pos - 1, std::move(bis.side_a), frames);
    process(t + 1, 2 * pos, std::move(bis.side_b), std::move(frames));
  }

  const Graph& g_;
  const UniversalParams& p_;
  Family family_;
  Scratch mark_;
  std::vector<int> outer_pos_;
  int k_colors_ = 1;
  std::deque<std::vector<int>> stored_sets_;  // stable addresses for Frames
  Embedding result_;
};

}  // namespace

Embedding embed(const Graph& g, const UniversalParams& p, Family family) {
  if (family == Family::general) throw Error("embed: general graphs have no host embedding");
  if (g.n > p.n) throw Error("embed: graph larger than the host parameters");
  Embedder e(g, p, family);
  return e.run();
}

std::vector<LevelOccupancy> occupancy_by_level(const Embedding& e, const UniversalParams& p) {
  std::vector<LevelOccupancy> out(p.k_levels + 1);
  for (int t = 1; t <= p.k_levels; ++t) {
    out[t].level = t;
    out[t].capacity = p.level_size[t];
  }
  for (const auto& [node, used] : e.cluster_usage) {
    int t = bits_for(node);
    ++out[t].clusters_used;
    out[t].max_used = std::max(out[t].max_used, used);
    out[t].stored += used;
  }
  out.erase(out.begin());
  return out;
}

}  // namespace labeling
