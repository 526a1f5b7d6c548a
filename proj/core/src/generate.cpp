#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "labeling/errors.hpp"
#include "labeling/graph.hpp"
#include "labeling/util.hpp"

namespace labeling {

namespace {

Graph generate_tree(int n, int delta, std::mt19937_64& rng) {
  if (n >= 2 && delta < 1) throw Error("generate: tree needs delta >= 1");
  if (n >= 3 && delta < 2) throw Error("generate: tree on n >= 3 needs delta >= 2");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  std::vector<int> open;  // vertices with residual capacity
  if (n > 0) open.push_back(0);
  for (int v = 1; v < n; ++v) {
    if (open.empty()) throw Error("generate: tree capacity exhausted");
    size_t i = draw_below(rng, open.size());
    int p = open[i];
    edges.emplace_back(p, v);
    if (++degree[p] >= delta) {
      open[i] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (degree[v] < delta) open.push_back(v);
  }
  return Graph::from_edges(n, delta, std::move(edges));
}

// Random triangulation of the convex polygon 0..n-1 (random ear split per
// arc), then chord deletion until every degree fits. Hull edges stay, so the
// polygon order remains the outer cycle.
Graph generate_outerplanar(int n, int delta, std::mt19937_64& rng) {
  if (n >= 3 && delta < 2) throw Error("generate: outerplanar on n >= 3 needs delta >= 2");
  if (n == 2 && delta < 1) throw Error("generate: outerplanar on n = 2 needs delta >= 1");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::pair<int, int>> hull;
  std::set<std::pair<int, int>> chords;
  if (n == 2) hull.emplace_back(0, 1);
  if (n >= 3) {
    for (int i = 0; i < n; ++i) hull.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    std::vector<std::pair<int, int>> arcs = {{0, n - 1}};
    while (!arcs.empty()) {
      auto [a, b] = arcs.back();
      arcs.pop_back();
      if (b - a < 2) continue;
      int m = a + 1 + static_cast<int>(draw_below(rng, b - a - 1));
      if (m - a >= 2) chords.insert({a, m});
      if (b - m >= 2) chords.insert({m, b});
      arcs.push_back({a, m});
      arcs.push_back({m, b});
    }
  }
  std::vector<int> degree(n, 0);
  for (auto [u, v] : hull) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::pair<int, int>> chord_list(chords.begin(), chords.end());
  for (auto [u, v] : chord_list) {
    ++degree[u];
    ++degree[v];
  }
  // Delete a random chord at a maximum-degree vertex until the bound holds.
  while (true) {
    int worst = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] > delta && (worst < 0 || degree[v] > degree[worst])) worst = v;
    if (worst < 0) break;
    std::vector<size_t> incident;
    for (size_t i = 0; i < chord_list.size(); ++i)
      if (chord_list[i].first == worst || chord_list[i].second == worst) incident.push_back(i);
    if (incident.empty()) throw Error("generate: outerplanar degree bound infeasible");
    size_t pick = incident[draw_below(rng, incident.size())];
    auto [u, v] = chord_list[pick];
    --degree[u];
    --degree[v];
    chord_list[pick] = chord_list.back();
    chord_list.pop_back();
  }
  std::vector<std::pair<int, int>> edges = hull;
  edges.insert(edges.end(), chord_list.begin(), chord_list.end());
  return Graph::from_edges(n, delta, std::move(edges), order);
}

// Degree-capped random subgraph of a square grid plus one random diagonal
// per cell; planar by construction.
Graph generate_planar(int n, int delta, std::mt19937_64& rng) {
  if (n >= 2 && delta < 1) throw Error("generate: planar on n >= 2 needs delta >= 1");
  int w = 1;
  while (w * w < n) ++w;
  auto id = [&](int r, int c) { return r * w + c; };
  std::vector<std::pair<int, int>> candidates;
  for (int r = 0; r * w < n; ++r)
    for (int c = 0; c < w && id(r, c) < n; ++c) {
      if (c + 1 < w && id(r, c + 1) < n) candidates.emplace_back(id(r, c), id(r, c + 1));
      if (id(r + 1, c) < n) candidates.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 < w && id(r + 1, c + 1) < n) {
        // one diagonal per cell, direction random
        if (draw_below(rng, 2) == 0)
          candidates.emplace_back(id(r, c), id(r + 1, c + 1));
        else if (id(r + 1, c) < n && id(r, c + 1) < n)
          candidates.emplace_back(std::min(id(r, c + 1), id(r + 1, c)),
                                  std::max(id(r, c + 1), id(r + 1, c)));
      }
    }
  for (size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[draw_below(rng, i)]);
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  for (auto [u, v] : candidates) {
    if (degree[u] >= delta || degree[v] >= delta) continue;
    auto key = std::minmax(u, v);
    if (!used.insert({key.first, key.second}).second) continue;
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return Graph::from_edges(n, delta, std::move(edges));
}

// Configuration model with rejection of loops and multi-edges.
Graph generate_general(int n, int delta, std::mt19937_64& rng) {
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v) {
    int d = static_cast<int>(draw_below(rng, delta + 1));
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }
  for (size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[draw_below(rng, i)]);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!used.insert({key.first, key.second}).second) continue;
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, delta, std::move(edges));
}

}  // namespace

Graph generate(Family family, int n, int delta, uint64_t seed) {
  if (n < 1) throw Error("generate: n must be >= 1");
  if (delta < 1) throw Error("generate: delta must be >= 1");
  std::mt19937_64 rng(seed);
  switch (family) {
    case Family::tree: return generate_tree(n, delta, rng);
    case Family::outerplanar: return generate_outerplanar(n, delta, rng);
    case Family::planar: return generate_planar(n, delta, rng);
    case Family::general: return generate_general(n, delta, rng);
  }
  throw Error("generate: unknown family");
}

}  // namespace labeling
