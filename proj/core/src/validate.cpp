#include <algorithm>
#include <numeric>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "labeling/errors.hpp"
#include "labeling/graph.hpp"

namespace labeling {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>>;

BoostGraph to_boost(const Graph& g, bool with_apex) {
  BoostGraph bg(g.n + (with_apex ? 1 : 0));
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  if (with_apex)
    for (int v = 0; v < g.n; ++v) boost::add_edge(g.n, v, bg);
  return bg;
}

bool is_planar(const Graph& g) {
  BoostGraph bg = to_boost(g, false);
  return boost::boyer_myrvold_planarity_test(bg);
}

// G is outerplanar iff G plus a vertex adjacent to everything is planar.
bool is_outerplanar(const Graph& g) {
  BoostGraph bg = to_boost(g, true);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.n;
}

}  // namespace

bool is_forest(const Graph& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool validate_family(const Graph& g, Family family) {
  switch (family) {
    case Family::tree:
      return g.edge_count() == g.n - 1 && is_connected(g);
    case Family::outerplanar:
      return is_outerplanar(g);
    case Family::planar:
      return is_planar(g);
    case Family::general:
      return true;
  }
  return false;
}

std::vector<int> derive_outer_order(const Graph& g) {
  if (g.outer_order) return *g.outer_order;
  if (g.n == 0) return {};
  BoostGraph bg = to_boost(g, true);
  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) throw Error("derive_outer_order: graph is not outerplanar");
  // The rotation around the apex lists the vertices in a circular order in
  // which the graph's own edges nest without crossing.
  std::vector<int> order;
  order.reserve(g.n);
  for (const Edge& e : embedding[g.n]) {
    int u = static_cast<int>(boost::source(e, bg));
    int v = static_cast<int>(boost::target(e, bg));
    order.push_back(u == g.n ? v : u);
  }
  return order;
}

}  // namespace labeling
