#include "labeling/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "labeling/errors.hpp"

namespace labeling {

const char* family_name(Family f) {
  switch (f) {
    case Family::tree: return "tree";
    case Family::outerplanar: return "outerplanar";
    case Family::planar: return "planar";
    case Family::general: return "general";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "tree") return Family::tree;
  if (name == "outerplanar") return Family::outerplanar;
  if (name == "planar") return Family::planar;
  if (name == "general") return Family::general;
  throw ParseError("unknown family: " + std::string(name));
}

Graph Graph::from_edges(int n, int delta, std::vector<std::pair<int, int>> edges,
                        std::optional<std::vector<int>> outer_order) {
  if (n < 0) throw ParseError("graph: negative vertex count");
  Graph g;
  g.n = n;
  g.delta = delta;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw ParseError("graph: self-loop");
    if (u < 0 || v >= n) throw ParseError("graph: vertex index out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParseError("graph: duplicate edge");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  if (g.max_degree() > delta) throw ParseError("graph: degree exceeds declared delta");
  if (outer_order) {
    if (static_cast<int>(outer_order->size()) != n)
      throw ParseError("graph: outer order must list every vertex");
    std::vector<int> seen(n, 0);
    for (int v : *outer_order) {
      if (v < 0 || v >= n || seen[v]++) throw ParseError("graph: bad outer order");
    }
    g.outer_order = std::move(outer_order);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool oracle_adjacent(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw Error("oracle_adjacent: vertex out of range");
  if (u == v) return false;
  return g.adjacent(u, v);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, m = -1, delta = -1;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<int>> order;
  int edges_read = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m >> delta) || n < 1 || m < 0 || delta < 0)
        throw ParseError("graph file: bad header line");
      continue;
    }
    std::string tok;
    ls >> tok;
    if (tok == "order:") {
      std::vector<int> ord(n);
      for (int i = 0; i < n; ++i)
        if (!(ls >> ord[i])) throw ParseError("graph file: short order trailer");
      order = std::move(ord);
      continue;
    }
    if (edges_read >= m) throw ParseError("graph file: more edges than declared");
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v)) throw ParseError("graph file: malformed edge line");
    if (!(0 <= u && u < v && v < n)) throw ParseError("graph file: edge must satisfy 0 <= u < v < n");
    edges.emplace_back(u, v);
    ++edges_read;
  }
  if (n < 0) throw ParseError("graph file: missing header");
  if (edges_read != m) throw ParseError("graph file: fewer edges than declared");
  return Graph::from_edges(n, delta, std::move(edges), std::move(order));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << ' ' << g.delta << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  if (g.outer_order) {
    out << "order:";
    for (int v : *g.outer_order) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Graph grid_graph(int w, int h) {
  std::vector<std::pair<int, int>> edges;
  auto id = [w](int r, int c) { return r * w + c; };
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      if (c + 1 < w) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < h) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(w * h, 4, std::move(edges));
}

}  // namespace labeling
