#ifndef LABELING_GRAPH_HPP
#define LABELING_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace labeling {

enum class Family { tree, outerplanar, planar, general };

const char* family_name(Family f);
Family family_from_name(std::string_view name);

/// Simple undirected graph on vertices [0, n). Immutable after construction;
/// edges are normalized to u < v and kept sorted, adjacency lists are the
/// symmetric closure. `delta` is the declared degree bound.
struct Graph {
  int n = 0;
  int delta = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  // Outer-cycle vertex order, present for generated outerplanar graphs and
  // graphs parsed from files carrying the "order:" trailer.
  std::optional<std::vector<int>> outer_order;

  static Graph from_edges(int n, int delta, std::vector<std::pair<int, int>> edges,
                          std::optional<std::vector<int>> outer_order = std::nullopt);

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Ground truth for every decoder test: true iff {u,v} is an edge.
/// Symmetric, false on u == v, throws on out-of-range vertices.
bool oracle_adjacent(const Graph& g, int u, int v);

/// Graph file: line 1 "n m delta", then m lines "u v" with 0 <= u < v < n.
/// Lines starting with '#' are ignored. Optional trailer: "order:" followed
/// by n space-separated vertex ids.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

bool validate_family(const Graph& g, Family family);

/// True iff g is acyclic (a forest); weaker than validate_family(tree),
/// which also requires connectivity.
bool is_forest(const Graph& g);

/// Deterministic in (family, n, delta, seed). Trees are connected and rooted
/// at vertex 0; outerplanar output carries its outer-cycle order; general
/// graphs may be disconnected. Throws on infeasible combinations.
Graph generate(Family family, int n, int delta, uint64_t seed);

/// w*h grid, row-major vertex ids; handy planar test instance.
Graph grid_graph(int w, int h);

/// Outer-cycle order for an outerplanar graph that lacks the side data:
/// extracted from a planar embedding of g plus an apex vertex.
std::vector<int> derive_outer_order(const Graph& g);

}  // namespace labeling

#endif
