#include "labeling/scheme_bounded.hpp"

#include <algorithm>
#include <numeric>

#include "labeling/errors.hpp"
#include "labeling/util.hpp"

namespace labeling {

Orientation euler_orient(const Graph& g) {
  int n = g.n;
  // Edge-indexed multigraph: original edges first, then the matching.
  std::vector<std::pair<int, int>> all_edges = g.edges;
  int m_original = static_cast<int>(all_edges.size());
  Orientation result;
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  for (size_t i = 0; i + 1 < odd.size(); i += 2) {
    result.matching.emplace_back(odd[i], odd[i + 1]);
    all_edges.emplace_back(odd[i], odd[i + 1]);
  }

  std::vector<std::vector<std::pair<int, int>>> incident(n);  // (other endpoint, edge id)
  for (size_t e = 0; e < all_edges.size(); ++e) {
    auto [u, v] = all_edges[e];
    incident[u].emplace_back(v, static_cast<int>(e));
    incident[v].emplace_back(u, static_cast<int>(e));
  }
  std::vector<char> used(all_edges.size(), 0);
  std::vector<size_t> next(n, 0);
  result.out_sets.assign(n, {});

  for (int start = 0; start < n; ++start) {
    if (next[start] >= incident[start].size()) continue;
    // Hierholzer: arrival edges collected on pop form the circuit reversed.
    std::vector<std::pair<int, int>> stack = {{start, -1}};
    std::vector<std::pair<int, int>> circuit;
    while (!stack.empty()) {
      auto [v, via] = stack.back();
      bool advanced = false;
      while (next[v] < incident[v].size()) {
        auto [u, e] = incident[v][next[v]++];
        if (used[e]) continue;
        used[e] = 1;
        stack.emplace_back(u, e);
        advanced = true;
        break;
      }
      if (!advanced) {
        circuit.emplace_back(v, via);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    for (size_t i = 0; i + 1 < circuit.size(); ++i) {
      int from = circuit[i].first;
      auto [to, e] = circuit[i + 1];
      if (e < m_original) result.out_sets[from].push_back(to);
    }
  }
  for (auto& s : result.out_sets) std::sort(s.begin(), s.end());
  return result;
}

std::vector<BitString> encode_neighbor_list(const Graph& g) {
  int delta = std::max(g.delta, 1);
  if (g.max_degree() > delta) throw Error("encode: degree exceeds delta");
  Orientation orient = euler_orient(g);
  int slots = (delta + 1) / 2;
  int width = bits_for(g.n);  // slot values are ids + 1
  std::vector<BitString> labels;
  labels.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    BitString bits;
    bits.append_field(static_cast<uint64_t>(v), width);
    const auto& outs = orient.out_sets[v];
    if (static_cast<int>(outs.size()) > slots) throw Error("encode: orientation out-degree too big");
    for (int u : outs) bits.append_field(static_cast<uint64_t>(u) + 1, width);
    for (int i = static_cast<int>(outs.size()); i < slots; ++i) bits.append_field(0, width);
    labels.push_back(bits);
  }
  return labels;
}

bool decode_neighbor_list(int delta, const BitString& a, const BitString& b) {
  int slots = (std::max(delta, 1) + 1) / 2;
  if (a.size() != b.size() || a.size() % (slots + 1) != 0)
    throw CorruptLabelError("decode: neighbor-list label length mismatch");
  int width = static_cast<int>(a.size()) / (slots + 1);
  auto id_of = [&](const BitString& s) { return s.read_field(0, width); };
  auto contains = [&](const BitString& s, uint64_t target) {
    for (int i = 0; i < slots; ++i)
      if (s.read_field(static_cast<size_t>(width) * (i + 1), width) == target + 1) return true;
    return false;
  };
  uint64_t ia = id_of(a), ib = id_of(b);
  if (ia == ib) return false;
  return contains(a, ib) || contains(b, ia);
}

namespace {

// Forest insertion with a one-step exchange: if an edge closes a cycle in
// every target forest, try to displace one cycle edge into another forest.
struct ForestSet {
  int n;
  std::vector<std::vector<std::vector<int>>> adj;  // forest -> vertex -> neighbors
  std::vector<std::vector<std::pair<int, int>>> edges;

  explicit ForestSet(int n, int count) : n(n), adj(count), edges(count) {
    for (auto& a : adj) a.assign(n, {});
  }

  int count() const { return static_cast<int>(edges.size()); }

  void add_forest() {
    adj.emplace_back();
    adj.back().assign(n, {});
    edges.emplace_back();
  }

  bool connected(int f, int u, int v) const {
    std::vector<int> stack = {u};
    std::vector<char> seen(n, 0);
    seen[u] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (int y : adj[f][x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    return false;
  }

  std::vector<std::pair<int, int>> path(int f, int u, int v) const {
    std::vector<int> prev(n, -2);
    std::vector<int> stack = {u};
    prev[u] = -1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == v) break;
      for (int y : adj[f][x])
        if (prev[y] == -2) {
          prev[y] = x;
          stack.push_back(y);
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int x = v; prev[x] >= 0; x = prev[x]) out.emplace_back(std::min(x, prev[x]), std::max(x, prev[x]));
    return out;
  }

  void insert(int f, int u, int v) {
    adj[f][u].push_back(v);
    adj[f][v].push_back(u);
    edges[f].emplace_back(std::min(u, v), std::max(u, v));
  }

  void remove(int f, int u, int v) {
    auto drop = [&](int a, int b) {
      auto& lst = adj[f][a];
      lst.erase(std::find(lst.begin(), lst.end(), b));
    };
    drop(u, v);
    drop(v, u);
    auto& es = edges[f];
    es.erase(std::find(es.begin(), es.end(), std::make_pair(std::min(u, v), std::max(u, v))));
  }
};

}  // namespace

ForestDecomposition forest_decompose(const Graph& g) {
  int delta = std::max(g.delta, 1);
  if (g.max_degree() > delta) throw Error("forest_decompose: degree exceeds delta");
  int target = (delta + 1) / 2;
  ForestSet fs(g.n, target);
  for (auto [u, v] : g.edges) {
    bool placed = false;
    for (int f = 0; f < fs.count() && !placed; ++f) {
      if (!fs.connected(f, u, v)) {
        fs.insert(f, u, v);
        placed = true;
      }
    }
    if (placed) continue;
    // One-step exchange across the target forests.
    for (int f = 0; f < target && !placed; ++f) {
      for (auto [pu, pv] : fs.path(f, u, v)) {
        for (int f2 = 0; f2 < target && !placed; ++f2) {
          if (f2 == f || fs.connected(f2, pu, pv)) continue;
          fs.remove(f, pu, pv);
          fs.insert(f2, pu, pv);
          fs.insert(f, u, v);
          placed = true;
        }
        if (placed) break;
      }
    }
    if (placed) continue;
    // Cycle-tight instance: spill into one overflow forest.
    if (fs.count() == target) fs.add_forest();
    int f = fs.count() - 1;
    if (fs.connected(f, u, v)) throw Error("forest_decompose: overflow forest would cycle");
    fs.insert(f, u, v);
  }
  ForestDecomposition out;
  out.forests = std::move(fs.edges);
  for (auto& es : out.forests) std::sort(es.begin(), es.end());
  return out;
}

ConcatResult encode_concat(const Graph& g) {
  int delta = std::max(g.delta, 1);
  ForestDecomposition fd = forest_decompose(g);
  ConcatResult res;
  res.forest_count = static_cast<int>(fd.forests.size());
  res.labels.assign(g.n, {});
  for (int f = 0; f < res.forest_count; ++f) {
    Graph forest = Graph::from_edges(g.n, delta, fd.forests[f]);
    EncodeResult block = encode_outerplanar(forest, Family::tree, SlotMode::tree);
    if (f == 0) res.block_cfg = block.cfg;
    for (int v = 0; v < g.n; ++v) res.labels[v].append(block.labels[v]);
  }
  return res;
}

bool decode_concat(const SchemeConfig& block_cfg, int forest_count, const BitString& a,
                   const BitString& b) {
  size_t block = static_cast<size_t>(block_cfg.uniform_len);
  if (a.size() != b.size() || a.size() != block * static_cast<size_t>(forest_count))
    throw CorruptLabelError("decode: concatenated label length mismatch");
  for (int f = 0; f < forest_count; ++f) {
    if (decode_outerplanar(block_cfg, a.slice(f * block, block), b.slice(f * block, block)))
      return true;
  }
  return false;
}

}  // namespace labeling
