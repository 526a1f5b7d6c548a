#include "labeling/scheme_planar.hpp"

#include <algorithm>

#include "labeling/errors.hpp"
#include "labeling/scheme_bounded.hpp"
#include "labeling/util.hpp"

namespace labeling {

PlanarScheme PlanarScheme::make(int n, int delta) {
  if (delta < 1) throw Error("planar scheme: delta must be >= 1");
  PlanarScheme s;
  s.delta = delta;
  s.slots = (delta + 1) / 2;
  s.params = UniversalParams::make(n, delta, Flavor::PL);
  s.level_width = bits_for(s.params.k_levels);
  int k = s.params.k_levels;
  s.id_width.assign(k + 1, 0);
  s.slot_width.assign(k + 1, 0);
  for (int t = 1; t <= k; ++t) {
    s.id_width[t] = bits_for(s.params.level_prefix[t + 1]);
    s.slot_width[t] = bits_for(s.params.level_neighbor_count[t]);
  }
  return s;
}

PlanarEncodeResult encode_planar(const Graph& g) {
  int delta = std::max(g.delta, 1);
  if (g.max_degree() > delta) throw Error("encode: degree exceeds delta");
  if (!validate_family(g, Family::planar)) throw Error("encode: input is not planar");

  PlanarEncodeResult res;
  res.scheme = PlanarScheme::make(g.n, delta);
  res.embedding = embed(g, res.scheme.params, Family::planar);
  Orientation orient = euler_orient(g);

  res.labels.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    int t = res.embedding.level_of[v];
    BitString bits;
    bits.append_field(static_cast<uint64_t>(t), res.scheme.level_width);
    bits.append_field(static_cast<uint64_t>(res.embedding.phi[v]), res.scheme.id_width[t]);
    std::vector<int64_t> ranks;
    for (int u : orient.out_sets[v])
      ranks.push_back(edge_rank(res.scheme.params, res.embedding.phi[v], res.embedding.phi[u]));
    std::sort(ranks.begin(), ranks.end());
    if (static_cast<int>(ranks.size()) > res.scheme.slots)
      throw Error("encode: orientation out-degree exceeds the slot count");
    for (int64_t r : ranks) bits.append_field(static_cast<uint64_t>(r), res.scheme.slot_width[t]);
    for (int i = static_cast<int>(ranks.size()); i < res.scheme.slots; ++i)
      bits.append_field(0, res.scheme.slot_width[t]);
    res.labels.push_back(std::move(bits));
  }
  return res;
}

namespace {

struct PlanarParsed {
  int level;
  int64_t id;
  std::vector<int64_t> slots;
};

PlanarParsed parse(const PlanarScheme& s, const BitString& bits) {
  if (static_cast<int>(bits.size()) < s.level_width)
    throw CorruptLabelError("decode: label shorter than the level field");
  int t = static_cast<int>(bits.read_field(0, s.level_width));
  if (t < 1 || t > s.params.k_levels) throw CorruptLabelError("decode: level out of range");
  if (static_cast<int>(bits.size()) != s.label_bits(t))
    throw CorruptLabelError("decode: label length does not match its level");
  int64_t id = static_cast<int64_t>(bits.read_field(s.level_width, s.id_width[t]));
  if (id < 1 || id > s.params.level_prefix[t + 1])
    throw CorruptLabelError("decode: vertex id out of range");
  if (id_to_cluster(s.params, id).addr.t != t)
    throw CorruptLabelError("decode: vertex id level mismatch");
  PlanarParsed p{t, id, {}};
  for (int i = 0; i < s.slots; ++i) {
    int64_t val = static_cast<int64_t>(bits.read_field(
        s.level_width + s.id_width[t] + static_cast<size_t>(i) * s.slot_width[t], s.slot_width[t]));
    if (val > s.params.level_neighbor_count[t])
      throw CorruptLabelError("decode: edge id out of range");
    if (val > 0) p.slots.push_back(val);
  }
  return p;
}

}  // namespace

bool decode_planar(const PlanarScheme& s, const BitString& a, const BitString& b) {
  PlanarParsed pa = parse(s, a);
  PlanarParsed pb = parse(s, b);
  if (pa.id == pb.id) return false;
  ClusterAddr ca = id_to_cluster(s.params, pa.id).addr;
  ClusterAddr cb = id_to_cluster(s.params, pb.id).addr;
  if (cluster_distance(ca, cb, s.params.g) > s.params.g) return false;
  int64_t rank_ab = edge_rank(s.params, pa.id, pb.id);
  for (int64_t x : pa.slots)
    if (x == rank_ab) return true;
  int64_t rank_ba = edge_rank(s.params, pb.id, pa.id);
  for (int64_t x : pb.slots)
    if (x == rank_ba) return true;
  return false;
}

SizeReport size_report(const std::vector<BitString>& labels) {
  SizeReport r;
  if (labels.empty()) return r;
  double total = 0;
  for (const auto& l : labels) {
    r.max_bits = std::max(r.max_bits, static_cast<int>(l.size()));
    total += static_cast<double>(l.size());
  }
  r.mean_bits = total / static_cast<double>(labels.size());
  return r;
}

}  // namespace labeling
