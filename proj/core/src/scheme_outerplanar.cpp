#include "labeling/scheme_outerplanar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "labeling/errors.hpp"
#include "labeling/scheme_bounded.hpp"
#include "labeling/util.hpp"

namespace labeling {

namespace {

int ambiguity_band(int delta) {
  long double v = 8.0L * (delta + 1) * log2l(static_cast<long double>(delta + 1));
  return static_cast<int>(ceill(v));
}

int slots_for(SlotMode mode, int delta) {
  switch (mode) {
    case SlotMode::tree: return 1;
    case SlotMode::full: return delta;
    case SlotMode::split: return delta / 2 + 1;
  }
  return 1;
}

bool is_shallow_level(const SchemeConfig& cfg, int t) { return t <= cfg.params.k_levels - cfg.r; }

struct LevelFields {
  int t;
  int alpha;
  int beta;
};

LevelFields fields_at(const SchemeConfig& cfg, int t) {
  AlphaBeta ab = alpha_beta(cfg.params, t);
  return {t, ab.alpha, ab.beta};
}

// Parent of v in a rooted forest; roots (min vertex per component) get -1.
std::vector<int> parent_array(const Graph& g) {
  std::vector<int> parent(g.n, -2);
  for (int s = 0; s < g.n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adj[v])
        if (parent[u] == -2) {
          parent[u] = v;
          stack.push_back(u);
        }
    }
  }
  return parent;
}

}  // namespace

const char* slot_mode_name(SlotMode m) {
  switch (m) {
    case SlotMode::tree: return "tree";
    case SlotMode::full: return "outerplanar";
    case SlotMode::split: return "outerplanar-split";
  }
  return "?";
}

SchemeConfig SchemeConfig::make(int n, int delta, SlotMode mode) {
  if (delta < 1) throw Error("scheme: delta must be >= 1");
  SchemeConfig cfg;
  cfg.delta = delta;
  cfg.mode = mode;
  cfg.slots = slots_for(mode, delta);
  cfg.r = ambiguity_band(delta);
  cfg.prefix_width = 2 + bits_for(cfg.r);
  cfg.params = UniversalParams::make(n, delta, Flavor::H);
  int k = cfg.params.k_levels;
  cfg.f_table.assign(k + 1, 0);
  for (int t = 1; t <= k; ++t) {
    AlphaBeta ab = alpha_beta(cfg.params, t);
    cfg.f_table[t] = ab.alpha + cfg.slots * ab.beta;
  }
  for (int t = 1; t <= k; ++t) cfg.f_sorted.emplace_back(cfg.f_table[t], t);
  std::sort(cfg.f_sorted.begin(), cfg.f_sorted.end());
  cfg.f_max = cfg.f_sorted.back().first;
  cfg.uniform_len = cfg.prefix_width + cfg.f_max + 1;
  return cfg;
}

int length_fn(const SchemeConfig& cfg, int t) {
  if (t < 1 || t > cfg.params.k_levels) throw Error("length_fn: level out of range");
  return cfg.f_table[t];
}

std::vector<int> preimages(const SchemeConfig& cfg, int len, int* probes) {
  int reads = 0;
  const auto& tab = cfg.f_sorted;
  // lower bound on (len, *)
  size_t lo = 0, hi = tab.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    ++reads;
    if (tab[mid].first < len)
      lo = mid + 1;
    else
      hi = mid;
  }
  std::vector<int> out;
  for (size_t i = lo; i < tab.size(); ++i) {
    ++reads;
    if (tab[i].first != len) break;
    out.push_back(tab[i].second);
  }
  std::sort(out.begin(), out.end());
  if (probes) *probes += reads;
  return out;
}

LevelInfo classify(const SchemeConfig& cfg, int t) {
  if (t < 1 || t > cfg.params.k_levels) throw Error("classify: level out of range");
  if (!is_shallow_level(cfg, t)) return {LevelClass::Deep, cfg.params.k_levels - t};
  auto pre = preimages(cfg, cfg.f_table[t]);
  return {t == pre.front() ? LevelClass::ShallowEarly : LevelClass::ShallowLate, 0};
}

int uniform_length(const SchemeConfig& cfg) { return cfg.uniform_len; }

SchemeConfig infer_instance(int padded_len, int delta, SlotMode mode) {
  for (int k = 1; k <= 44; ++k) {
    int64_t n = (int64_t{1} << k) - 1;
    if (n > (int64_t{1} << 30)) break;
    SchemeConfig cfg = SchemeConfig::make(static_cast<int>(n), delta, mode);
    if (cfg.uniform_len == padded_len) return cfg;
    if (cfg.uniform_len > padded_len) break;  // uniform length is increasing in k
  }
  throw CorruptLabelError("infer_instance: no instance size matches the padded length");
}

EncodeResult encode_outerplanar(const Graph& g, Family family, SlotMode mode) {
  if (family != Family::tree && family != Family::outerplanar)
    throw Error("encode: family must be tree or outerplanar");
  int delta = std::max(g.delta, 1);
  if (g.max_degree() > delta) throw Error("encode: degree exceeds delta");
  if (family == Family::tree) {
    if (!is_forest(g)) throw Error("encode: tree scheme needs an acyclic input");
  } else if (!validate_family(g, Family::outerplanar)) {
    throw Error("encode: input is not outerplanar");
  }
  if (mode == SlotMode::tree && family != Family::tree)
    throw Error("encode: single-slot labels only cover forests");

  EncodeResult res;
  res.cfg = SchemeConfig::make(g.n, delta, mode);
  res.embedding = embed(g, res.cfg.params, family);
  const SchemeConfig& cfg = res.cfg;
  const UniversalParams& p = cfg.params;

  std::vector<int> parent;
  if (mode == SlotMode::tree) parent = parent_array(g);
  std::vector<std::vector<int>> out_sets;
  if (mode == SlotMode::split) out_sets = euler_orient(g).out_sets;

  res.labels.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    int t = res.embedding.level_of[v];
    LevelInfo info = classify(cfg, t);
    LevelFields lf = fields_at(cfg, t);
    BitString bits;
    bits.push_back(info.cls == LevelClass::Deep);
    bits.push_back(info.cls == LevelClass::ShallowLate);
    bits.append_field(info.cls == LevelClass::Deep ? static_cast<uint64_t>(info.deep_type) : 0,
                      cfg.prefix_width - 2);
    bits.append_field(static_cast<uint64_t>(res.embedding.phi[v]), lf.alpha);

    std::vector<int64_t> slot_values;
    auto rank_to = [&](int u) {
      return edge_rank(p, res.embedding.phi[v], res.embedding.phi[u]);
    };
    switch (mode) {
      case SlotMode::tree:
        if (parent[v] >= 0) slot_values.push_back(rank_to(parent[v]));
        break;
      case SlotMode::full:
        for (int u : g.adj[v]) slot_values.push_back(rank_to(u));
        break;
      case SlotMode::split:
        for (int u : out_sets[v]) slot_values.push_back(rank_to(u));
        break;
    }
    std::sort(slot_values.begin(), slot_values.end());
    if (static_cast<int>(slot_values.size()) > cfg.slots)
      throw Error("encode: more incident edges than slots");
    for (int64_t val : slot_values) bits.append_field(static_cast<uint64_t>(val), lf.beta);
    for (int i = static_cast<int>(slot_values.size()); i < cfg.slots; ++i)
      bits.append_field(0, lf.beta);

    res.labels.push_back(pad_unambiguous(bits, cfg.uniform_len));
  }
  return res;
}

namespace {

struct DecodedLabel {
  int level;
  int64_t id;
  std::vector<int64_t> slots;
};

DecodedLabel parse_label(const SchemeConfig& cfg, const BitString& padded, DecodeStats* stats) {
  if (static_cast<int>(padded.size()) != cfg.uniform_len)
    throw CorruptLabelError("decode: label length does not match the instance");
  BitString body = strip_padding(padded);
  if (static_cast<int>(body.size()) < cfg.prefix_width)
    throw CorruptLabelError("decode: label shorter than the prefix");
  int suffix_len = static_cast<int>(body.size()) - cfg.prefix_width;

  bool deep = body.bit(0);
  bool late = body.bit(1);
  int type = static_cast<int>(body.read_field(2, cfg.prefix_width - 2));
  int k = cfg.params.k_levels;
  int t;
  if (deep) {
    if (late) throw CorruptLabelError("decode: deep label with the late bit set");
    t = k - type;
    if (t < 1 || t > k || type >= cfg.r) throw CorruptLabelError("decode: bad deep type");
    if (t <= k - cfg.r) throw CorruptLabelError("decode: type names a shallow level");
    if (stats) ++stats->f_probes;
    if (cfg.f_table[t] != suffix_len) throw CorruptLabelError("decode: suffix length mismatch");
  } else {
    if (type != 0) throw CorruptLabelError("decode: shallow label with a nonzero type");
    int probes = 0;
    auto pre = preimages(cfg, suffix_len, &probes);
    if (stats) stats->f_probes += probes;
    if (pre.empty()) throw CorruptLabelError("decode: unattainable suffix length");
    if (!late) {
      t = pre.front();
    } else {
      if (pre.size() < 2) throw CorruptLabelError("decode: late label with a unique pre-image");
      t = pre[1];
    }
    if (t > k - cfg.r) throw CorruptLabelError("decode: shallow label at a deep level");
  }

  AlphaBeta ab = alpha_beta(cfg.params, t);
  if (suffix_len != ab.alpha + cfg.slots * ab.beta)
    throw CorruptLabelError("decode: field widths do not tile the suffix");
  int64_t id = static_cast<int64_t>(body.read_field(cfg.prefix_width, ab.alpha));
  if (id < 1 || id > cfg.params.total_vertices)
    throw CorruptLabelError("decode: vertex id out of range");
  ClusterLocation loc = id_to_cluster(cfg.params, id);
  if (loc.addr.t != t) throw CorruptLabelError("decode: vertex id level mismatch");

  DecodedLabel out{t, id, {}};
  int64_t max_eid = cfg.params.level_neighbor_count[t];
  for (int i = 0; i < cfg.slots; ++i) {
    int64_t val = static_cast<int64_t>(
        body.read_field(cfg.prefix_width + ab.alpha + static_cast<size_t>(i) * ab.beta, ab.beta));
    if (val > max_eid) throw CorruptLabelError("decode: edge id out of range");
    if (val > 0) out.slots.push_back(val);
  }
  return out;
}

}  // namespace

bool decode_outerplanar(const SchemeConfig& cfg, const BitString& a, const BitString& b,
                        DecodeStats* stats) {
  DecodedLabel da = parse_label(cfg, a, stats);
  DecodedLabel db = parse_label(cfg, b, stats);
  if (da.id == db.id) return false;
  ClusterAddr ca = id_to_cluster(cfg.params, da.id).addr;
  ClusterAddr cb = id_to_cluster(cfg.params, db.id).addr;
  if (cluster_distance(ca, cb, cfg.params.g) > cfg.params.g) return false;
  int64_t rank_ab = edge_rank(cfg.params, da.id, db.id);
  for (int64_t s : da.slots)
    if (s == rank_ab) return true;
  int64_t rank_ba = edge_rank(cfg.params, db.id, da.id);
  for (int64_t s : db.slots)
    if (s == rank_ba) return true;
  return false;
}

bool decode_outerplanar(const BitString& a, const BitString& b, int delta, SlotMode mode) {
  if (a.size() != b.size()) throw CorruptLabelError("decode: labels from different instances");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, SchemeConfig> cache;
  std::tuple<int, int, int> key{static_cast<int>(a.size()), delta, static_cast<int>(mode)};
  std::unique_lock lock(mu);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, infer_instance(static_cast<int>(a.size()), delta, mode)).first;
  const SchemeConfig& cfg = it->second;
  lock.unlock();
  return decode_outerplanar(cfg, a, b);
}

}  // namespace labeling
