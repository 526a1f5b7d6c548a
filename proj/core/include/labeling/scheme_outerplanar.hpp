#ifndef LABELING_SCHEME_OUTERPLANAR_HPP
#define LABELING_SCHEME_OUTERPLANAR_HPP

#include <cstdint>
#include <vector>

#include "labeling/bitstring.hpp"
#include "labeling/embed.hpp"
#include "labeling/graph.hpp"
#include "labeling/universal.hpp"

namespace labeling {

/// How many edge-id slots a label carries.
///   tree:  1 slot, the edge to the parent.
///   full:  delta slots, every incident edge.
///   split: floor(delta/2)+1 slots, outgoing edges of the Euler orientation;
///          the decoder checks both labels' slots.
enum class SlotMode { tree, full, split };

const char* slot_mode_name(SlotMode m);

/// Everything the encoder and decoder must agree on, derived from
/// (n, delta, mode) alone.
struct SchemeConfig {
  int delta = 1;
  SlotMode mode = SlotMode::tree;
  int slots = 1;
  int r = 0;             // deep-level band width r(delta)
  int prefix_width = 0;  // s_p = 2 + bits of the type field
  UniversalParams params;
  std::vector<int> f_table;                 // [1..k] suffix length per level
  std::vector<std::pair<int, int>> f_sorted;  // (F(t), t), sorted
  int f_max = 0;
  int uniform_len = 0;  // prefix + f_max + 1 padding marker

  static SchemeConfig make(int n, int delta, SlotMode mode);
};

/// Suffix length F(t) = alpha_t + slots * beta_t.
int length_fn(const SchemeConfig& cfg, int t);

/// All levels t with F(t) == len, ascending. `probes` counts reads of cached
/// F values (binary search over the sorted table).
std::vector<int> preimages(const SchemeConfig& cfg, int len, int* probes = nullptr);

enum class LevelClass { ShallowEarly, ShallowLate, Deep };

struct LevelInfo {
  LevelClass cls = LevelClass::Deep;
  int deep_type = 0;  // k_levels - t, only for Deep
};

LevelInfo classify(const SchemeConfig& cfg, int t);

int uniform_length(const SchemeConfig& cfg);

/// Recovers the unique instance size class from a padded label length; the
/// uniform length is strictly increasing in k for fixed (delta, mode).
SchemeConfig infer_instance(int padded_len, int delta, SlotMode mode);

struct EncodeResult {
  SchemeConfig cfg;
  Embedding embedding;
  std::vector<BitString> labels;
};

/// Labels for a bounded-degree tree/forest (family = tree) or outerplanar
/// graph. All labels are padded to the uniform length and pairwise distinct.
EncodeResult encode_outerplanar(const Graph& g, Family family, SlotMode mode);

struct DecodeStats {
  int f_probes = 0;  // reads of F-table entries during level recovery
};

/// Adjacency from two labels of the same instance. Pure; throws
/// CorruptLabelError on labels the encoder cannot have produced.
bool decode_outerplanar(const SchemeConfig& cfg, const BitString& a, const BitString& b,
                        DecodeStats* stats = nullptr);

/// Two-label decode without a shared config: the instance is recovered from
/// the padded length (spec'd decoder contract; slower than the cfg overload).
bool decode_outerplanar(const BitString& a, const BitString& b, int delta, SlotMode mode);

}  // namespace labeling

#endif
