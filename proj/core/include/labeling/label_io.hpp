#ifndef LABELING_LABEL_IO_HPP
#define LABELING_LABEL_IO_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "labeling/bitstring.hpp"
#include "labeling/graph.hpp"

namespace labeling {

/// Label file: header "scheme=<tag> n=<n> ..." then one line per vertex,
/// "<vertexIndex> <bitlen>:<hex>". Scheme tags: tree, outerplanar,
/// outerplanar-split, bounded-list, bounded-concat, combinadic, planar.
struct LabelFile {
  std::string scheme;
  int n = 0;
  int delta = 0;
  int k = 0;        // combinadic only
  int forests = 0;  // bounded-concat only
  std::vector<BitString> labels;
};

std::string write_label_file(const LabelFile& f);
LabelFile read_label_file(std::string_view text);

/// Encodes a graph with the named scheme and packages the result.
LabelFile encode_to_file(const Graph& g, std::string_view scheme_tag);

/// Decoder built from a label-file header; answers queries from labels alone.
class AnyDecoder {
 public:
  explicit AnyDecoder(const LabelFile& file);
  ~AnyDecoder();
  AnyDecoder(AnyDecoder&&) noexcept;
  AnyDecoder& operator=(AnyDecoder&&) noexcept;

  int n() const;
  bool query(int u, int v) const;
  /// Max F-table probes seen in any single decode since construction.
  int max_probes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace labeling

#endif
