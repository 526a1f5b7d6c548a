#include "labeling/label_io.hpp"

#include <algorithm>
#include <sstream>

#include "labeling/errors.hpp"
#include "labeling/scheme_bounded.hpp"
#include "labeling/scheme_combinadics.hpp"
#include "labeling/scheme_outerplanar.hpp"
#include "labeling/scheme_planar.hpp"

namespace labeling {

std::string write_label_file(const LabelFile& f) {
  std::ostringstream out;
  out << "scheme=" << f.scheme << " n=" << f.n;
  if (f.scheme == "combinadic")
    out << " k=" << f.k;
  else
    out << " delta=" << f.delta;
  if (f.scheme == "bounded-concat") out << " forests=" << f.forests;
  out << '\n';
  for (size_t v = 0; v < f.labels.size(); ++v)
    out << v << ' ' << f.labels[v].to_hex_line() << '\n';
  return out.str();
}

LabelFile read_label_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("label file: empty");
  LabelFile f;
  std::istringstream hs(line);
  std::string tok;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("label file: bad header token");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "scheme")
      f.scheme = val;
    else if (key == "n")
      f.n = std::stoi(val);
    else if (key == "delta")
      f.delta = std::stoi(val);
    else if (key == "k")
      f.k = std::stoi(val);
    else if (key == "forests")
      f.forests = std::stoi(val);
    else
      throw ParseError("label file: unknown header key " + key);
  }
  if (f.scheme.empty() || f.n < 1) throw ParseError("label file: incomplete header");
  f.labels.assign(f.n, {});
  std::vector<char> seen(f.n, 0);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int v;
    std::string payload;
    if (!(ls >> v >> payload)) throw ParseError("label file: malformed label line");
    if (v < 0 || v >= f.n || seen[v]) throw ParseError("label file: bad vertex index");
    seen[v] = 1;
    f.labels[v] = BitString::from_hex_line(payload);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
    throw ParseError("label file: missing labels");
  return f;
}

LabelFile encode_to_file(const Graph& g, std::string_view scheme_tag) {
  LabelFile f;
  f.scheme = std::string(scheme_tag);
  f.n = g.n;
  f.delta = g.delta;
  if (scheme_tag == "tree") {
    f.labels = encode_outerplanar(g, Family::tree, SlotMode::tree).labels;
  } else if (scheme_tag == "outerplanar") {
    f.labels = encode_outerplanar(g, Family::outerplanar, SlotMode::full).labels;
  } else if (scheme_tag == "outerplanar-split") {
    f.labels = encode_outerplanar(g, Family::outerplanar, SlotMode::split).labels;
  } else if (scheme_tag == "bounded-list") {
    f.labels = encode_neighbor_list(g);
  } else if (scheme_tag == "bounded-concat") {
    ConcatResult r = encode_concat(g);
    f.forests = r.forest_count;
    f.labels = std::move(r.labels);
  } else if (scheme_tag == "combinadic") {
    f.k = std::max(g.delta, 1);
    f.labels = encode_big(g, f.k).labels;
  } else if (scheme_tag == "planar") {
    f.labels = encode_planar(g).labels;
  } else {
    throw ParseError("unknown scheme: " + f.scheme);
  }
  return f;
}

struct AnyDecoder::Impl {
  LabelFile file;
  SchemeConfig cfg;          // tree / outerplanar / outerplanar-split / concat block
  PlanarScheme planar;
  std::unique_ptr<BigDecoder> big;
  mutable int max_probes = 0;

  explicit Impl(const LabelFile& f) : file(f) {
    int delta = std::max(f.delta, 1);
    if (f.scheme == "tree") {
      cfg = SchemeConfig::make(f.n, delta, SlotMode::tree);
    } else if (f.scheme == "outerplanar") {
      cfg = SchemeConfig::make(f.n, delta, SlotMode::full);
    } else if (f.scheme == "outerplanar-split") {
      cfg = SchemeConfig::make(f.n, delta, SlotMode::split);
    } else if (f.scheme == "bounded-concat") {
      if (f.forests < 1) throw ParseError("label file: concat needs a forest count");
      cfg = SchemeConfig::make(f.n, delta, SlotMode::tree);
    } else if (f.scheme == "combinadic") {
      big = std::make_unique<BigDecoder>(BigScheme::make(f.n, std::max(f.k, 1)));
    } else if (f.scheme == "planar") {
      planar = PlanarScheme::make(f.n, delta);
    } else if (f.scheme != "bounded-list") {
      throw ParseError("unknown scheme: " + f.scheme);
    }
  }

  bool query(int u, int v) const {
    if (u < 0 || u >= file.n || v < 0 || v >= file.n)
      throw Error("query: vertex out of range");
    if (u == v) return false;
    const BitString& a = file.labels[u];
    const BitString& b = file.labels[v];
    if (file.scheme == "bounded-list") return decode_neighbor_list(std::max(file.delta, 1), a, b);
    if (file.scheme == "bounded-concat") return decode_concat(cfg, file.forests, a, b);
    if (file.scheme == "combinadic") return big->decode(a, b);
    if (file.scheme == "planar") return decode_planar(planar, a, b);
    DecodeStats stats;
    bool r = decode_outerplanar(cfg, a, b, &stats);
    max_probes = std::max(max_probes, stats.f_probes);
    return r;
  }
};

AnyDecoder::AnyDecoder(const LabelFile& file) : impl_(std::make_unique<Impl>(file)) {}
AnyDecoder::~AnyDecoder() = default;
AnyDecoder::AnyDecoder(AnyDecoder&&) noexcept = default;
AnyDecoder& AnyDecoder::operator=(AnyDecoder&&) noexcept = default;

int AnyDecoder::n() const { return impl_->file.n; }
bool AnyDecoder::query(int u, int v) const { return impl_->query(u, v); }
int AnyDecoder::max_probes() const { return impl_->max_probes; }

}  // namespace labeling
