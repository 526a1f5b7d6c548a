#include "labeling/scheme_combinadics.hpp"

#include <algorithm>
#include <cmath>

#include "labeling/errors.hpp"
#include "labeling/scheme_bounded.hpp"
#include "labeling/util.hpp"

namespace labeling {

namespace {

int big_bits_for(const BigInt& x) {
  if (x <= 0) return 0;
  return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

void append_big_field(BitString& bits, const BigInt& value, int width) {
  if (big_bits_for(value) > width) throw Error("append_big_field: value does not fit");
  for (int j = width - 1; j >= 0; --j)
    bits.push_back(boost::multiprecision::bit_test(value, static_cast<unsigned>(j)));
}

BigInt read_big_field(const BitString& bits, size_t pos, int width) {
  BigInt v = 0;
  for (int j = 0; j < width; ++j) {
    v <<= 1;
    if (bits.bit(pos + j)) v |= 1;
  }
  return v;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt sigma_rank(const std::vector<int>& seq) {
  BigInt r = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || (i > 0 && seq[i] <= seq[i - 1]))
      throw Error("sigma_rank: sequence must be strictly increasing and nonnegative");
    r += binomial(seq[i], static_cast<int>(i) + 1);
  }
  return r;
}

std::vector<int> unrank(const BigInt& rank, int len, int n) {
  if (rank < 0 || rank >= binomial(n, len)) throw Error("unrank: rank out of range");
  std::vector<int> out(len);
  BigInt rem = rank;
  for (int i = len; i >= 1; --i) {
    // largest t with C(t, i) <= rem
    int lo = i - 1, hi = n - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (binomial(mid, i) <= rem)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[i - 1] = lo;
    rem -= binomial(lo, i);
  }
  return out;
}

BigScheme BigScheme::make(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw Error("big scheme: need 1 <= k <= n");
  BigScheme s;
  s.n = n;
  s.k = k;
  s.id_width = ceil_log2(n);
  s.size_width = ceil_log2(n);
  BigInt widest = binomial(n, (k + 1) / 2);
  s.rank_width = big_bits_for(widest - 1);
  return s;
}

BigEncodeResult encode_big(const Graph& g, int k) {
  if (g.max_degree() > k) throw Error("encode_big: degree exceeds k");
  BigEncodeResult res;
  res.scheme = BigScheme::make(g.n, k);
  Orientation orient = euler_orient(g);
  res.labels.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    bool complement = 3 * g.degree(v) >= 2 * g.n;
    std::vector<int> stored;
    if (!complement) {
      stored = orient.out_sets[v];
    } else {
      size_t j = 0;
      for (int u = 0; u < g.n; ++u) {
        if (j < g.adj[v].size() && g.adj[v][j] == u) {
          ++j;
          continue;
        }
        stored.push_back(u);  // the complement includes v itself
      }
    }
    BitString bits;
    bits.push_back(complement);
    bits.append_field(static_cast<uint64_t>(v), res.scheme.id_width);
    bits.append_field(stored.size(), res.scheme.size_width);
    append_big_field(bits, sigma_rank(stored), res.scheme.rank_width);
    res.labels.push_back(std::move(bits));
  }
  return res;
}

struct BigDecoder::Parsed {
  bool complement;
  int id;
  std::vector<int> stored;
};

BigDecoder::BigDecoder(const BigScheme& scheme) : scheme_(scheme) {
  int max_len = std::max((scheme.k + 1) / 2, scheme.n - (2 * scheme.n) / 3 + 1);
  max_len = std::min(max_len, scheme.n);
  columns_.assign(max_len + 1, {});
  for (int i = 0; i <= max_len; ++i) {
    columns_[i].assign(scheme.n + 1, 0);
    for (int t = 0; t <= scheme.n; ++t)
      columns_[i][t] = i == 0 ? BigInt(1) : (t == 0 ? BigInt(0) : columns_[i - 1][t - 1] + columns_[i][t - 1]);
  }
}

BigDecoder::Parsed BigDecoder::parse(const BitString& s) const {
  if (static_cast<int>(s.size()) != scheme_.label_bits())
    throw CorruptLabelError("decode: big-scheme label length mismatch");
  Parsed p;
  p.complement = s.bit(0);
  p.id = static_cast<int>(s.read_field(1, scheme_.id_width));
  if (p.id >= scheme_.n) throw CorruptLabelError("decode: vertex id out of range");
  int len = static_cast<int>(s.read_field(1 + scheme_.id_width, scheme_.size_width));
  if (len >= static_cast<int>(columns_.size()))
    throw CorruptLabelError("decode: stored set too large");
  BigInt rank = read_big_field(s, 1 + scheme_.id_width + scheme_.size_width, scheme_.rank_width);
  if (rank >= columns_[len][scheme_.n]) throw CorruptLabelError("decode: rank out of range");
  // Greedy unranking against the cached Pascal columns.
  p.stored.resize(len);
  BigInt rem = rank;
  for (int i = len; i >= 1; --i) {
    int lo = i - 1, hi = scheme_.n - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (columns_[i][mid] <= rem)
        lo = mid;
      else
        hi = mid - 1;
    }
    p.stored[i - 1] = lo;
    rem -= columns_[i][lo];
  }
  return p;
}

bool BigDecoder::decode(const BitString& a, const BitString& b) const {
  Parsed pa = parse(a);
  Parsed pb = parse(b);
  if (pa.id == pb.id) return false;
  auto reports = [&](const Parsed& x, int other) {
    bool in_set = std::binary_search(x.stored.begin(), x.stored.end(), other);
    return x.complement ? !in_set : in_set;
  };
  return reports(pa, pb.id) || reports(pb, pa.id);
}

AdvantageReport advantage_range_check(int64_t n, int64_t k) {
  if (n < 1 || k < 1 || k > n) throw Error("advantage_range_check: need 1 <= k <= n");
  int64_t m = (k + 1) / 2;
  // log2 C(n, m) via Legendre exponents of every prime <= n; exact integer
  // arithmetic, floating point only in the final sum.
  std::vector<char> composite(n + 1, 0);
  double log2c = 0;
  for (int64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (int64_t q = p * p; q <= n; q += p) composite[q] = 1;
    int64_t exponent = 0;
    for (int64_t pw = p; pw <= n; pw *= p) {
      exponent += n / pw - m / pw - (n - m) / pw;
      if (pw > n / p) break;
    }
    if (exponent) log2c += static_cast<double>(exponent) * std::log2(static_cast<double>(p));
  }
  AdvantageReport r;
  r.n = n;
  r.k = k;
  r.f_bits = log2c + std::log2(static_cast<double>(k)) + std::log2(static_cast<double>(n));
  r.half_n = static_cast<double>(n) / 2.0;
  r.split_scheme_bits = static_cast<double>(m) * std::log2(static_cast<double>(n));
  r.literal_bound = static_cast<double>(m) + 2.0 * std::log2(static_cast<double>(n));
  r.under_half_n = r.f_bits < r.half_n;
  r.under_split_scheme = r.f_bits < r.split_scheme_bits;
  return r;
}

}  // namespace labeling
