#ifndef LABELING_SCHEME_COMBINADICS_HPP
#define LABELING_SCHEME_COMBINADICS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "labeling/bitstring.hpp"
#include "labeling/graph.hpp"

namespace labeling {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); 0 outside [0, n].
BigInt binomial(int n, int k);

/// Rank of a strictly increasing sequence over [0, n): sum of C(t_i, i),
/// i = 1..len. Bijective onto [0, C(n, len) - 1].
BigInt sigma_rank(const std::vector<int>& seq);

/// Inverse of sigma_rank: the unique length-`len` sequence over [0, n) with
/// the given rank.
std::vector<int> unrank(const BigInt& rank, int len, int n);

/// Label layout shared by encoder and decoder; rank_width is
/// ceil(log2 C(n, ceil(k/2))).
struct BigScheme {
  int n = 0;
  int k = 0;
  int id_width = 0;
  int size_width = 0;
  int rank_width = 0;

  static BigScheme make(int n, int k);
  int label_bits() const { return 1 + id_width + size_width + rank_width; }
};

struct BigEncodeResult {
  BigScheme scheme;
  std::vector<BitString> labels;
};

/// Flag 0: the stored set is the Euler-orientation out-neighbor set.
/// Flag 1 (degree >= 2n/3): the stored set is the complement of the
/// adjacency vector.
BigEncodeResult encode_big(const Graph& g, int k);

/// Decoder context: Pascal columns cached for unranking.
class BigDecoder {
 public:
  explicit BigDecoder(const BigScheme& scheme);
  bool decode(const BitString& a, const BitString& b) const;

 private:
  struct Parsed;
  Parsed parse(const BitString& s) const;
  BigScheme scheme_;
  std::vector<std::vector<BigInt>> columns_;  // columns_[i][t] = C(t, i)
};

/// Numeric comparison of the scheme size f(n,k) = log2 C(n, ceil(k/2)) +
/// log2 k + log2 n against the competing bounds; exact prime-factorization
/// arithmetic, floating point only in the reported logs.
struct AdvantageReport {
  int64_t n = 0;
  int64_t k = 0;
  double f_bits = 0;             // f(n, k)
  double half_n = 0;             // n / 2
  double split_scheme_bits = 0;  // ceil(k/2) * log2 n
  double literal_bound = 0;      // ceil(k/2) + 2 log2 n
  bool under_half_n = false;
  bool under_split_scheme = false;
};

AdvantageReport advantage_range_check(int64_t n, int64_t k);

}  // namespace labeling

#endif
