#ifndef LABELING_BITSTRING_HPP
#define LABELING_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace labeling {

/// An immutable-by-convention bit string. Bit 0 is the most significant bit
/// of the first word; fields are big-endian so lexicographic label order
/// mirrors numeric field order.
class BitString {
 public:
  BitString() = default;

  size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool bit(size_t i) const;
  void push_back(bool b);
  void append(const BitString& other);

  /// Appends the big-endian width-bit encoding of value. Throws if the value
  /// does not fit (value >= 2^width). width == 0 is a no-op for value == 0.
  void append_field(uint64_t value, int width);
  uint64_t read_field(size_t pos, int width) const;

  BitString slice(size_t pos, size_t len) const;

  std::string to_string() const;
  static BitString from_string(std::string_view s);

  /// Label-file line encoding: "<bitlen>:<hex>", hex left-aligned in nibbles
  /// and zero-filled on the right.
  std::string to_hex_line() const;
  static BitString from_hex_line(std::string_view line);

  friend bool operator==(const BitString& a, const BitString& b);
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
  size_t hash() const;

 private:
  std::vector<uint64_t> words_;
  size_t len_ = 0;
};

struct BitStringHash {
  size_t operator()(const BitString& s) const { return s.hash(); }
};

/// Returns s . "1" . "0"^(target - |s| - 1). Requires |s| < target.
BitString pad_unambiguous(const BitString& s, size_t target);

/// Inverse of pad_unambiguous for any payload. Throws CorruptLabelError on
/// an all-zero string (no marker bit).
BitString strip_padding(const BitString& s);

}  // namespace labeling

#endif
