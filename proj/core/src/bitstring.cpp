#include "labeling/bitstring.hpp"

#include <charconv>

#include "labeling/errors.hpp"

namespace labeling {

namespace {
constexpr uint64_t kMsb = uint64_t{1} << 63;

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

bool BitString::bit(size_t i) const {
  return (words_[i / 64] >> (63 - (i % 64))) & 1u;
}

void BitString::push_back(bool b) {
  if (len_ % 64 == 0) words_.push_back(0);
  if (b) words_[len_ / 64] |= kMsb >> (len_ % 64);
  ++len_;
}

void BitString::append(const BitString& other) {
  for (size_t i = 0; i < other.len_; ++i) push_back(other.bit(i));
}

void BitString::append_field(uint64_t value, int width) {
  if (width < 0 || width > 64) throw Error("append_field: bad width");
  if (width < 64 && value >> width) throw Error("append_field: value does not fit in field");
  for (int j = width - 1; j >= 0; --j) push_back((value >> j) & 1u);
}

uint64_t BitString::read_field(size_t pos, int width) const {
  if (width < 0 || width > 64 || pos + width > len_)
    throw CorruptLabelError("read_field: out of range");
  uint64_t v = 0;
  for (int j = 0; j < width; ++j) v = (v << 1) | uint64_t(bit(pos + j));
  return v;
}

BitString BitString::slice(size_t pos, size_t len) const {
  if (pos + len > len_) throw CorruptLabelError("slice: out of range");
  BitString r;
  for (size_t i = 0; i < len; ++i) r.push_back(bit(pos + i));
  return r;
}

std::string BitString::to_string() const {
  std::string s(len_, '0');
  for (size_t i = 0; i < len_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

BitString BitString::from_string(std::string_view s) {
  BitString r;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("bit string: expected 0 or 1");
    r.push_back(c == '1');
  }
  return r;
}

std::string BitString::to_hex_line() const {
  std::string out = std::to_string(len_);
  out += ':';
  static const char* digits = "0123456789abcdef";
  for (size_t i = 0; i < len_; i += 4) {
    int nib = 0;
    for (size_t j = 0; j < 4; ++j) {
      nib <<= 1;
      if (i + j < len_ && bit(i + j)) nib |= 1;
    }
    out += digits[nib];
  }
  return out;
}

BitString BitString::from_hex_line(std::string_view line) {
  size_t colon = line.find(':');
  if (colon == std::string_view::npos) throw ParseError("label line: missing ':'");
  size_t len = 0;
  auto head = line.substr(0, colon);
  auto res = std::from_chars(head.data(), head.data() + head.size(), len);
  if (res.ec != std::errc() || res.ptr != head.data() + head.size())
    throw ParseError("label line: bad bit length");
  auto hex = line.substr(colon + 1);
  if (hex.size() != (len + 3) / 4) throw ParseError("label line: hex length mismatch");
  BitString r;
  for (size_t i = 0; i < hex.size(); ++i) {
    int nib = hex_digit(hex[i]);
    if (nib < 0) throw ParseError("label line: bad hex digit");
    for (int j = 3; j >= 0; --j) {
      size_t pos = 4 * i + (3 - j);
      bool b = (nib >> j) & 1;
      if (pos < len) {
        r.push_back(b);
      } else if (b) {
        throw ParseError("label line: nonzero fill bits");
      }
    }
  }
  return r;
}

bool operator==(const BitString& a, const BitString& b) {
  if (a.len_ != b.len_) return false;
  return a.words_ == b.words_;
}

size_t BitString::hash() const {
  uint64_t h = 1469598103934665603ull ^ len_;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

BitString pad_unambiguous(const BitString& s, size_t target) {
  if (s.size() >= target) throw Error("pad_unambiguous: no room for the marker bit");
  BitString r = s;
  r.push_back(true);
  while (r.size() < target) r.push_back(false);
  return r;
}

BitString strip_padding(const BitString& s) {
  for (size_t i = s.size(); i-- > 0;) {
    if (s.bit(i)) return s.slice(0, i);
  }
  throw CorruptLabelError("strip_padding: no marker bit");
}

}  // namespace labeling
