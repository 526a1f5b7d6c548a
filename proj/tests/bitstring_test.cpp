#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "labeling/bitstring.hpp"
#include "labeling/errors.hpp"

using namespace labeling;

TEST_CASE("append_field is big-endian") {
  BitString s;
  s.append_field(5, 3);
  CHECK(s.to_string() == "101");

  BitString t = BitString::from_string("1");
  t.append_field(0, 2);
  CHECK(t.to_string() == "100");
}

TEST_CASE("field round trip") {
  BitString s;
  s.append_field(6, 3);
  CHECK(s.read_field(0, 3) == 6);

  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    int width = 1 + static_cast<int>(rng() % 62);
    uint64_t value = rng() & ((uint64_t{1} << width) - 1);
    size_t lead = rng() % 9;
    BitString b;
    for (size_t i = 0; i < lead; ++i) b.push_back(rng() & 1);
    b.append_field(value, width);
    CHECK(b.read_field(lead, width) == value);
  }
}

TEST_CASE("append_field rejects oversized values") {
  BitString s;
  CHECK_THROWS_AS(s.append_field(8, 3), Error);
}

TEST_CASE("padding examples") {
  CHECK(pad_unambiguous(BitString::from_string("10"), 5).to_string() == "10100");
  CHECK(strip_padding(BitString::from_string("10100")).to_string() == "10");
  CHECK(pad_unambiguous(BitString(), 1).to_string() == "1");
  CHECK(strip_padding(pad_unambiguous(BitString(), 1)).empty());
  CHECK_THROWS_AS(pad_unambiguous(BitString::from_string("10"), 2), Error);
  CHECK_THROWS_AS(strip_padding(BitString::from_string("0000")), CorruptLabelError);
}

TEST_CASE("pad/strip round trip on random payloads") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 4000; ++it) {
    size_t len = rng() % 40;
    BitString s;
    for (size_t i = 0; i < len; ++i) s.push_back(rng() & 1);
    size_t target = len + 1 + rng() % 20;
    BitString padded = pad_unambiguous(s, target);
    CHECK(padded.size() == target);
    CHECK(strip_padding(padded) == s);
  }
}

TEST_CASE("hex line round trip") {
  CHECK(BitString::from_string("10").to_hex_line() == "2:8");
  CHECK(BitString::from_hex_line("2:8") == BitString::from_string("10"));
  std::mt19937_64 rng(99);
  for (int it = 0; it < 1000; ++it) {
    size_t len = rng() % 130;
    BitString s;
    for (size_t i = 0; i < len; ++i) s.push_back(rng() & 1);
    CHECK(BitString::from_hex_line(s.to_hex_line()) == s);
  }
  CHECK_THROWS_AS(BitString::from_hex_line("3:9"), ParseError);  // nonzero fill bit
  CHECK_THROWS_AS(BitString::from_hex_line("8:f"), ParseError);  // short hex
  CHECK_THROWS_AS(BitString::from_hex_line("nope"), ParseError);
}

TEST_CASE("slice and append") {
  BitString s = BitString::from_string("110101");
  CHECK(s.slice(2, 3).to_string() == "010");
  BitString t = s.slice(0, 3);
  t.append(s.slice(3, 3));
  CHECK(t == s);
}
