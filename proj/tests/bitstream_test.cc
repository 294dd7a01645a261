#include "ada/bitstream.h"

#include <gtest/gtest.h>

#include <random>

#include "ada/error.h"

namespace ada {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ada::Error";
  return ErrorCode::kIo;
}

TEST(BitStringTest, WriteBitsMsbFirst) {
  BitString s;
  write_bits(s, 5, 3);
  EXPECT_EQ(s.to_string(), "101");

  BitString t = BitString::from_string("1");
  write_bits(t, 0, 2);
  EXPECT_EQ(t.to_string(), "100");

  BitString u;
  write_bits(u, 7, 3);
  EXPECT_EQ(u.to_string(), "111");
}

TEST(BitStringTest, WriteRejectsValuesThatDoNotFit) {
  BitString s;
  EXPECT_EQ(code_of([&] { write_bits(s, 8, 3); }), ErrorCode::kRange);
  EXPECT_EQ(code_of([&] { write_bits(s, 0, 0); }), ErrorCode::kRange);
  EXPECT_EQ(code_of([&] { write_bits(s, 1, 65); }), ErrorCode::kRange);
  EXPECT_TRUE(s.empty());
}

TEST(BitStringTest, ReadBitsExamples) {
  const auto r1 = read_bits(BitString::from_string("101"), 0, 3);
  EXPECT_EQ(r1.value, 5u);
  EXPECT_EQ(r1.cursor, 3u);

  const auto r2 = read_bits(BitString::from_string("100"), 1, 2);
  EXPECT_EQ(r2.value, 0u);
  EXPECT_EQ(r2.cursor, 3u);
}

TEST(BitStringTest, ReadOverrunIsTruncatedStream) {
  const auto s = BitString::from_string("101");
  EXPECT_EQ(code_of([&] { read_bits(s, 1, 3); }), ErrorCode::kTruncatedStream);
  EXPECT_EQ(code_of([&] { read_bits(s, 4, 1); }), ErrorCode::kTruncatedStream);

  BitReader reader(s);
  reader.read(3);
  EXPECT_TRUE(reader.exhausted());
  EXPECT_EQ(code_of([&] { reader.read_bit(); }), ErrorCode::kTruncatedStream);
}

TEST(BitStringTest, FromStringRejectsNonBinary) {
  EXPECT_EQ(code_of([] { BitString::from_string("10x1"); }), ErrorCode::kParseError);
}

TEST(BitStringTest, ReadInvertsWriteForRandomFields) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 5000; ++iter) {
    const unsigned width = 1 + static_cast<unsigned>(rng() % 32);
    const std::uint64_t value = rng() & ((std::uint64_t{1} << width) - 1);
    BitString s;
    write_bits(s, value, width);
    const auto r = read_bits(s, 0, width);
    ASSERT_EQ(r.value, value) << "width " << width;
    ASSERT_EQ(r.cursor, width);
  }
}

TEST(BitStringTest, SequentialFieldsReadBackInOrder) {
  std::mt19937_64 rng(2);
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  BitString s;
  for (int i = 0; i < 2000; ++i) {
    const unsigned width = 1 + static_cast<unsigned>(rng() % 64);
    const std::uint64_t value = width == 64 ? rng() : rng() & ((std::uint64_t{1} << width) - 1);
    s.append(value, width);
    fields.emplace_back(value, width);
  }
  BitReader reader(s);
  for (const auto& [value, width] : fields) ASSERT_EQ(reader.read(width), value);
  EXPECT_TRUE(reader.exhausted());
}

TEST(BitStringTest, BytePackingPreservesOrderAndLength) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{8},
                        std::size_t{9}, std::size_t{4099}, std::size_t{1000000}}) {
    BitString s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(rng() & 1);
    ASSERT_EQ(s.size(), n);
    ASSERT_EQ(s.byte_size(), (n + 7) / 8);
    const auto back = BitString::from_bytes(s.bytes(), s.size());
    ASSERT_EQ(back, s) << n << " bits";
  }
}

TEST(BitStringTest, PaddingIsZero) {
  const auto s = BitString::from_string("111");
  ASSERT_EQ(s.byte_size(), 1u);
  EXPECT_EQ(s.bytes()[0], 0xE0);
}

TEST(BitStringTest, FromBytesValidatesLengthAndPadding) {
  const std::uint8_t data[] = {0xE0, 0xFF};
  EXPECT_EQ(code_of([&] { BitString::from_bytes(data, 17); }), ErrorCode::kTruncatedStream);
  EXPECT_EQ(code_of([&] { BitString::from_bytes(std::span(data, 1), 2); }),
            ErrorCode::kTrailingData);
  EXPECT_EQ(BitString::from_bytes(std::span(data, 1), 3).to_string(), "111");
}

TEST(BitStringTest, AppendConcatenatesAtAnyAlignment) {
  const auto a = BitString::from_string("10110");
  const auto b = BitString::from_string("0111000101");
  BitString joined = a;
  joined.append(b);
  EXPECT_EQ(joined.to_string(), "101100111000101");

  BitString aligned = BitString::from_string("11110000");
  aligned.append(a);
  EXPECT_EQ(aligned.to_string(), "1111000010110");
  EXPECT_EQ(aligned.count_ones(), 7u);
}

}  // namespace
}  // namespace ada
