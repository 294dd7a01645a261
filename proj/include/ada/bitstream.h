#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ada {

// Growable bit sequence packed MSB-first into bytes. Bits past size() in the
// last byte are always zero, so bytes() is directly usable as a payload.
class BitString {
 public:
  static constexpr unsigned kMaxFieldWidth = 64;

  BitString() = default;

  // Parses a literal '0'/'1' string. Any other character is a kParseError.
  static BitString from_string(std::string_view text);
  // Takes the first `bit_count` bits of `bytes`. Throws kTruncatedStream if
  // `bytes` is too short and kTrailingData if padding bits are non-zero.
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

  void push_back(bool bit);
  // Appends the low `width` bits of `value`, most significant first.
  // Throws kRange unless 1 <= width <= 64 and value < 2^width.
  void append(std::uint64_t value, unsigned width);
  void append(const BitString& other);

  bool operator[](std::size_t index) const {
    return (bytes_[index >> 3] >> (7 - (index & 7))) & 1u;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t byte_size() const noexcept { return bytes_.size(); }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  std::size_t count_ones() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

struct ReadResult {
  std::uint64_t value;
  std::size_t cursor;
};

void write_bits(BitString& stream, std::uint64_t value, unsigned width);

// Reads `width` bits at `cursor`. Throws kTruncatedStream on overrun.
ReadResult read_bits(const BitString& stream, std::size_t cursor, unsigned width);

// Sequential reader over a finished stream. The stream must outlive it.
class BitReader {
 public:
  explicit BitReader(const BitString& stream) : stream_(&stream) {}

  bool read_bit();
  std::uint64_t read(unsigned width);

  std::size_t position() const noexcept { return cursor_; }
  std::size_t remaining() const noexcept { return stream_->size() - cursor_; }
  bool exhausted() const noexcept { return cursor_ >= stream_->size(); }

 private:
  const BitString* stream_;
  std::size_t cursor_ = 0;
};

}  // namespace ada
