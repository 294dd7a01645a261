#include "ada/bitstream.h"

#include <bit>

#include "ada/error.h"

namespace ada {

namespace {

void check_width(unsigned width) {
  if (width < 1 || width > BitString::kMaxFieldWidth) {
    throw Error(ErrorCode::kRange, "bit field width " + std::to_string(width) +
                                       " outside [1, 64]");
  }
}

}  // namespace

BitString BitString::from_string(std::string_view text) {
  BitString out;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kParseError,
                  std::string("unexpected character '") + c + "' in bit string");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  const std::size_t needed = (bit_count + 7) / 8;
  if (bytes.size() < needed) {
    throw Error(ErrorCode::kTruncatedStream, "need " + std::to_string(needed) +
                                                 " bytes for " + std::to_string(bit_count) +
                                                 " bits, have " + std::to_string(bytes.size()));
  }
  BitString out;
  out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(needed));
  out.size_ = bit_count;
  if (const unsigned tail = bit_count & 7; tail != 0) {
    const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> tail);
    if (out.bytes_.back() & pad_mask) {
      throw Error(ErrorCode::kTrailingData, "non-zero padding bits after bit payload");
    }
  }
  return out;
}

void BitString::push_back(bool bit) {
  if ((size_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
  ++size_;
}

void BitString::append(std::uint64_t value, unsigned width) {
  check_width(width);
  if (width < 64 && (value >> width) != 0) {
    throw Error(ErrorCode::kRange, "value " + std::to_string(value) + " does not fit in " +
                                       std::to_string(width) + " bits");
  }
  for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
}

void BitString::append(const BitString& other) {
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t n = 0;
  for (std::uint8_t b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

void write_bits(BitString& stream, std::uint64_t value, unsigned width) {
  stream.append(value, width);
}

ReadResult read_bits(const BitString& stream, std::size_t cursor, unsigned width) {
  check_width(width);
  if (cursor > stream.size() || stream.size() - cursor < width) {
    throw Error(ErrorCode::kTruncatedStream,
                "read of " + std::to_string(width) + " bits at offset " + std::to_string(cursor) +
                    " overruns " + std::to_string(stream.size()) + "-bit stream");
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) value = (value << 1) | (stream[cursor + i] ? 1u : 0u);
  return {value, cursor + width};
}

bool BitReader::read_bit() {
  if (exhausted()) {
    throw Error(ErrorCode::kTruncatedStream,
                "bit stream ended at offset " + std::to_string(cursor_));
  }
  return (*stream_)[cursor_++];
}

std::uint64_t BitReader::read(unsigned width) {
  auto [value, next] = read_bits(*stream_, cursor_, width);
  cursor_ = next;
  return value;
}

}  // namespace ada
