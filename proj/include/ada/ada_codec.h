#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ada/bitstream.h"
#include "ada/huffman.h"

namespace ada {

// Maximum admitted distance between adjacent symbols, tied to the magnitude
// field width by max_distance = 2^width - 1 with width in [1, 8].
class Threshold {
 public:
  static constexpr unsigned kMinWidth = 1;
  static constexpr unsigned kMaxWidth = 8;

  // Defaults to T = 7.
  constexpr Threshold() = default;

  // Throws kBadThreshold unless t + 1 is a power of two in [2, 256].
  static Threshold from_max_distance(unsigned t);
  // Throws kBadThreshold unless width is in [1, 8].
  static Threshold from_width(unsigned width);

  constexpr unsigned max_distance() const noexcept { return (1u << width_) - 1; }
  constexpr unsigned width() const noexcept { return width_; }
  // Start bit, sign bit, magnitude.
  constexpr unsigned entry_bits() const noexcept { return 2 + width_; }

  friend constexpr bool operator==(Threshold, Threshold) = default;

 private:
  constexpr explicit Threshold(unsigned width) : width_(width) {}
  unsigned width_ = 3;
};

// The compression artifact: run-head codewords in `encoded`, distance
// entries and run separators in `adjacent`.
//
// adjacent grammar, one group per run:  ( '1' sign magnitude[width] )* '0'
struct EncodedMessage {
  CodeBook dictionary;
  Threshold threshold;
  std::uint32_t original_length = 0;
  BitString encoded;
  BitString adjacent;

  friend bool operator==(const EncodedMessage&, const EncodedMessage&) = default;
};

// True iff |next - prev| <= T and next's codeword is at least as long as a
// distance entry (2 + width bits). Throws kUnknownSymbol if either symbol is
// missing from the book.
bool qualifies(Symbol prev, Symbol next, const CodeBook& book, Threshold threshold);

// Throws kEmptyInput, kUnknownSymbol, or kRange for messages over 2^32 - 1 bytes.
EncodedMessage encode(std::span<const std::uint8_t> message, Threshold threshold,
                      const CodeBook& book);
EncodedMessage encode(std::string_view message, Threshold threshold, const CodeBook& book);

// Builds the book from the message's own frequencies.
EncodedMessage encode(std::span<const std::uint8_t> message, Threshold threshold);
EncodedMessage encode(std::string_view message, Threshold threshold);

struct DecodeStats {
  // Codewords resolved through the dictionary. Equals the run count.
  std::uint64_t dictionary_lookups = 0;
  std::uint64_t heads = 0;
  std::uint64_t entries = 0;
  std::uint64_t separators = 0;
  // Per-symbol count of occurrences reconstructed from distance entries.
  std::array<std::uint64_t, 256> adjacency_counts{};
};

// Reconstructs the message with `adjacent` as the driver: one dictionary
// lookup per run head, followers rebuilt from distances alone.
//
// Throws kTruncatedStream, kInvalidCodeword, kValueOutOfRange, or
// kTrailingData when either stream has bits left after original_length
// symbols.
std::vector<std::uint8_t> decode(const EncodedMessage& message, DecodeStats* stats = nullptr);
std::string decode_to_string(const EncodedMessage& message, DecodeStats* stats = nullptr);

// Symbols described by a well-formed adjacent stream (heads + entries).
std::uint64_t count_symbols(const BitString& adjacent, Threshold threshold);

// Binary container.
//
//   "ADA1" | version u8 = 1 | width u8 | flags u8 = 0 | original_length u32 BE
//   | symbol_count u16 BE | { symbol u8 | length u8 | codeword, ceil(len/8) bytes } ...
//   | encoded_bits u32 BE | adjacent_bits u32 BE
//   | encoded payload (zero padded) | adjacent payload (zero padded)
inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'A', 'D', 'A', '1'};
inline constexpr std::uint8_t kContainerVersion = 1;

std::vector<std::uint8_t> pack_container(const EncodedMessage& message);

// Throws kTruncatedStream, kBadMagic, kUnsupportedVersion, kBadThreshold,
// kTrailingData, or any CodeBook validation error for the dictionary.
EncodedMessage unpack_container(std::span<const std::uint8_t> data);

// Size in bits of the packed dictionary section (symbol_count onward).
std::uint64_t dictionary_section_bits(const CodeBook& book);

// Human-readable triple: dictionary text plus the two streams as '0'/'1'.
struct DebugText {
  std::string dictionary;
  std::string encoded;
  std::string adjacent;
};

DebugText to_debug_text(const EncodedMessage& message);
// The original length is recovered from the adjacent stream's structure.
EncodedMessage from_debug_text(const DebugText& text, Threshold threshold);

}  // namespace ada
