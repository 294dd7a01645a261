#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ada/ada_codec.h"
#include "ada/huffman.h"

namespace ada {

// GSM 7-bit default alphabet: one segment is 160 septets = 1120 bits.
inline constexpr std::uint64_t kGsmBitsPerChar = 7;
inline constexpr std::uint64_t kGsmSegmentChars = 160;
inline constexpr std::uint64_t kGsmSegmentBits = kGsmBitsPerChar * kGsmSegmentChars;

using AdjacencyCounts = std::array<std::uint64_t, 256>;

// Bit budget of one encoded message.
struct SizeBreakdown {
  std::uint64_t delta1 = 0;          // run-head codewords
  std::uint64_t delta2 = 0;          // distance entries
  std::uint64_t header_bits = 0;     // packed dictionary section
  std::uint64_t separator_bits = 0;  // run separators

  std::uint64_t total() const noexcept { return delta1 + delta2 + header_bits + separator_bits; }
};

std::uint64_t total_size(const SizeBreakdown& parts);

// Sum over symbols of (F_i - A_i) * codeword length. Throws kInvalidCounts if
// some A_i exceeds F_i (or names a symbol absent from `freq`), and
// kUnknownSymbol if the book misses a symbol of `freq`.
std::uint64_t delta1(const FrequencyTable& freq, const AdjacencyCounts& adjacency_counts,
                     const CodeBook& book);

// Magnitude bits only: M * width.
std::uint64_t delta2(std::uint64_t total_adjacencies, Threshold threshold);
// What the adjacent stream actually spends: M * (2 + width).
std::uint64_t delta2_wire(std::uint64_t total_adjacencies, Threshold threshold);

struct GsmBaseline {
  std::uint64_t bits;
  std::uint64_t segments;
};

GsmBaseline gsm_baseline(std::uint64_t length);

// Values in hundredths, the way the metrics are published: bits per char
// truncated, max chars rounded half away from zero, and the enhancement
// derived from the rounded max chars then rounded again.
struct RoundedMetrics {
  std::int64_t bits_per_char_centi;
  std::int64_t max_chars_centi;
  std::int64_t enhancement_centi;
};

struct ReportRow {
  std::string case_id;
  std::uint64_t length = 0;
  std::uint64_t total_bits = 0;
  double bits_per_char = 0;
  std::uint64_t gsm_bits = 0;
  double max_chars = 0;
  double enhancement_pct = 0;

  RoundedMetrics rounded() const;
};

// Throws kDivisionByZero when length or total_bits is zero.
ReportRow report_row(std::string case_id, std::uint64_t length, std::uint64_t total_bits);

// "-12.05", "214.54".
std::string format_centi(std::int64_t centi);

// Size model of an encoded message, computed from the symbol frequencies and
// per-symbol adjacency counts recovered by decoding it.
struct StreamAnalysis {
  SizeBreakdown breakdown;          // delta2 in wire form
  std::uint64_t delta2_magnitude;   // delta2 in magnitude-only form
  std::uint64_t heads = 0;
  std::uint64_t entries = 0;
};

StreamAnalysis analyze(const EncodedMessage& message);

}  // namespace ada
