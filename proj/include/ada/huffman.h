#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ada/bitstream.h"

namespace ada {

// One byte of input. Distances between symbols are taken on the byte value.
using Symbol = std::uint8_t;

inline constexpr unsigned kMaxCodewordLength = 64;

// A prefix codeword of 1..64 bits, held right-aligned in `bits` and emitted
// MSB-first. A zero length marks an absent entry.
struct Codeword {
  std::uint64_t bits = 0;
  std::uint8_t length = 0;

  // Parses a '0'/'1' literal such as "1001".
  static Codeword parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Occurrence counts per distinct symbol. entries() is ordered by descending
// count, ties broken by ascending byte value.
class FrequencyTable {
 public:
  struct Entry {
    Symbol symbol;
    std::uint64_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  FrequencyTable() = default;

  // Throws kInvalidCounts on a zero count or a repeated symbol.
  static FrequencyTable from_counts(std::span<const Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint64_t count(Symbol symbol) const noexcept { return counts_[symbol]; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::array<std::uint64_t, 256> counts_{};
  std::uint64_t total_ = 0;
};

// Symbol to prefix-free codeword map. Construction validates the code:
// prefix-free, and for two or more symbols a complete code (Kraft sum 1).
class CodeBook {
 public:
  struct Entry {
    Symbol symbol;
    Codeword code;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CodeBook() = default;

  // Throws kEmptyInput, kInvalidCodeword, kDuplicateSymbol, kPrefixViolation
  // or kKraftViolation.
  static CodeBook from_entries(std::span<const Entry> entries);

  bool contains(Symbol symbol) const noexcept { return codes_[symbol].length != 0; }
  // Throws kUnknownSymbol when absent.
  const Codeword& at(Symbol symbol) const;

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  unsigned max_length() const noexcept;

  // Entries sorted by (length ascending, symbol ascending).
  std::vector<Entry> canonical_order() const;

  // Sum of count * codeword length. Throws kUnknownSymbol if `freq` holds a
  // symbol the book does not cover.
  std::uint64_t weighted_length(const FrequencyTable& freq) const;

  friend bool operator==(const CodeBook&, const CodeBook&) = default;

 private:
  std::array<Codeword, 256> codes_{};
  std::size_t size_ = 0;
};

// Resolves codewords read from a bit stream back to symbols.
class CodewordIndex {
 public:
  explicit CodewordIndex(const CodeBook& book);

  // Consumes exactly one codeword. Throws kInvalidCodeword when no codeword
  // matches and kTruncatedStream when the stream ends mid-codeword.
  Symbol decode(BitReader& reader) const;

 private:
  struct Slot {
    std::uint64_t bits;
    Symbol symbol;
  };
  // by_length_[l] holds the codes of length l sorted by bits.
  std::vector<std::vector<Slot>> by_length_;
};

// Throws kEmptyInput on an empty message.
FrequencyTable build_frequency_table(std::span<const std::uint8_t> message);
FrequencyTable build_frequency_table(std::string_view message);

// Huffman code lengths for `freq`, in the order of freq.entries(). A single
// symbol gets length 1. Throws kEmptyInput on an empty table.
std::vector<std::uint8_t> huffman_code_lengths(const FrequencyTable& freq);

struct SymbolLength {
  Symbol symbol;
  std::uint8_t length;
};

// Assigns canonical codewords: entries ordered by (length, symbol), codes
// counting upward. The lengths must satisfy Kraft (equality for >= 2
// symbols); the resulting book is validated like any other.
CodeBook canonical_codebook(std::span<const SymbolLength> lengths);

// Deterministic Huffman book: optimal lengths, canonical codewords.
CodeBook build_codebook(const FrequencyTable& freq);

// Line-oriented dictionary text: the symbol count, then one
// "<escaped symbol> <length> <codeword>" line per symbol in canonical order.
std::string serialize_dictionary(const CodeBook& book);
CodeBook parse_dictionary(std::string_view text);

std::string escape_symbol(Symbol symbol);

}  // namespace ada
