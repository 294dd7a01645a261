#pragma once

// Reference computations used only by tests. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ada/huffman.h"

namespace ada::testing {

// Minimum of sum(count_i * length_i) over all complete prefix codes, found by
// enumerating non-decreasing length vectors with sum 2^-l == 1 and pairing
// them with counts sorted descending.
inline std::uint64_t brute_force_min_weighted_length(std::vector<std::uint64_t> counts) {
  if (counts.size() == 1) return counts[0];
  std::sort(counts.rbegin(), counts.rend());
  const std::size_t n = counts.size();
  const unsigned max_len = static_cast<unsigned>(n - 1);
  const std::uint64_t full = std::uint64_t{1} << max_len;

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<unsigned> lengths(n);
  std::function<void(std::size_t, unsigned, std::uint64_t, std::uint64_t)> walk =
      [&](std::size_t i, unsigned min_len, std::uint64_t kraft, std::uint64_t cost) {
        if (i == n) {
          if (kraft == full) best = std::min(best, cost);
          return;
        }
        for (unsigned l = min_len; l <= max_len; ++l) {
          const std::uint64_t k = kraft + (full >> l);
          if (k > full) continue;
          lengths[i] = l;
          walk(i + 1, l, k, cost + counts[i] * l);
        }
      };
  walk(0, 1, 0, 0);
  return best;
}

inline bool pairwise_prefix_free(const CodeBook& book) {
  std::vector<std::string> codes;
  for (const auto& e : book.canonical_order()) codes.push_back(e.code.to_string());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j < codes.size(); ++j) {
      if (i != j && codes[j].compare(0, codes[i].size(), codes[i]) == 0) return false;
    }
  }
  return true;
}

inline double kraft_sum(const CodeBook& book) {
  double s = 0;
  for (const auto& e : book.canonical_order()) s += std::ldexp(1.0, -int{e.code.length});
  return s;
}

// Per-position cost model of the two streams: a position after the first is
// distance-coded when |d| <= T and its codeword is at least 2 + x bits long.
struct StreamSizes {
  std::uint64_t encoded = 0;
  std::uint64_t adjacent = 0;
  std::uint64_t heads = 0;
  std::uint64_t entries = 0;
};

inline StreamSizes predicted_sizes(const std::string& message, const CodeBook& book,
                                   unsigned max_distance, unsigned width) {
  StreamSizes s;
  for (std::size_t i = 0; i < message.size(); ++i) {
    const auto cur = static_cast<unsigned char>(message[i]);
    const unsigned len = book.at(cur).length;
    bool entry = false;
    if (i > 0) {
      const int d = int{cur} - int{static_cast<unsigned char>(message[i - 1])};
      entry = static_cast<unsigned>(d < 0 ? -d : d) <= max_distance && len >= 2 + width;
    }
    if (entry) {
      s.adjacent += 2 + width;
      ++s.entries;
    } else {
      s.encoded += len;
      s.adjacent += 1;
      ++s.heads;
    }
  }
  return s;
}

inline std::string random_bytes(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> byte(0, 255);
  std::string s(len(rng), '\0');
  for (auto& c : s) c = static_cast<char>(byte(rng));
  return s;
}

// Text-like bytes: a small alphabet drawn from a window of byte values, so
// that adjacency entries actually occur.
inline std::string random_text(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> base(0, 200);
  std::uniform_int_distribution<int> span(1, 55);
  const int lo = base(rng);
  std::uniform_int_distribution<int> byte(lo, lo + span(rng));
  std::string s(len(rng), '\0');
  for (auto& c : s) c = static_cast<char>(byte(rng));
  return s;
}

// Hand-assigned (non-canonical) code book for the worked example message.
inline CodeBook worked_example_book() {
  const std::vector<std::pair<char, const char*>> rows = {
      {'o', "110"}, {'g', "010"},  {'n', "011"},  {'i', "000"},  {' ', "001"},  {'H', "1000"},
      {'!', "1001"}, {'d', "1010"}, {'m', "1011"}, {'r', "1110"}, {'.', "1111"}};
  std::vector<CodeBook::Entry> entries;
  for (const auto& [c, bits] : rows) {
    entries.push_back({static_cast<Symbol>(c), Codeword::parse(bits)});
  }
  return CodeBook::from_entries(entries);
}

inline constexpr const char* kWorkedExample = "Hi! good morning.";

}  // namespace ada::testing
