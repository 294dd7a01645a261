#include "ada/huffman.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <deque>
#include <numeric>

#include "ada/error.h"

namespace ada {

namespace {

__extension__ typedef unsigned __int128 u128;

// Codewords compare as bit strings: left-align, then shorter first on ties.
bool lexicographic_less(const Codeword& a, const Codeword& b) {
  const std::uint64_t la = a.bits << (64 - a.length);
  const std::uint64_t lb = b.bits << (64 - b.length);
  if (la != lb) return la < lb;
  return a.length < b.length;
}

bool is_prefix_of(const Codeword& shorter, const Codeword& longer) {
  if (shorter.length > longer.length) return false;
  return (longer.bits >> (longer.length - shorter.length)) == shorter.bits;
}

std::string describe(Symbol s) { return "'" + escape_symbol(s) + "'"; }

}  // namespace

Codeword Codeword::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxCodewordLength) {
    throw Error(ErrorCode::kInvalidCodeword,
                "codeword must have 1 to 64 bits, got " + std::to_string(text.size()));
  }
  Codeword cw;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidCodeword, "codeword '" + std::string(text) +
                                                   "' contains a non-binary character");
    }
    cw.bits = (cw.bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  cw.length = static_cast<std::uint8_t>(text.size());
  return cw;
}

std::string Codeword::to_string() const {
  std::string out(length, '0');
  for (unsigned i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

FrequencyTable FrequencyTable::from_counts(std::span<const Entry> entries) {
  FrequencyTable table;
  for (const Entry& e : entries) {
    if (e.count == 0) {
      throw Error(ErrorCode::kInvalidCounts, "zero count for symbol " + describe(e.symbol));
    }
    if (table.counts_[e.symbol] != 0) {
      throw Error(ErrorCode::kInvalidCounts, "repeated symbol " + describe(e.symbol));
    }
    table.counts_[e.symbol] = e.count;
    table.total_ += e.count;
  }
  table.entries_.assign(entries.begin(), entries.end());
  std::sort(table.entries_.begin(), table.entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.symbol < b.symbol;
  });
  return table;
}

CodeBook CodeBook::from_entries(std::span<const Entry> entries) {
  if (entries.empty()) throw Error(ErrorCode::kEmptyInput, "code book has no symbols");

  CodeBook book;
  for (const Entry& e : entries) {
    if (e.code.length == 0 || e.code.length > kMaxCodewordLength) {
      throw Error(ErrorCode::kInvalidCodeword, "codeword length " +
                                                   std::to_string(e.code.length) + " for " +
                                                   describe(e.symbol) + " outside [1, 64]");
    }
    if (e.code.length < 64 && (e.code.bits >> e.code.length) != 0) {
      throw Error(ErrorCode::kInvalidCodeword,
                  "codeword bits for " + describe(e.symbol) + " exceed its length");
    }
    if (book.contains(e.symbol)) {
      throw Error(ErrorCode::kDuplicateSymbol, "symbol " + describe(e.symbol) + " listed twice");
    }
    book.codes_[e.symbol] = e.code;
    ++book.size_;
  }

  std::vector<Entry> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Entry& a, const Entry& b) { return lexicographic_less(a.code, b.code); });
  // In lexicographic order a prefix sorts immediately before some code it
  // prefixes, so adjacent pairs suffice.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (is_prefix_of(sorted[i - 1].code, sorted[i].code)) {
      throw Error(ErrorCode::kPrefixViolation, "codeword " + sorted[i - 1].code.to_string() +
                                                   " of " + describe(sorted[i - 1].symbol) +
                                                   " is a prefix of " +
                                                   sorted[i].code.to_string() + " of " +
                                                   describe(sorted[i].symbol));
    }
  }

  if (sorted.size() >= 2) {
    // Sum of 2^(64 - l) must equal 2^64 exactly.
    u128 kraft = 0;
    for (const Entry& e : sorted) kraft += u128{1} << (64 - e.code.length);
    if (kraft != (u128{1} << 64)) {
      throw Error(ErrorCode::kKraftViolation, "Kraft sum of code lengths is not 1");
    }
  }
  return book;
}

const Codeword& CodeBook::at(Symbol symbol) const {
  if (!contains(symbol)) {
    throw Error(ErrorCode::kUnknownSymbol, "symbol " + describe(symbol) + " not in code book");
  }
  return codes_[symbol];
}

unsigned CodeBook::max_length() const noexcept {
  unsigned m = 0;
  for (const Codeword& c : codes_) m = std::max<unsigned>(m, c.length);
  return m;
}

std::vector<CodeBook::Entry> CodeBook::canonical_order() const {
  std::vector<Entry> out;
  out.reserve(size_);
  for (unsigned s = 0; s < 256; ++s) {
    if (codes_[s].length != 0) out.push_back({static_cast<Symbol>(s), codes_[s]});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& a, const Entry& b) { return a.code.length < b.code.length; });
  return out;
}

std::uint64_t CodeBook::weighted_length(const FrequencyTable& freq) const {
  std::uint64_t total = 0;
  for (const auto& e : freq.entries()) total += e.count * at(e.symbol).length;
  return total;
}

CodewordIndex::CodewordIndex(const CodeBook& book) : by_length_(book.max_length() + 1) {
  for (const auto& e : book.canonical_order()) {
    by_length_[e.code.length].push_back({e.code.bits, e.symbol});
  }
  for (auto& slots : by_length_) {
    std::sort(slots.begin(), slots.end(),
              [](const Slot& a, const Slot& b) { return a.bits < b.bits; });
  }
}

Symbol CodewordIndex::decode(BitReader& reader) const {
  const std::size_t start = reader.position();
  std::uint64_t acc = 0;
  for (std::size_t len = 1; len < by_length_.size(); ++len) {
    acc = (acc << 1) | static_cast<std::uint64_t>(reader.read_bit());
    const auto& slots = by_length_[len];
    auto it = std::lower_bound(slots.begin(), slots.end(), acc,
                               [](const Slot& s, std::uint64_t v) { return s.bits < v; });
    if (it != slots.end() && it->bits == acc) return it->symbol;
  }
  throw Error(ErrorCode::kInvalidCodeword,
              "no codeword matches the bits at offset " + std::to_string(start));
}

FrequencyTable build_frequency_table(std::span<const std::uint8_t> message) {
  if (message.empty()) throw Error(ErrorCode::kEmptyInput, "message is empty");
  std::array<std::uint64_t, 256> counts{};
  for (std::uint8_t b : message) ++counts[b];
  std::vector<FrequencyTable::Entry> entries;
  for (unsigned s = 0; s < 256; ++s) {
    if (counts[s] != 0) entries.push_back({static_cast<Symbol>(s), counts[s]});
  }
  return FrequencyTable::from_counts(entries);
}

FrequencyTable build_frequency_table(std::string_view message) {
  return build_frequency_table(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(message.data()), message.size()));
}

std::vector<std::uint8_t> huffman_code_lengths(const FrequencyTable& freq) {
  if (freq.empty()) throw Error(ErrorCode::kEmptyInput, "frequency table is empty");
  const auto& entries = freq.entries();
  const std::size_t n = entries.size();
  if (n == 1) return {1};

  // Two-queue construction. Leaves and merged nodes are both ordered by
  // (weight, smallest contained symbol); merged nodes are produced in
  // non-decreasing weight so each queue only ever pops from its front.
  struct Node {
    std::uint64_t weight;
    Symbol min_symbol;
    std::size_t parent;
  };
  constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  for (const auto& e : entries) nodes.push_back({e.count, e.symbol, kNoParent});

  std::vector<std::size_t> leaves(n);
  std::iota(leaves.begin(), leaves.end(), std::size_t{0});
  std::sort(leaves.begin(), leaves.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight < nodes[b].weight;
    return nodes[a].min_symbol < nodes[b].min_symbol;
  });

  std::deque<std::size_t> leaf_queue(leaves.begin(), leaves.end());
  std::deque<std::size_t> merged_queue;
  auto key_less = [&](std::size_t a, std::size_t b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight < nodes[b].weight;
    return nodes[a].min_symbol < nodes[b].min_symbol;
  };
  auto pop_smallest = [&] {
    std::deque<std::size_t>* from = nullptr;
    if (merged_queue.empty()) {
      from = &leaf_queue;
    } else if (leaf_queue.empty()) {
      from = &merged_queue;
    } else {
      from = key_less(merged_queue.front(), leaf_queue.front()) ? &merged_queue : &leaf_queue;
    }
    const std::size_t id = from->front();
    from->pop_front();
    return id;
  };

  for (std::size_t step = 0; step + 1 < n; ++step) {
    const std::size_t a = pop_smallest();
    const std::size_t b = pop_smallest();
    const std::size_t id = nodes.size();
    nodes.push_back({nodes[a].weight + nodes[b].weight,
                     std::min(nodes[a].min_symbol, nodes[b].min_symbol), kNoParent});
    nodes[a].parent = id;
    nodes[b].parent = id;
    merged_queue.push_back(id);
  }

  // Parents always have larger ids, so depths resolve in one reverse sweep.
  std::vector<unsigned> depth(nodes.size(), 0);
  for (std::size_t id = nodes.size() - 1; id-- > 0;) depth[id] = depth[nodes[id].parent] + 1;

  std::vector<std::uint8_t> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (depth[i] > kMaxCodewordLength) {
      throw Error(ErrorCode::kRange, "Huffman code length " + std::to_string(depth[i]) +
                                         " exceeds 64 bits");
    }
    lengths[i] = static_cast<std::uint8_t>(depth[i]);
  }
  return lengths;
}

CodeBook canonical_codebook(std::span<const SymbolLength> lengths) {
  std::vector<SymbolLength> order(lengths.begin(), lengths.end());
  std::sort(order.begin(), order.end(), [](const SymbolLength& a, const SymbolLength& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.symbol < b.symbol;
  });

  std::vector<CodeBook::Entry> entries;
  entries.reserve(order.size());
  u128 code = 0;
  unsigned prev_len = order.empty() ? 0 : order.front().length;
  for (const auto& sl : order) {
    if (sl.length == 0 || sl.length > kMaxCodewordLength) {
      throw Error(ErrorCode::kInvalidCodeword,
                  "code length " + std::to_string(sl.length) + " outside [1, 64]");
    }
    code <<= (sl.length - prev_len);
    prev_len = sl.length;
    if (code >> sl.length) {
      throw Error(ErrorCode::kKraftViolation, "code lengths oversubscribe the code space");
    }
    entries.push_back({sl.symbol, Codeword{static_cast<std::uint64_t>(code), sl.length}});
    ++code;
  }
  return CodeBook::from_entries(entries);
}

CodeBook build_codebook(const FrequencyTable& freq) {
  const auto lengths = huffman_code_lengths(freq);
  std::vector<SymbolLength> sl;
  sl.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    sl.push_back({freq.entries()[i].symbol, lengths[i]});
  }
  return canonical_codebook(sl);
}

std::string escape_symbol(Symbol symbol) {
  switch (symbol) {
    case ' ': return "\\s";
    case '\n': return "\\n";
    case '\\': return "\\\\";
    default: break;
  }
  if (symbol > 0x20 && symbol < 0x7F) return std::string(1, static_cast<char>(symbol));
  char buf[5];
  std::snprintf(buf, sizeof buf, "\\x%02X", symbol);
  return buf;
}

namespace {

Symbol unescape_symbol(std::string_view token, std::size_t line_no) {
  auto bad = [&] {
    return Error(ErrorCode::kMalformedLine, "line " + std::to_string(line_no) +
                                                ": bad symbol token '" + std::string(token) +
                                                "'");
  };
  if (token.size() == 1) {
    const auto c = static_cast<unsigned char>(token[0]);
    if (c <= 0x20 || c == 0x7F || c == '\\') throw bad();
    return c;
  }
  if (token == "\\s") return ' ';
  if (token == "\\n") return '\n';
  if (token == "\\\\") return '\\';
  if (token.size() == 4 && token[0] == '\\' && token[1] == 'x') {
    unsigned value = 0;
    const char* first = token.data() + 2;
    const char* last = token.data() + 4;
    auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (ec == std::errc{} && ptr == last) return static_cast<Symbol>(value);
  }
  throw bad();
}

template <typename T>
bool parse_decimal(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string serialize_dictionary(const CodeBook& book) {
  std::string out = std::to_string(book.size()) + "\n";
  for (const auto& e : book.canonical_order()) {
    out += escape_symbol(e.symbol);
    out += ' ';
    out += std::to_string(e.code.length);
    out += ' ';
    out += e.code.to_string();
    out += '\n';
  }
  return out;
}

CodeBook parse_dictionary(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw Error(ErrorCode::kMalformedLine, "dictionary is empty");

  std::size_t declared = 0;
  if (!parse_decimal(lines[0], declared)) {
    throw Error(ErrorCode::kMalformedLine,
                "line 1: expected symbol count, got '" + std::string(lines[0]) + "'");
  }
  if (declared == 0) throw Error(ErrorCode::kEmptyInput, "dictionary declares no symbols");
  if (lines.size() - 1 != declared) {
    throw Error(ErrorCode::kCountMismatch, "dictionary declares " + std::to_string(declared) +
                                               " symbols but lists " +
                                               std::to_string(lines.size() - 1));
  }

  std::vector<CodeBook::Entry> entries;
  entries.reserve(declared);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t line_no = i + 1;
    const auto sp1 = line.find(' ');
    const auto sp2 = sp1 == std::string_view::npos ? sp1 : line.find(' ', sp1 + 1);
    if (sp2 == std::string_view::npos || line.find(' ', sp2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine, "line " + std::to_string(line_no) +
                                                 ": expected '<symbol> <length> <codeword>'");
    }
    const Symbol symbol = unescape_symbol(line.substr(0, sp1), line_no);
    unsigned length = 0;
    if (!parse_decimal(line.substr(sp1 + 1, sp2 - sp1 - 1), length)) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": bad codeword length");
    }
    const std::string_view bits = line.substr(sp2 + 1);
    if (bits.size() != length) {
      throw Error(ErrorCode::kMalformedLine, "line " + std::to_string(line_no) +
                                                 ": length field " + std::to_string(length) +
                                                 " disagrees with codeword '" +
                                                 std::string(bits) + "'");
    }
    entries.push_back({symbol, Codeword::parse(bits)});
  }
  return CodeBook::from_entries(entries);
}

}  // namespace ada
