#include "ada/ada_codec.h"

#include <bit>
#include <cstdlib>
#include <limits>

#include "ada/error.h"

namespace ada {

namespace {

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

Threshold Threshold::from_max_distance(unsigned t) {
  if (t == 0 || t > 255 || !std::has_single_bit(t + 1)) {
    throw Error(ErrorCode::kBadThreshold,
                "threshold " + std::to_string(t) + " is not of the form 2^x - 1 with 1 <= x <= 8");
  }
  return Threshold(static_cast<unsigned>(std::countr_zero(t + 1)));
}

Threshold Threshold::from_width(unsigned width) {
  if (width < kMinWidth || width > kMaxWidth) {
    throw Error(ErrorCode::kBadThreshold,
                "distance width " + std::to_string(width) + " outside [1, 8]");
  }
  return Threshold(width);
}

bool qualifies(Symbol prev, Symbol next, const CodeBook& book, Threshold threshold) {
  book.at(prev);
  const unsigned next_length = book.at(next).length;
  const int distance = std::abs(static_cast<int>(next) - static_cast<int>(prev));
  return static_cast<unsigned>(distance) <= threshold.max_distance() &&
         next_length >= threshold.entry_bits();
}

EncodedMessage encode(std::span<const std::uint8_t> message, Threshold threshold,
                      const CodeBook& book) {
  if (message.empty()) throw Error(ErrorCode::kEmptyInput, "message is empty");
  if (message.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kRange, "message longer than 2^32 - 1 bytes");
  }

  EncodedMessage out;
  out.dictionary = book;
  out.threshold = threshold;
  out.original_length = static_cast<std::uint32_t>(message.size());

  const Codeword& first = book.at(message[0]);
  out.encoded.append(first.bits, first.length);
  for (std::size_t i = 1; i < message.size(); ++i) {
    const Symbol prev = message[i - 1];
    const Symbol next = message[i];
    if (qualifies(prev, next, book, threshold)) {
      const int distance = static_cast<int>(next) - static_cast<int>(prev);
      out.adjacent.push_back(true);
      out.adjacent.push_back(distance < 0);
      out.adjacent.append(static_cast<std::uint64_t>(std::abs(distance)), threshold.width());
    } else {
      out.adjacent.push_back(false);
      const Codeword& cw = book.at(next);
      out.encoded.append(cw.bits, cw.length);
    }
  }
  out.adjacent.push_back(false);
  return out;
}

EncodedMessage encode(std::string_view message, Threshold threshold, const CodeBook& book) {
  return encode(as_bytes(message), threshold, book);
}

EncodedMessage encode(std::span<const std::uint8_t> message, Threshold threshold) {
  return encode(message, threshold, build_codebook(build_frequency_table(message)));
}

EncodedMessage encode(std::string_view message, Threshold threshold) {
  return encode(as_bytes(message), threshold);
}

std::vector<std::uint8_t> decode(const EncodedMessage& message, DecodeStats* stats) {
  DecodeStats local;
  DecodeStats& st = stats ? *stats : local;
  st = DecodeStats{};

  const CodewordIndex index(message.dictionary);
  const unsigned width = message.threshold.width();
  BitReader encoded(message.encoded);
  BitReader adjacent(message.adjacent);

  std::vector<std::uint8_t> out;
  out.reserve(message.original_length);
  while (out.size() < message.original_length) {
    int prev = index.decode(encoded);
    ++st.dictionary_lookups;
    ++st.heads;
    out.push_back(static_cast<std::uint8_t>(prev));

    while (adjacent.read_bit()) {
      const bool negative = adjacent.read_bit();
      const auto magnitude = static_cast<int>(adjacent.read(width));
      const int value = negative ? prev - magnitude : prev + magnitude;
      if (value < 0 || value > 255) {
        throw Error(ErrorCode::kValueOutOfRange,
                    "distance entry yields byte value " + std::to_string(value) +
                        " at symbol " + std::to_string(out.size()));
      }
      if (out.size() == message.original_length) {
        throw Error(ErrorCode::kTrailingData, "adjacent stream describes more than " +
                                                  std::to_string(message.original_length) +
                                                  " symbols");
      }
      out.push_back(static_cast<std::uint8_t>(value));
      ++st.entries;
      ++st.adjacency_counts[static_cast<std::size_t>(value)];
      prev = value;
    }
    ++st.separators;
  }

  if (!encoded.exhausted() || !adjacent.exhausted()) {
    throw Error(ErrorCode::kTrailingData,
                "streams hold " + std::to_string(encoded.remaining()) + " encoded and " +
                    std::to_string(adjacent.remaining()) + " adjacent bits past the message end");
  }
  return out;
}

std::string decode_to_string(const EncodedMessage& message, DecodeStats* stats) {
  const auto bytes = decode(message, stats);
  return {bytes.begin(), bytes.end()};
}

std::uint64_t count_symbols(const BitString& adjacent, Threshold threshold) {
  BitReader reader(adjacent);
  std::uint64_t symbols = 0;
  while (!reader.exhausted()) {
    ++symbols;  // run head
    while (reader.read_bit()) {
      reader.read(1 + threshold.width());
      ++symbols;
    }
  }
  return symbols;
}

DebugText to_debug_text(const EncodedMessage& message) {
  return {serialize_dictionary(message.dictionary), message.encoded.to_string(),
          message.adjacent.to_string()};
}

namespace {

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

EncodedMessage from_debug_text(const DebugText& text, Threshold threshold) {
  EncodedMessage out;
  out.dictionary = parse_dictionary(text.dictionary);
  out.threshold = threshold;
  out.encoded = BitString::from_string(strip_line_end(text.encoded));
  out.adjacent = BitString::from_string(strip_line_end(text.adjacent));
  const std::uint64_t n = count_symbols(out.adjacent, threshold);
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "adjacent stream is empty");
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kRange, "adjacent stream describes more than 2^32 - 1 symbols");
  }
  out.original_length = static_cast<std::uint32_t>(n);
  return out;
}

}  // namespace ada
