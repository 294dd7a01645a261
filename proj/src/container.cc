#include <algorithm>

#include "ada/ada_codec.h"
#include "ada/error.h"

namespace ada {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::size_t codeword_bytes(unsigned length) { return (length + 7) / 8; }

class ByteCursor {
 public:
  explicit ByteCursor(std::span<const std::uint8_t> data) : data_(data) {}

  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    if (data_.size() - pos_ < n) {
      throw Error(ErrorCode::kTruncatedStream, std::string("container truncated in ") + what +
                                                   " (need " + std::to_string(n) +
                                                   " bytes at offset " + std::to_string(pos_) +
                                                   ", " + std::to_string(data_.size() - pos_) +
                                                   " left)");
    }
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint8_t u8(const char* what) { return take(1, what)[0]; }
  std::uint16_t u16(const char* what) {
    auto b = take(2, what);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }
  std::uint32_t u32(const char* what) {
    auto b = take(4, what);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
  }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t dictionary_section_bits(const CodeBook& book) {
  std::uint64_t bytes = 2;
  for (const auto& e : book.canonical_order()) bytes += 2 + codeword_bytes(e.code.length);
  return bytes * 8;
}

std::vector<std::uint8_t> pack_container(const EncodedMessage& message) {
  std::vector<std::uint8_t> out(kContainerMagic.begin(), kContainerMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(message.threshold.width()));
  out.push_back(0);
  put_u32(out, message.original_length);

  const auto entries = message.dictionary.canonical_order();
  put_u16(out, static_cast<std::uint16_t>(entries.size()));
  for (const auto& e : entries) {
    out.push_back(e.symbol);
    out.push_back(e.code.length);
    // Left-align the codeword within its byte run so it reads MSB-first.
    const std::size_t nbytes = codeword_bytes(e.code.length);
    BitString packed;
    packed.append(e.code.bits, e.code.length);
    const auto bytes = packed.bytes();
    out.insert(out.end(), bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(nbytes));
  }

  put_u32(out, static_cast<std::uint32_t>(message.encoded.size()));
  put_u32(out, static_cast<std::uint32_t>(message.adjacent.size()));
  const auto enc = message.encoded.bytes();
  const auto adj = message.adjacent.bytes();
  out.insert(out.end(), enc.begin(), enc.end());
  out.insert(out.end(), adj.begin(), adj.end());
  return out;
}

EncodedMessage unpack_container(std::span<const std::uint8_t> data) {
  ByteCursor in(data);
  const auto magic = in.take(kContainerMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kContainerMagic.begin())) {
    throw Error(ErrorCode::kBadMagic, "not an ADA1 container (bad magic)");
  }
  if (const auto version = in.u8("version"); version != kContainerVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported container version " + std::to_string(version));
  }
  const std::uint8_t width = in.u8("threshold width");
  if (const auto flags = in.u8("flags"); flags != 0) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported container flags " + std::to_string(flags));
  }

  EncodedMessage out;
  out.threshold = Threshold::from_width(width);
  out.original_length = in.u32("original length");

  const std::uint16_t symbol_count = in.u16("symbol count");
  std::vector<CodeBook::Entry> entries;
  entries.reserve(symbol_count);
  for (unsigned i = 0; i < symbol_count; ++i) {
    const Symbol symbol = in.u8("dictionary symbol");
    const std::uint8_t length = in.u8("dictionary code length");
    if (length == 0 || length > kMaxCodewordLength) {
      throw Error(ErrorCode::kInvalidCodeword,
                  "dictionary code length " + std::to_string(length) + " outside [1, 64]");
    }
    const auto bytes = in.take(codeword_bytes(length), "dictionary codeword");
    const BitString bits = BitString::from_bytes(bytes, length);
    entries.push_back({symbol, Codeword{read_bits(bits, 0, length).value, length}});
  }
  out.dictionary = CodeBook::from_entries(entries);

  const std::uint32_t encoded_bits = in.u32("encoded bit count");
  const std::uint32_t adjacent_bits = in.u32("adjacent bit count");
  out.encoded = BitString::from_bytes(in.take((encoded_bits + 7ull) / 8, "encoded payload"),
                                      encoded_bits);
  out.adjacent = BitString::from_bytes(in.take((adjacent_bits + 7ull) / 8, "adjacent payload"),
                                       adjacent_bits);
  if (in.remaining() != 0) {
    throw Error(ErrorCode::kTrailingData,
                std::to_string(in.remaining()) + " unexpected bytes after container payload");
  }
  return out;
}

}  // namespace ada
