#include "ada/metrics.h"

#include <cstdlib>

#include "ada/error.h"

namespace ada {

namespace {

// num / den rounded half away from zero; den > 0.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = (2 * std::llabs(num) + den) / (2 * den);
  return num < 0 ? -q : q;
}

}  // namespace

std::uint64_t total_size(const SizeBreakdown& parts) { return parts.total(); }

std::uint64_t delta1(const FrequencyTable& freq, const AdjacencyCounts& adjacency_counts,
                     const CodeBook& book) {
  for (unsigned s = 0; s < 256; ++s) {
    if (adjacency_counts[s] > freq.count(static_cast<Symbol>(s))) {
      throw Error(ErrorCode::kInvalidCounts,
                  "adjacency count " + std::to_string(adjacency_counts[s]) + " for " +
                      escape_symbol(static_cast<Symbol>(s)) + " exceeds its frequency " +
                      std::to_string(freq.count(static_cast<Symbol>(s))));
    }
  }
  std::uint64_t bits = 0;
  for (const auto& e : freq.entries()) {
    bits += (e.count - adjacency_counts[e.symbol]) * book.at(e.symbol).length;
  }
  return bits;
}

std::uint64_t delta2(std::uint64_t total_adjacencies, Threshold threshold) {
  return total_adjacencies * threshold.width();
}

std::uint64_t delta2_wire(std::uint64_t total_adjacencies, Threshold threshold) {
  return total_adjacencies * threshold.entry_bits();
}

GsmBaseline gsm_baseline(std::uint64_t length) {
  return {length * kGsmBitsPerChar, (length + kGsmSegmentChars - 1) / kGsmSegmentChars};
}

ReportRow report_row(std::string case_id, std::uint64_t length, std::uint64_t total_bits) {
  if (length == 0 || total_bits == 0) {
    throw Error(ErrorCode::kDivisionByZero, "report row for '" + case_id +
                                                "' needs non-zero length and total bits");
  }
  ReportRow row;
  row.case_id = std::move(case_id);
  row.length = length;
  row.total_bits = total_bits;
  row.bits_per_char = static_cast<double>(total_bits) / static_cast<double>(length);
  row.gsm_bits = gsm_baseline(length).bits;
  row.max_chars = static_cast<double>(kGsmSegmentBits) * static_cast<double>(length) /
                  static_cast<double>(total_bits);
  row.enhancement_pct = (row.max_chars - static_cast<double>(kGsmSegmentChars)) /
                        static_cast<double>(kGsmSegmentChars) * 100.0;
  return row;
}

RoundedMetrics ReportRow::rounded() const {
  const auto len = static_cast<std::int64_t>(length);
  const auto tb = static_cast<std::int64_t>(total_bits);
  RoundedMetrics m{};
  m.bits_per_char_centi = tb * 100 / len;
  m.max_chars_centi = round_div(static_cast<std::int64_t>(kGsmSegmentBits) * 100 * len, tb);
  // ((max - 160) / 160) * 100, in hundredths of a percent.
  const std::int64_t base = static_cast<std::int64_t>(kGsmSegmentChars) * 100;
  m.enhancement_centi = round_div((m.max_chars_centi - base) * 10000, base);
  return m;
}

std::string format_centi(std::int64_t centi) {
  const bool negative = centi < 0;
  const std::int64_t a = std::llabs(centi);
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (negative ? "-" : "") + std::to_string(a / 100) + "." + frac;
}

StreamAnalysis analyze(const EncodedMessage& message) {
  DecodeStats stats;
  const auto text = decode(message, &stats);
  const FrequencyTable freq = build_frequency_table(text);

  StreamAnalysis out;
  out.heads = stats.heads;
  out.entries = stats.entries;
  out.breakdown.delta1 = delta1(freq, stats.adjacency_counts, message.dictionary);
  out.breakdown.delta2 = delta2_wire(stats.entries, message.threshold);
  out.breakdown.header_bits = dictionary_section_bits(message.dictionary);
  out.breakdown.separator_bits = stats.separators;
  out.delta2_magnitude = delta2(stats.entries, message.threshold);
  return out;
}

}  // namespace ada
