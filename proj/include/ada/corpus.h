#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ada/ada_codec.h"
#include "ada/metrics.h"

namespace ada {

struct MessageRecord {
  std::uint64_t id = 0;
  std::string text;

  friend bool operator==(const MessageRecord&, const MessageRecord&) = default;
};

// Reads records of the form
//   <message id="10120"><text>Bugis oso near wat...</text>
// optionally followed by </message>. Records may share a line or wrap across
// lines; the text between the tags is kept byte for byte. Throws kParseError
// (message names the line) on malformed markup, empty text, or a repeated id.
std::vector<MessageRecord> parse_corpus(std::string_view text);

struct TestCase {
  std::string label;
  std::vector<MessageRecord> records;

  std::uint64_t total_length() const;
  // Record texts joined in order with no separator.
  std::string text() const;
};

struct CaseGrouping {
  std::vector<TestCase> cases;
  // Records after the last full group; not benchmarked.
  std::size_t leftover_records = 0;
};

// Consecutive groups labelled T1, T2, ... Throws kInsufficientData when
// fewer than `group_size` records are available.
CaseGrouping build_test_cases(std::span<const MessageRecord> records, std::size_t group_size = 5);

enum class CompressionUnit {
  kConcatenated,  // one codebook and stream pair per test case
  kPerMessage,    // each record compressed alone, bits summed
};

struct BenchmarkRow {
  ReportRow report;
  Threshold threshold;
  std::uint64_t encoded_bits = 0;
  std::uint64_t adjacent_bits = 0;
  std::uint64_t header_bits = 0;
};

struct BenchmarkResult {
  // Case-major, thresholds in the order requested.
  std::vector<BenchmarkRow> rows;
  // One GSM 7-bit reference row per case.
  std::vector<ReportRow> gsm_rows;
};

// Builds a fresh code book per (case, threshold) run, encodes, and verifies
// the decode round trip; a mismatch throws kRoundTripMismatch. Cases run
// concurrently; the result order does not depend on scheduling.
BenchmarkResult run_benchmark(std::span<const TestCase> cases, std::span<const Threshold> thresholds,
                              CompressionUnit unit = CompressionUnit::kConcatenated);

// Mean of the published (2-decimal) enhancement over rows at `threshold`.
double average_enhancement(const BenchmarkResult& result, Threshold threshold);

// The 25 SMS records that make up test cases T1-T5.
std::string_view bundled_corpus();

std::string render_csv(const BenchmarkResult& result);
std::string render_table(const BenchmarkResult& result, bool styled);

}  // namespace ada
