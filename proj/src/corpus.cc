#include "ada/corpus.h"

#include <algorithm>
#include <charconv>
#include <future>
#include <unordered_set>

#include "ada/error.h"

namespace ada {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                         text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == first) fail("expected a numeric message id");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Everything up to (not including) `terminator`, which is consumed.
  std::string_view until(std::string_view terminator) {
    const auto end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) fail("missing '" + std::string(terminator) + "'");
    const auto out = text_.substr(pos_, end - pos_);
    pos_ = end + terminator.size();
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    const auto line = 1 + std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
    throw Error(ErrorCode::kParseError, "corpus line " + std::to_string(line) + ": " + what);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct RunOutcome {
  std::uint64_t encoded_bits = 0;
  std::uint64_t adjacent_bits = 0;
  std::uint64_t header_bits = 0;
};

RunOutcome compress_and_verify(const std::string& text, Threshold threshold,
                               const std::string& label) {
  const EncodedMessage msg = encode(text, threshold);
  if (decode_to_string(msg) != text) {
    throw Error(ErrorCode::kRoundTripMismatch,
                "round trip failed for " + label + " at T=" +
                    std::to_string(threshold.max_distance()));
  }
  return {msg.encoded.size(), msg.adjacent.size(), dictionary_section_bits(msg.dictionary)};
}

std::vector<BenchmarkRow> run_case(const TestCase& tc, std::span<const Threshold> thresholds,
                                   CompressionUnit unit) {
  std::vector<BenchmarkRow> rows;
  for (const Threshold th : thresholds) {
    RunOutcome total;
    if (unit == CompressionUnit::kConcatenated) {
      total = compress_and_verify(tc.text(), th, tc.label);
    } else {
      for (const auto& rec : tc.records) {
        const auto one =
            compress_and_verify(rec.text, th, tc.label + "/" + std::to_string(rec.id));
        total.encoded_bits += one.encoded_bits;
        total.adjacent_bits += one.adjacent_bits;
        total.header_bits += one.header_bits;
      }
    }
    rows.push_back({report_row(tc.label, tc.total_length(), total.encoded_bits + total.adjacent_bits),
                    th, total.encoded_bits, total.adjacent_bits, total.header_bits});
  }
  return rows;
}

}  // namespace

std::vector<MessageRecord> parse_corpus(std::string_view text) {
  std::vector<MessageRecord> records;
  std::unordered_set<std::uint64_t> seen;
  Scanner in(text);
  in.skip_space();
  while (!in.at_end()) {
    const std::size_t start = in.position();
    in.expect("<message id=\"");
    MessageRecord rec;
    rec.id = in.number();
    in.expect("\">");
    in.skip_space();
    in.expect("<text>");
    rec.text = std::string(in.until("</text>"));
    in.skip_space();
    in.consume("</message>");
    in.skip_space();
    if (rec.text.empty()) in.fail_at(start, "message " + std::to_string(rec.id) + " has no text");
    if (!seen.insert(rec.id).second) {
      in.fail_at(start, "duplicate message id " + std::to_string(rec.id));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::uint64_t TestCase::total_length() const {
  std::uint64_t n = 0;
  for (const auto& r : records) n += r.text.size();
  return n;
}

std::string TestCase::text() const {
  std::string out;
  for (const auto& r : records) out += r.text;
  return out;
}

CaseGrouping build_test_cases(std::span<const MessageRecord> records, std::size_t group_size) {
  if (group_size == 0) throw Error(ErrorCode::kRange, "group size must be positive");
  if (records.size() < group_size) {
    throw Error(ErrorCode::kInsufficientData,
                std::to_string(records.size()) + " records cannot fill one group of " +
                    std::to_string(group_size));
  }
  CaseGrouping out;
  const std::size_t groups = records.size() / group_size;
  for (std::size_t g = 0; g < groups; ++g) {
    TestCase tc;
    tc.label = "T" + std::to_string(g + 1);
    const auto first = records.begin() + static_cast<std::ptrdiff_t>(g * group_size);
    tc.records.assign(first, first + static_cast<std::ptrdiff_t>(group_size));
    out.cases.push_back(std::move(tc));
  }
  out.leftover_records = records.size() - groups * group_size;
  return out;
}

BenchmarkResult run_benchmark(std::span<const TestCase> cases, std::span<const Threshold> thresholds,
                              CompressionUnit unit) {
  std::vector<std::future<std::vector<BenchmarkRow>>> pending;
  pending.reserve(cases.size());
  for (const auto& tc : cases) {
    pending.push_back(std::async(std::launch::async, run_case, std::cref(tc), thresholds, unit));
  }
  BenchmarkResult result;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto rows = pending[i].get();
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    const auto length = cases[i].total_length();
    result.gsm_rows.push_back(report_row(cases[i].label, length, gsm_baseline(length).bits));
  }
  return result;
}

double average_enhancement(const BenchmarkResult& result, Threshold threshold) {
  std::int64_t sum = 0;
  std::int64_t n = 0;
  for (const auto& row : result.rows) {
    if (row.threshold != threshold) continue;
    sum += row.report.rounded().enhancement_centi;
    ++n;
  }
  return n == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(n) / 100.0;
}

}  // namespace ada
