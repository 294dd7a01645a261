#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ada/corpus.h"

namespace ada {

namespace {

using Cells = std::vector<std::string>;

const Cells kColumns = {"case",     "length",   "threshold",     "encoded_bits",   "adjacent_bits",
                        "total_bits", "bits_per_char", "gsm_bits", "max_chars", "enhancement_pct"};

Cells data_cells(const BenchmarkRow& row) {
  const auto m = row.report.rounded();
  return {row.report.case_id,
          std::to_string(row.report.length),
          std::to_string(row.threshold.max_distance()),
          std::to_string(row.encoded_bits),
          std::to_string(row.adjacent_bits),
          std::to_string(row.report.total_bits),
          format_centi(m.bits_per_char_centi),
          std::to_string(row.report.gsm_bits),
          format_centi(m.max_chars_centi),
          format_centi(m.enhancement_centi)};
}

Cells gsm_cells(const ReportRow& row) {
  const auto m = row.rounded();
  return {row.case_id,
          std::to_string(row.length),
          "gsm7",
          "",
          "",
          std::to_string(row.total_bits),
          format_centi(m.bits_per_char_centi),
          std::to_string(row.gsm_bits),
          format_centi(m.max_chars_centi),
          format_centi(m.enhancement_centi)};
}

// Case-major: each case's codec rows, then its GSM reference row.
std::vector<Cells> all_rows(const BenchmarkResult& result) {
  std::vector<Cells> out;
  std::size_t r = 0;
  for (const auto& gsm : result.gsm_rows) {
    while (r < result.rows.size() && result.rows[r].report.case_id == gsm.case_id) {
      out.push_back(data_cells(result.rows[r++]));
    }
    out.push_back(gsm_cells(gsm));
  }
  for (; r < result.rows.size(); ++r) out.push_back(data_cells(result.rows[r]));
  return out;
}

std::vector<unsigned> distinct_thresholds(const BenchmarkResult& result) {
  std::vector<unsigned> ts;
  for (const auto& row : result.rows) {
    const unsigned t = row.threshold.max_distance();
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  return ts;
}

}  // namespace

std::string render_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  auto emit = [&](const Cells& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  emit(kColumns);
  for (const auto& cells : all_rows(result)) emit(cells);
  return out.str();
}

std::string render_table(const BenchmarkResult& result, bool styled) {
  const auto rows = all_rows(result);
  std::vector<std::size_t> widths(kColumns.size());
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    widths[c] = kColumns[c].size();
    for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const Cells& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      // Left-align the label column, right-align numbers.
      if (c == 0) {
        out << cells[c] << std::string(widths[c] - cells[c].size(), ' ');
      } else {
        out << std::string(widths[c] - cells[c].size(), ' ') << cells[c];
      }
    }
    out << '\n';
  };

  if (styled) out << "\x1b[1m";
  emit(kColumns);
  if (styled) out << "\x1b[0m";
  for (const auto& row : rows) emit(row);

  for (const unsigned t : distinct_thresholds(result)) {
    char avg[32];
    std::snprintf(avg, sizeof avg, "%.2f",
                  average_enhancement(result, Threshold::from_max_distance(t)));
    out << "average enhancement at T=" << t << ": " << avg << "%\n";
  }
  return out.str();
}

}  // namespace ada
