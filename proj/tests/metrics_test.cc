#include "ada/metrics.h"

#include <gtest/gtest.h>

#include <random>

#include "ada/error.h"
#include "oracles.h"

namespace ada {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ada::Error";
  return ErrorCode::kIo;
}

const Threshold kT7 = Threshold::from_max_distance(7);

struct PublishedRow {
  std::uint64_t length;
  unsigned threshold;
  std::uint64_t total_bits;
  std::int64_t bits_per_char_centi;
  std::int64_t max_chars_centi;
  std::int64_t enhancement_centi;
};

// Aggregated bit totals with the per-character, max-character and
// enhancement figures published for them.
const PublishedRow kPublished[] = {
    {340, 7, 1775, 522, 21454, 3409},  {340, 15, 1782, 524, 21369, 3356},
    {390, 7, 2120, 543, 20604, 2878},  {390, 15, 2162, 554, 20204, 2628},
    {255, 7, 1321, 518, 21620, 3513},  {255, 15, 1341, 525, 21298, 3311},
    {267, 7, 1379, 516, 21685, 3553},  {267, 15, 1391, 520, 21498, 3436},
    {314, 7, 1623, 516, 21669, 3543},  {314, 15, 1660, 528, 21186, 3241},
};

TEST(Delta1Test, Examples) {
  const auto freq = build_frequency_table(testing::kWorkedExample);
  const auto book = testing::worked_example_book();
  EXPECT_EQ(delta1(freq, AdjacencyCounts{}, book), 57u);

  AdjacencyCounts all{};
  for (const auto& e : freq.entries()) all[e.symbol] = e.count;
  EXPECT_EQ(delta1(freq, all, book), 0u);

  const auto aaa = build_frequency_table("aaa");
  const auto one_bit = build_codebook(aaa);
  AdjacencyCounts a1{};
  a1['a'] = 1;
  EXPECT_EQ(delta1(aaa, a1, one_bit), 2u);
}

TEST(Delta1Test, AdjacencyAboveFrequencyIsInvalid) {
  const auto freq = build_frequency_table("aab");
  const auto book = build_codebook(freq);
  AdjacencyCounts too_many{};
  too_many['b'] = 2;
  EXPECT_EQ(code_of([&] { delta1(freq, too_many, book); }), ErrorCode::kInvalidCounts);
  AdjacencyCounts stranger{};
  stranger['z'] = 1;
  EXPECT_EQ(code_of([&] { delta1(freq, stranger, book); }), ErrorCode::kInvalidCounts);
}

TEST(Delta2Test, MagnitudeAndWireForms) {
  EXPECT_EQ(delta2(0, kT7), 0u);
  EXPECT_EQ(delta2(10, kT7), 30u);
  EXPECT_EQ(delta2_wire(10, kT7), 50u);
  EXPECT_EQ(delta2_wire(10, Threshold::from_max_distance(15)), 60u);
}

TEST(TotalSizeTest, Sums) {
  EXPECT_EQ(total_size({57, 0, 0, 17}), 74u);
  EXPECT_EQ(total_size({}), 0u);
  EXPECT_EQ(total_size({1344, 431, 0, 0}), 1775u);
  EXPECT_EQ(total_size({1, 2, 3, 4}), 10u);
}

TEST(GsmBaselineTest, SevenBitsAndSegments) {
  const auto a = gsm_baseline(340);
  EXPECT_EQ(a.bits, 2380u);
  EXPECT_EQ(a.segments, 3u);
  const auto b = gsm_baseline(160);
  EXPECT_EQ(b.bits, 1120u);
  EXPECT_EQ(b.segments, 1u);
  const auto c = gsm_baseline(165);
  EXPECT_EQ(c.bits, 1155u);
  EXPECT_EQ(c.segments, 2u);
  EXPECT_EQ(gsm_baseline(0).segments, 0u);
  EXPECT_EQ(kGsmSegmentBits, 1120u);
}

TEST(ReportRowTest, Examples) {
  const auto t1 = report_row("T1", 340, 1775);
  EXPECT_EQ(format_centi(t1.rounded().bits_per_char_centi), "5.22");
  EXPECT_EQ(format_centi(t1.rounded().max_chars_centi), "214.54");
  EXPECT_EQ(format_centi(t1.rounded().enhancement_centi), "34.09");
  EXPECT_EQ(t1.gsm_bits, 2380u);

  const auto t3 = report_row("T3", 255, 1321);
  EXPECT_EQ(format_centi(t3.rounded().bits_per_char_centi), "5.18");
  EXPECT_EQ(format_centi(t3.rounded().max_chars_centi), "216.20");
  EXPECT_EQ(format_centi(t3.rounded().enhancement_centi), "35.13");

  const auto parity = report_row("x", 123, 7 * 123);
  EXPECT_DOUBLE_EQ(parity.bits_per_char, 7.0);
  EXPECT_DOUBLE_EQ(parity.max_chars, 160.0);
  EXPECT_DOUBLE_EQ(parity.enhancement_pct, 0.0);
  EXPECT_EQ(format_centi(parity.rounded().enhancement_centi), "0.00");
}

TEST(ReportRowTest, ReproducesPublishedFigures) {
  for (const auto& p : kPublished) {
    const auto row = report_row("case", p.length, p.total_bits);
    const auto m = row.rounded();
    EXPECT_EQ(m.bits_per_char_centi, p.bits_per_char_centi) << p.total_bits;
    EXPECT_EQ(m.max_chars_centi, p.max_chars_centi) << p.total_bits;
    EXPECT_EQ(m.enhancement_centi, p.enhancement_centi) << p.total_bits;
  }
}

TEST(ReportRowTest, AverageEnhancementAtT7) {
  double rounded_sum = 0;
  double exact_sum = 0;
  for (const auto& p : kPublished) {
    if (p.threshold != 7) continue;
    const auto row = report_row("case", p.length, p.total_bits);
    rounded_sum += static_cast<double>(row.rounded().enhancement_centi) / 100.0;
    exact_sum += row.enhancement_pct;
  }
  EXPECT_NEAR(rounded_sum / 5, 33.79, 0.01);
  EXPECT_NEAR(exact_sum / 5, 33.79, 0.01);
}

TEST(ReportRowTest, ZeroLengthOrBitsIsGuarded) {
  EXPECT_EQ(code_of([] { report_row("x", 0, 10); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([] { report_row("x", 10, 0); }), ErrorCode::kDivisionByZero);
}

TEST(ReportRowTest, InvariantsHoldAcrossInputs) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::uint64_t length = 1 + rng() % 5000;
    const std::uint64_t bits = 1 + rng() % (10 * length);
    const auto row = report_row("r", length, bits);
    ASSERT_NEAR(row.max_chars * row.bits_per_char, 1120.0, 0.01);
    ASSERT_NEAR(row.enhancement_pct, (row.max_chars - 160.0) / 160.0 * 100.0, 1e-9);
    const auto worse = report_row("r", length, bits + 1);
    ASSERT_LT(worse.enhancement_pct, row.enhancement_pct);
    ASSERT_LE(worse.rounded().enhancement_centi, row.rounded().enhancement_centi);
  }
}

TEST(FormatCentiTest, Formats) {
  EXPECT_EQ(format_centi(21454), "214.54");
  EXPECT_EQ(format_centi(5), "0.05");
  EXPECT_EQ(format_centi(0), "0.00");
  EXPECT_EQ(format_centi(-1205), "-12.05");
  EXPECT_EQ(format_centi(-5), "-0.05");
}

TEST(AnalyzeTest, WorkedExampleBreakdown) {
  const auto msg = encode(testing::kWorkedExample, kT7, testing::worked_example_book());
  const auto a = analyze(msg);
  EXPECT_EQ(a.breakdown.delta1, 57u);
  EXPECT_EQ(a.breakdown.delta2, 0u);
  EXPECT_EQ(a.breakdown.separator_bits, 17u);
  EXPECT_EQ(a.breakdown.total() - a.breakdown.header_bits, 74u);
  EXPECT_EQ(a.breakdown.header_bits, dictionary_section_bits(msg.dictionary));
}

// The size model's terms add up to the real stream sizes on every message.
TEST(AnalyzeTest, ModelMatchesStreams) {
  std::mt19937_64 rng(42);
  for (const unsigned t : {1u, 3u, 7u, 15u}) {
    const auto th = Threshold::from_max_distance(t);
    for (int iter = 0; iter < 250; ++iter) {
      const std::string m = iter % 2 ? testing::random_bytes(rng, 1, 400)
                                     : testing::random_text(rng, 1, 400);
      const auto msg = encode(m, th);
      const auto a = analyze(msg);
      ASSERT_EQ(a.breakdown.delta1 + a.breakdown.delta2 + a.breakdown.separator_bits,
                msg.encoded.size() + msg.adjacent.size());
      ASSERT_EQ(a.breakdown.delta1, msg.encoded.size());
      ASSERT_EQ(a.delta2_magnitude, a.entries * th.width());
    }
  }
}

}  // namespace
}  // namespace ada
