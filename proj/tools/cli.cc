#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ada/ada_codec.h"
#include "ada/corpus.h"
#include "ada/error.h"
#include "ada/huffman.h"
#include "ada/metrics.h"

namespace ada::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kDictionaryFile = "dictionary.txt";
constexpr const char* kEncodedFile = "encode.txt";
constexpr const char* kAdjacentFile = "adjacent.txt";

enum class Format { kPacked, kTextDebug };

struct Config {
  std::string input;
  std::string output;
  unsigned threshold = 7;
  Format format = Format::kPacked;
  std::string codebook;
  bool emit_dictionary = false;
  bool csv = false;
  bool per_message = false;
  std::vector<unsigned> thresholds = {7, 15};
  std::size_t group_size = 5;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on '" + path.string() + "'");
  return data;
}

void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write error on '" + path.string() + "'");
}

std::string_view as_chars(std::span<const std::uint8_t> bytes) {
  return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kBadThreshold: return kExitUsage;
    case ErrorCode::kRoundTripMismatch: return kExitSoftware;
    default: return kExitData;
  }
}

EncodedMessage load_message(const Config& cfg) {
  if (cfg.format == Format::kPacked) return unpack_container(as_bytes(read_file(cfg.input)));
  const fs::path dir(cfg.input);
  return from_debug_text({read_file(dir / kDictionaryFile), read_file(dir / kEncodedFile),
                          read_file(dir / kAdjacentFile)},
                         Threshold::from_max_distance(cfg.threshold));
}

void print_summary(std::ostream& out, const std::string& label, const EncodedMessage& msg,
                   bool csv) {
  const StreamAnalysis a = analyze(msg);
  const std::uint64_t payload = msg.encoded.size() + msg.adjacent.size();
  const ReportRow row = report_row(label, msg.original_length, payload);
  const auto m = row.rounded();
  const GsmBaseline gsm = gsm_baseline(msg.original_length);

  if (csv) {
    out << "case,length,threshold,encoded_bits,adjacent_bits,total_bits,bits_per_char,gsm_bits,"
           "max_chars,enhancement_pct\n"
        << label << ',' << msg.original_length << ',' << msg.threshold.max_distance() << ','
        << msg.encoded.size() << ',' << msg.adjacent.size() << ',' << payload << ','
        << format_centi(m.bits_per_char_centi) << ',' << gsm.bits << ','
        << format_centi(m.max_chars_centi) << ',' << format_centi(m.enhancement_centi) << '\n';
    return;
  }

  const auto& b = a.breakdown;
  out << "original length:     " << msg.original_length << " chars\n"
      << "threshold:           T=" << msg.threshold.max_distance()
      << " (x=" << msg.threshold.width() << ")\n"
      << "dictionary symbols:  " << msg.dictionary.size() << '\n'
      << "run heads:           " << a.heads << '\n'
      << "adjacency entries:   " << a.entries << '\n'
      << "encoded bits:        " << msg.encoded.size() << '\n'
      << "adjacent bits:       " << msg.adjacent.size() << '\n'
      << "delta1 (heads):      " << b.delta1 << '\n'
      << "delta2 (wire):       " << b.delta2 << '\n'
      << "delta2 (M*x):        " << a.delta2_magnitude << '\n'
      << "separator bits:      " << b.separator_bits << '\n'
      << "header bits:         " << b.header_bits << '\n'
      << "total bits:          " << payload << " (excluding header)\n"
      << "total bits + header: " << total_size(b) << '\n'
      << "bits per char:       " << format_centi(m.bits_per_char_centi) << '\n'
      << "gsm 7-bit bits:      " << gsm.bits << " (" << gsm.segments << " segment"
      << (gsm.segments == 1 ? "" : "s") << ")\n"
      << "max chars per sms:   " << format_centi(m.max_chars_centi) << '\n'
      << "enhancement:         " << format_centi(m.enhancement_centi) << "%\n";
}

int cmd_compress(const Config& cfg, std::ostream& out) {
  const Threshold th = Threshold::from_max_distance(cfg.threshold);
  const std::string text = read_file(cfg.input);
  if (text.empty()) throw Error(ErrorCode::kEmptyInput, "input '" + cfg.input + "' is empty");

  const EncodedMessage msg = cfg.codebook.empty()
                                 ? encode(text, th)
                                 : encode(text, th, parse_dictionary(read_file(cfg.codebook)));

  if (cfg.format == Format::kPacked) {
    const auto packed = pack_container(msg);
    write_file(cfg.output, as_chars(packed));
  } else {
    const fs::path dir(cfg.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir.string() + "': " + ec.message());
    const DebugText dbg = to_debug_text(msg);
    write_file(dir / kDictionaryFile, dbg.dictionary);
    write_file(dir / kEncodedFile, dbg.encoded);
    write_file(dir / kAdjacentFile, dbg.adjacent);
  }

  if (cfg.emit_dictionary && !cfg.csv) out << serialize_dictionary(msg.dictionary);
  print_summary(out, fs::path(cfg.input).filename().string(), msg, cfg.csv);
  return kExitOk;
}

int cmd_decompress(const Config& cfg) {
  const EncodedMessage msg = load_message(cfg);
  const auto bytes = decode(msg);
  write_file(cfg.output, as_chars(bytes));
  return kExitOk;
}

int cmd_inspect(const Config& cfg, std::ostream& out) {
  const EncodedMessage msg = load_message(cfg);
  if (!cfg.csv) {
    if (cfg.format == Format::kPacked) {
      out << "container:           ADA1 v" << int{kContainerVersion} << ", "
          << pack_container(msg).size() << " bytes\n";
    }
    out << "dictionary:\n" << serialize_dictionary(msg.dictionary);
  }
  print_summary(out, fs::path(cfg.input).filename().string(), msg, cfg.csv);
  return kExitOk;
}

int cmd_bench(const Config& cfg, std::ostream& out, std::ostream& err, bool styled) {
  std::vector<Threshold> thresholds;
  for (unsigned t : cfg.thresholds) thresholds.push_back(Threshold::from_max_distance(t));

  const std::string corpus = cfg.input.empty() ? std::string(bundled_corpus()) : read_file(cfg.input);
  const auto records = parse_corpus(corpus);
  const CaseGrouping grouping = build_test_cases(records, cfg.group_size);
  if (grouping.leftover_records != 0) {
    err << "warning: " << grouping.leftover_records << " trailing record(s) do not fill a group of "
        << cfg.group_size << " and were skipped\n";
  }

  const BenchmarkResult result =
      run_benchmark(grouping.cases, thresholds,
                    cfg.per_message ? CompressionUnit::kPerMessage : CompressionUnit::kConcatenated);
  out << (cfg.csv ? render_csv(result) : render_table(result, styled));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        Terminal terminal) {
  Config cfg;
  CLI::App app{"Short-text compressor: Huffman run heads plus an adjacent distance array", "ada"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats = {{"packed", Format::kPacked},
                                                 {"text-debug", Format::kTextDebug}};

  auto* compress = app.add_subcommand("compress", "Compress a file");
  compress->add_option("-i,--input", cfg.input, "Input file")->required();
  compress->add_option("-o,--output", cfg.output,
                       "Output container, or directory for --format text-debug")
      ->required();
  compress->add_option("-t,--threshold", cfg.threshold, "Maximum distance T (2^x - 1)")
      ->capture_default_str();
  compress->add_option("--format", cfg.format, "packed | text-debug")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  compress->add_option("--codebook", cfg.codebook, "Use this dictionary file instead of building one");
  compress->add_flag("--emit-dictionary", cfg.emit_dictionary, "Print the dictionary");
  compress->add_flag("--csv", cfg.csv, "Print metrics as CSV");

  auto* decompress = app.add_subcommand("decompress", "Restore the original file");
  decompress->add_option("-i,--input", cfg.input, "Container, or text-debug directory")->required();
  decompress->add_option("-o,--output", cfg.output, "Output file")->required();
  decompress->add_option("--format", cfg.format, "packed | text-debug")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  decompress->add_option("-t,--threshold", cfg.threshold, "T used for a text-debug directory")
      ->capture_default_str();

  auto* inspect = app.add_subcommand("inspect", "Describe a compressed file");
  inspect->add_option("-i,--input", cfg.input, "Container, or text-debug directory")->required();
  inspect->add_option("--format", cfg.format, "packed | text-debug")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  inspect->add_option("-t,--threshold", cfg.threshold, "T used for a text-debug directory")
      ->capture_default_str();
  inspect->add_flag("--csv", cfg.csv, "Print metrics as CSV");

  auto* bench = app.add_subcommand("bench", "Benchmark test cases built from an SMS corpus");
  bench->add_option("-i,--input", cfg.input, "Corpus file (default: bundled 25-message corpus)");
  bench->add_option("--thresholds", cfg.thresholds, "Thresholds to run")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--group-size", cfg.group_size, "Messages per test case")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--per-message", cfg.per_message, "Compress each message separately");
  bench->add_flag("--csv", cfg.csv, "Emit CSV instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compress->parsed()) return cmd_compress(cfg, out);
    if (decompress->parsed()) return cmd_decompress(cfg);
    if (inspect->parsed()) return cmd_inspect(cfg, out);
    const bool styled = terminal.stdout_is_tty && !cfg.csv && std::getenv("ADA_NO_COLOR") == nullptr;
    return cmd_bench(cfg, out, err, styled);
  } catch (const Error& e) {
    err << "ada: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "ada: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ada::cli
