#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsk/io.hpp"
#include "lcsk/oracle.hpp"
#include "lcsk/report.hpp"
#include "lcsk/solver.hpp"

namespace {

using namespace lcsk;

struct InputOpts {
  std::string a_file;
  std::string b_file;
  std::string a_str;
  std::string b_str;
  bool fasta = false;
  bool fold = false;
};

void add_input_options(CLI::App& app, InputOpts& in) {
  app.add_option("--a", in.a_file, "File holding sequence A");
  app.add_option("--b", in.b_file, "File holding sequence B");
  app.add_option("--a-str", in.a_str, "Sequence A given inline");
  app.add_option("--b-str", in.b_str, "Sequence B given inline");
  app.add_flag("--fasta", in.fasta, "Treat input files as single-record FASTA");
  app.add_flag("--fold-case", in.fold, "Uppercase both sequences before matching");
}

Sequence load_one(const std::string& file, const std::string& inline_str, bool given_file,
                  bool given_inline, bool fasta, const char* which) {
  if (given_file == given_inline) {
    throw ConfigError(std::string("give sequence ") + which + " exactly once, via --" + which +
                      " or --" + which + "-str");
  }
  return given_file ? io::read_sequence_file(file, fasta) : inline_str;
}

std::pair<Sequence, Sequence> load_inputs(const CLI::App& app, const InputOpts& in,
                                          bool b_defaults_to_a) {
  bool a_file = app.count("--a") > 0;
  bool a_str = app.count("--a-str") > 0;
  bool b_file = app.count("--b") > 0;
  bool b_str = app.count("--b-str") > 0;

  Sequence a = load_one(in.a_file, in.a_str, a_file, a_str, in.fasta, "a");
  Sequence b;
  if (b_defaults_to_a && !b_file && !b_str) {
    b = a;
  } else {
    b = load_one(in.b_file, in.b_str, b_file, b_str, in.fasta, "b");
  }
  if (in.fold) {
    io::fold_case(a);
    io::fold_case(b);
  }
  return {std::move(a), std::move(b)};
}

std::pair<int64_t, int64_t> parse_k_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int64_t k = std::stoll(text);
      return {k, k};
    }
    int64_t lo = std::stoll(text.substr(0, pos));
    int64_t hi = std::stoll(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw ConfigError("malformed k range '" + text + "'; expected LO..HI");
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_solve(const CLI::App& app, const InputOpts& in, SolverConfig config, bool json,
              bool stats) {
  if (app.count("-k") == 0) throw ConfigError("missing required option -k");
  auto [a, b] = load_inputs(app, in, false);
  auto t0 = std::chrono::steady_clock::now();
  SolveResult result = solve(a, b, config);
  RunReport report = make_report(a, b, config, result, seconds_since(t0));
  if (json) {
    std::cout << to_json(report) << '\n';
  } else {
    std::cout << to_text(report, stats);
  }
  return 0;
}

int run_bench(const CLI::App& bench, const InputOpts& in, SolverConfig config,
              const std::string& k_range, std::string label, bool json) {
  auto [lo, hi] = parse_k_range(k_range);
  if (lo < 1 || hi < lo) throw ConfigError("k range must satisfy 1 <= LO <= HI");

  auto [a, b] = load_inputs(bench, in, true);
  if (label.empty()) {
    label = bench.count("--a") > 0 ? std::filesystem::path(in.a_file).filename().string() : "a";
  }

  config.reconstruct = true;
  nlohmann::json rows = nlohmann::json::array();
  if (!json) {
    std::cout << "k\tlabel\tmatch_pairs_total\tmax_nodes_in_memory\tcompression_factor\n";
  }
  for (int64_t k = lo; k <= hi; ++k) {
    config.k = k;
    SolveResult result = solve(a, b, config);
    const MemoryStats& s = result.stats;
    if (json) {
      rows.push_back({{"k", k},
                      {"label", label},
                      {"match_pairs_total", s.match_pairs_total},
                      {"max_nodes_in_memory", s.max_nodes_in_memory},
                      {"compression_factor",
                       s.match_pairs_total > 0 ? nlohmann::json(s.compression_factor)
                                               : nlohmann::json()}});
    } else {
      std::cout << k << '\t' << label << '\t' << s.match_pairs_total << '\t'
                << s.max_nodes_in_memory << '\t';
      if (s.match_pairs_total > 0) {
        std::cout << s.compression_factor << '\n';
      } else {
        std::cout << "-\n";
      }
    }
  }
  if (json) std::cout << rows.dump() << '\n';
  return 0;
}

int run_oracle(const CLI::App& app, const InputOpts& in, Mode mode, int64_t k, bool dominant) {
  if (k < 1) throw ConfigError("k must be >= 1");
  auto [a, b] = load_inputs(app, in, false);
  oracle::DpTable table = oracle::dp_table(a, b, k, mode);
  std::cout << table.result() << '\n';
  if (dominant) {
    for (const auto& p : oracle::dominant_points(table)) {
      std::cout << p.i << ' ' << p.j << ' ' << p.q << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"longest common subsequence in k-length blocks (contiguous runs of length k, or >= k)"};
  app.require_subcommand(0, 1);

  const std::map<std::string, Mode> mode_names{{"lcsk", Mode::Lcsk}, {"lcskplus", Mode::LcskPlus}};
  const std::map<std::string, GeneratorChoice> generator_names{
      {"auto", GeneratorChoice::Auto},
      {"hashing", GeneratorChoice::Hashing},
      {"sa", GeneratorChoice::SuffixArray}};
  const std::map<std::string, RowStrategy> strategy_names{{"auto", RowStrategy::Auto},
                                                          {"sparse", RowStrategy::ForceSparse},
                                                          {"dense", RowStrategy::ForceDense}};
  const std::map<std::string, UpdateRule> update_names{{"kstep", UpdateRule::KStep},
                                                       {"tree", UpdateRule::Tree}};
  const std::map<std::string, AlphabetChoice> alphabet_names{{"auto", AlphabetChoice::Auto},
                                                             {"dna", AlphabetChoice::Dna},
                                                             {"byte", AlphabetChoice::Byte}};

  SolverConfig config;
  InputOpts in;
  bool json = false;
  bool stats = false;

  app.add_option("--mode", config.mode, "lcsk or lcskplus")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  app.add_option("-k,--k", config.k, "Block length");
  add_input_options(app, in);
  app.add_option("--alphabet", config.alphabet, "auto, dna or byte")
      ->transform(CLI::CheckedTransformer(alphabet_names, CLI::ignore_case));
  app.add_option("--generator", config.generator, "Match pair generator: auto, hashing or sa")
      ->transform(CLI::CheckedTransformer(generator_names, CLI::ignore_case));
  app.add_option("--strategy", config.row_strategy, "Per-row strategy: auto, sparse or dense")
      ->transform(CLI::CheckedTransformer(strategy_names, CLI::ignore_case));
  app.add_option("--lcskplus-update", config.lcskplus_update,
                 "Threshold update structure for lcskplus: kstep or tree")
      ->transform(CLI::CheckedTransformer(update_names, CLI::ignore_case));
  app.add_flag("--reconstruct", config.reconstruct, "Also output one optimal chain");
  app.add_flag("--json", json, "Emit the full run report as JSON");
  app.add_flag("--stats", stats, "Append match statistics and timing to the text output");

  // bench: memory profile of reconstruction across a k range.
  CLI::App* bench = app.add_subcommand("bench", "Sweep k over a range and report chain memory");
  SolverConfig bench_config;
  InputOpts bench_in;
  std::string k_range;
  std::string label;
  bool bench_json = false;
  bench->add_option("--k-range", k_range, "LO..HI, inclusive")->required();
  add_input_options(*bench, bench_in);
  bench->add_option("--mode", bench_config.mode, "lcsk or lcskplus")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  bench->add_option("--generator", bench_config.generator, "auto, hashing or sa")
      ->transform(CLI::CheckedTransformer(generator_names, CLI::ignore_case));
  bench->add_option("--alphabet", bench_config.alphabet, "auto, dna or byte")
      ->transform(CLI::CheckedTransformer(alphabet_names, CLI::ignore_case));
  bench->add_option("--label", label, "Row label in the report");
  bench->add_flag("--json", bench_json, "Emit rows as a JSON array");

  // Quadratic reference for ad-hoc cross-checks; intentionally unlisted.
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  Mode oracle_mode = Mode::LcskPlus;
  int64_t oracle_k = 1;
  InputOpts oracle_in;
  bool dominant = false;
  oracle_cmd->add_option("--mode", oracle_mode, "lcsk or lcskplus")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  oracle_cmd->add_option("-k,--k", oracle_k, "Block length")->required();
  add_input_options(*oracle_cmd, oracle_in);
  oracle_cmd->add_flag("--dominant", dominant, "Also print dominant points as 'i j q' lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bench->parsed()) return run_bench(*bench, bench_in, bench_config, k_range, label, bench_json);
    if (oracle_cmd->parsed()) return run_oracle(*oracle_cmd, oracle_in, oracle_mode, oracle_k, dominant);
    return run_solve(app, in, config, json, stats);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
