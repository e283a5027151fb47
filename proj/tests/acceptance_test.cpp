// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails. Budgets and tolerances are pinned as constants below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lcsk/compressed_row.hpp"
#include "lcsk/match_gen.hpp"
#include "lcsk/oracle.hpp"
#include "lcsk/prefix_min_tree.hpp"
#include "lcsk/report.hpp"
#include "lcsk/solver.hpp"

using lcsk::GeneratorChoice;
using lcsk::MatchPair;
using lcsk::Mode;
using lcsk::RowStrategy;
using lcsk::Sequence;
using lcsk::SolverConfig;
using lcsk::UpdateRule;

namespace {

constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kOracleSweepBudgetSeconds = 60.0;
constexpr double kMemoryBudgetSeconds = 30.0;
constexpr double kMinCompressionFactor = 10.0;
constexpr double kMaxDoublingRatio = 3.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Sequence random_string(std::mt19937_64& rng, const std::string& sigma, int64_t n) {
  Sequence s;
  s.reserve(n);
  for (int64_t t = 0; t < n; ++t) s.push_back(sigma[rng() % sigma.size()]);
  return s;
}

struct Instance {
  Sequence a, b;
  int64_t k;
};

std::vector<Instance> make_corpus() {
  std::mt19937_64 rng(20260816);
  const std::string alphabets[] = {"A", "AB", "ACGT", "ABCDEFGHIJKLMNOPQRST"};
  std::vector<Instance> corpus;
  corpus.reserve(2000);
  for (int t = 0; t < 2000; ++t) {
    const std::string& sigma = alphabets[t % 4];
    corpus.push_back({random_string(rng, sigma, static_cast<int64_t>(rng() % 61)),
                      random_string(rng, sigma, static_cast<int64_t>(rng() % 61)),
                      static_cast<int64_t>(rng() % 5) + 1});
  }
  return corpus;
}

int64_t solve_length(const Sequence& a, const Sequence& b, int64_t k, Mode mode,
                     RowStrategy strategy, UpdateRule update) {
  SolverConfig config;
  config.mode = mode;
  config.k = k;
  config.row_strategy = strategy;
  config.lcskplus_update = update;
  return lcsk::solve(a, b, config).length;
}

// ---------------------------------------------------------------------------

Outcome golden_examples() {
  auto start = std::chrono::steady_clock::now();
  struct Golden {
    Sequence a, b;
    Mode mode;
    int64_t k;
    int64_t expected;
  };
  const Golden goldens[] = {
      {"ABCBA", "ABCBA", Mode::Lcsk, 3, 1},
      {"ABCBA", "ABCBA", Mode::LcskPlus, 3, 5},
      {"ABXXXCDE", "ABYYYCDE", Mode::Lcsk, 2, 2},
      {"ABXXXCDE", "ABYYYCDE", Mode::LcskPlus, 2, 5},
      {"AAA", "AA", Mode::Lcsk, 1, 2},
      {"AAA", "AA", Mode::LcskPlus, 1, 2},
  };
  for (const Golden& g : goldens) {
    SolverConfig config;
    config.mode = g.mode;
    config.k = g.k;
    int64_t got = lcsk::solve(g.a, g.b, config).length;
    if (got != g.expected) {
      return {false, "LCS(" + g.a + "," + g.b + ") k=" + std::to_string(g.k) + " got " +
                         std::to_string(got) + " want " + std::to_string(g.expected)};
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= kGoldenBudgetSeconds) {
    return {false, "took " + std::to_string(elapsed) + "s, budget 1s"};
  }
  return {true, ""};
}

Outcome five_pair_instance() {
  const Sequence a = "ATTAT";
  const Sequence b = "CTATAGAGTA";
  const std::vector<MatchPair> expected = {{0, 2}, {2, 1}, {2, 3}, {2, 8}, {3, 2}};

  lcsk::Alphabet alphabet = lcsk::Alphabet::discover(a, b);
  for (GeneratorChoice choice : {GeneratorChoice::Hashing, GeneratorChoice::SuffixArray}) {
    auto stream = lcsk::make_stream(a, b, 2, alphabet, choice);
    if (lcsk::collect_match_pairs(*stream, lcsk::seq_length(a), 2) != expected) {
      return {false, "pair set mismatch"};
    }
  }

  const MatchPair pa{2, 1}, pb{3, 2}, pc{0, 2}, pd{2, 3}, pe{2, 8};
  if (!precedes(pc, pe, 2)) return {false, "c must precede e"};
  if (precedes(pa, pb, 2)) return {false, "a must not precede b"};
  if (precedes(pc, pd, 2)) return {false, "c must not precede d"};
  return {true, ""};
}

Outcome threshold_replay() {
  auto row = lcsk::CompressedRow::from_thresholds(
      {0, 5, 5, 5, 5, 33, 43, 43, 43, 43, 44, 49, 49, 49, 49});
  if (row.query(28) != 4) return {false, "query(28) != 4"};
  row.prefix_update_min(4 + 4, 31, 4);
  const std::vector<int64_t> expected = {0, 5, 5, 5, 5, 31, 31, 31, 31, 43, 44, 49, 49, 49, 49};
  if (row.thresholds() != expected) return {false, "updated array mismatch"};
  return {true, ""};
}

Outcome oracle_sweep(const std::vector<Instance>& corpus, bool& corpus_peak_ok) {
  auto start = std::chrono::steady_clock::now();
  corpus_peak_ok = true;
  int64_t checked = 0;
  for (const Instance& inst : corpus) {
    for (Mode mode : {Mode::Lcsk, Mode::LcskPlus}) {
      SolverConfig config;
      config.mode = mode;
      config.k = inst.k;
      config.reconstruct = true;
      auto result = lcsk::solve(inst.a, inst.b, config);

      int64_t expected = lcsk::oracle::dp_table(inst.a, inst.b, inst.k, mode).result();
      if (result.length != expected) {
        return {false, "length mismatch on instance " + std::to_string(checked)};
      }
      auto segments = lcsk::merge_chain_segments(*result.chain, inst.k, mode);
      auto check = lcsk::oracle::validate_chain(inst.a, inst.b, inst.k, mode, segments);
      if (!check.ok || check.score != result.length) {
        return {false, "chain invalid on instance " + std::to_string(checked) + ": " +
                           check.reason};
      }
      if (result.stats.max_nodes_in_memory > result.stats.match_pairs_total) {
        corpus_peak_ok = false;
      }
      ++checked;
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= kOracleSweepBudgetSeconds) {
    return {false, "took " + std::to_string(elapsed) + "s, budget 60s"};
  }
  return {true, std::to_string(checked) + " solves"};
}

Outcome strategy_invariance(const std::vector<Instance>& corpus) {
  for (const Instance& inst : corpus) {
    for (Mode mode : {Mode::Lcsk, Mode::LcskPlus}) {
      int64_t auto_len =
          solve_length(inst.a, inst.b, inst.k, mode, RowStrategy::Auto, UpdateRule::KStep);
      int64_t sparse_len =
          solve_length(inst.a, inst.b, inst.k, mode, RowStrategy::ForceSparse, UpdateRule::KStep);
      int64_t dense_len =
          solve_length(inst.a, inst.b, inst.k, mode, RowStrategy::ForceDense, UpdateRule::KStep);
      if (auto_len != sparse_len || auto_len != dense_len) {
        return {false, "strategy mismatch"};
      }
      if (mode == Mode::LcskPlus) {
        int64_t tree_len =
            solve_length(inst.a, inst.b, inst.k, mode, RowStrategy::Auto, UpdateRule::Tree);
        if (tree_len != auto_len) return {false, "update rule mismatch"};
      }
    }
  }
  return {true, ""};
}

Outcome generator_equivalence() {
  std::mt19937_64 rng(424242);
  const std::string alphabets[] = {"A", "AB", "ACGT", "ABCDEFGHIJKLMNOPQRST"};
  auto pairs_of = [](const Sequence& a, const Sequence& b, int64_t k, GeneratorChoice choice) {
    lcsk::Alphabet alphabet = lcsk::Alphabet::discover(a, b);
    auto stream = lcsk::make_stream(a, b, k, alphabet, choice);
    return lcsk::collect_match_pairs(*stream, lcsk::seq_length(a), k);
  };

  for (int t = 0; t < 500; ++t) {
    const std::string& sigma = alphabets[t % 4];
    Sequence a = random_string(rng, sigma, static_cast<int64_t>(rng() % 301));
    Sequence b = random_string(rng, sigma, static_cast<int64_t>(rng() % 301));
    int64_t k = static_cast<int64_t>(rng() % 8) + 1;
    if (pairs_of(a, b, k, GeneratorChoice::Hashing) !=
        pairs_of(a, b, k, GeneratorChoice::SuffixArray)) {
      return {false, "pair set mismatch on instance " + std::to_string(t)};
    }
  }
  if (pairs_of("ATTAT", "CTATAGAGTA", 2, GeneratorChoice::Hashing) !=
      pairs_of("ATTAT", "CTATAGAGTA", 2, GeneratorChoice::SuffixArray)) {
    return {false, "pair set mismatch on the five-pair instance"};
  }
  return {true, ""};
}

Outcome memory_trend(bool corpus_peak_ok) {
  auto start = std::chrono::steady_clock::now();
  if (!corpus_peak_ok) return {false, "a corpus instance had peak > r"};

  std::mt19937_64 rng(777);
  Sequence genome = random_string(rng, "ACGT", 100000);
  SolverConfig config;
  config.mode = Mode::Lcsk;
  config.k = 12;
  config.reconstruct = true;
  auto result = lcsk::solve(genome, genome, config);

  if (result.stats.max_nodes_in_memory > result.stats.match_pairs_total) {
    return {false, "peak > r on the self comparison"};
  }
  double factor = result.stats.compression_factor;
  double elapsed = seconds_since(start);
  std::string detail = "factor " + std::to_string(factor);
  if (factor <= kMinCompressionFactor) return {false, detail + ", need > 10"};
  if (elapsed >= kMemoryBudgetSeconds) {
    return {false, "took " + std::to_string(elapsed) + "s, budget 30s"};
  }
  return {true, detail};
}

Outcome scaling_sanity() {
  std::mt19937_64 rng(31337);
  Sequence a1 = random_string(rng, "ACGT", 100000);
  Sequence b1 = random_string(rng, "ACGT", 100000);
  Sequence a2 = random_string(rng, "ACGT", 200000);
  Sequence b2 = random_string(rng, "ACGT", 200000);

  SolverConfig config;
  config.mode = Mode::Lcsk;
  config.k = 16;

  auto timed = [&config](const Sequence& a, const Sequence& b) {
    double best = 1e30;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      (void)lcsk::solve(a, b, config);
      best = std::min(best, seconds_since(start));
    }
    return best;
  };

  (void)lcsk::solve(a1, b1, config);  // warm-up
  double t1 = timed(a1, b1);
  double t2 = timed(a2, b2);
  double ratio = t2 / std::max(t1, 1e-9);
  std::string detail = "t(1e5)=" + std::to_string(t1) + "s t(2e5)=" + std::to_string(t2) +
                       "s ratio " + std::to_string(ratio);
  if (ratio >= kMaxDoublingRatio) return {false, detail + ", need < 3"};
  return {true, detail};
}

Outcome dominant_point_extraction() {
  using lcsk::oracle::DominantPoint;

  auto uniform = lcsk::oracle::dp_table("AAAAAAAA", "AAAAAAAA", 2, Mode::Lcsk);
  std::vector<DominantPoint> expected_uniform = {{2, 2, 1}, {4, 4, 2}, {6, 6, 3}, {8, 8, 4}};
  if (lcsk::oracle::dominant_points(uniform) != expected_uniform) {
    return {false, "uniform self-comparison grid mismatch"};
  }

  auto crossed = lcsk::oracle::dp_table("AABBCCDD", "BBAADDCC", 2, Mode::Lcsk);
  std::vector<DominantPoint> expected_crossed = {{2, 4, 1}, {4, 2, 1}, {6, 8, 2}, {8, 6, 2}};
  if (lcsk::oracle::dominant_points(crossed) != expected_crossed) {
    return {false, "crossed blocks grid mismatch"};
  }

  // Exhaustive tiny instances: every dominant point's value must be
  // realizable by an actual chain of blocks inside its prefix.
  for (int64_t la = 1; la <= 5; ++la) {
    for (int64_t lb = 1; lb <= 5; ++lb) {
      for (int64_t code_a = 0; code_a < (1 << la); ++code_a) {
        for (int64_t code_b = 0; code_b < (1 << lb); ++code_b) {
          Sequence a, b;
          for (int64_t t = 0; t < la; ++t) a.push_back(code_a >> t & 1 ? 'b' : 'a');
          for (int64_t t = 0; t < lb; ++t) b.push_back(code_b >> t & 1 ? 'b' : 'a');
          for (int64_t k = 1; k <= 2; ++k) {
            auto table = lcsk::oracle::dp_table(a, b, k, Mode::Lcsk);
            auto pairs = lcsk::oracle::brute_force_match_pairs(a, b, k);

            // Longest chain ending at each pair, quadratic over pairs.
            std::vector<int64_t> chain_len(pairs.size(), 1);
            for (size_t x = 0; x < pairs.size(); ++x) {
              for (size_t y = 0; y < x; ++y) {
                if (precedes(pairs[y], pairs[x], k)) {
                  chain_len[x] = std::max(chain_len[x], chain_len[y] + 1);
                }
              }
            }
            for (const DominantPoint& p : lcsk::oracle::dominant_points(table)) {
              int64_t realizable = 0;
              for (size_t x = 0; x < pairs.size(); ++x) {
                if (pairs[x].i + k <= p.i && pairs[x].j + k <= p.j) {
                  realizable = std::max(realizable, chain_len[x]);
                }
              }
              if (realizable != p.q) {
                return {false, "unrealizable dominant point in a=" + a + " b=" + b +
                                   " k=" + std::to_string(k)};
              }
            }
          }
        }
      }
    }
  }
  return {true, ""};
}

Outcome tree_oracle_match() {
  std::mt19937_64 rng(606060);
  for (int sequence = 0; sequence < 10000; ++sequence) {
    lcsk::PrefixMinTree tree;
    std::vector<int64_t> model(64, lcsk::kInfinity);
    for (int op = 0; op < 20; ++op) {
      int64_t leaf = static_cast<int64_t>(rng() % 64);
      if (rng() % 2 == 0) {
        int64_t value = static_cast<int64_t>(rng() % 1000);
        tree.prefix_update(leaf, value);
        for (int64_t t = 0; t <= leaf; ++t) model[t] = std::min(model[t], value);
      } else if (tree.query(leaf) != model[leaf]) {
        return {false, "mismatch in sequence " + std::to_string(sequence)};
      }
    }
  }
  return {true, ""};
}

}  // namespace

int main() {
  std::vector<Instance> corpus = make_corpus();

  bool corpus_peak_ok = true;
  Outcome results[11];
  const char* labels[11] = {};

  labels[1] = "golden example lengths";
  results[1] = golden_examples();
  labels[2] = "five-pair instance and precedence claims";
  results[2] = five_pair_instance();
  labels[3] = "threshold array replay, bit for bit";
  results[3] = threshold_replay();
  labels[4] = "oracle equivalence sweep with chain validation";
  results[4] = oracle_sweep(corpus, corpus_peak_ok);
  labels[5] = "strategy and update-rule invariance";
  results[5] = strategy_invariance(corpus);
  labels[6] = "generator equivalence";
  results[6] = generator_equivalence();
  labels[7] = "memory compression trend";
  results[7] = memory_trend(corpus_peak_ok);
  labels[8] = "near-linear scaling when n doubles";
  results[8] = scaling_sanity();
  labels[9] = "dominant point extraction";
  results[9] = dominant_point_extraction();
  labels[10] = "prefix-min tree versus naive oracle";
  results[10] = tree_oracle_match();

  int failures = 0;
  for (int t = 1; t <= 10; ++t) {
    const Outcome& r = results[t];
    if (!r.ok) ++failures;
    std::printf("%s %2d  %s%s%s\n", r.ok ? "PASS" : "FAIL", t, labels[t],
                r.detail.empty() ? "" : ": ", r.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
