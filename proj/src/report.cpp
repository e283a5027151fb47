#include "lcsk/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lcsk {

const char* to_string(Mode mode) { return mode == Mode::Lcsk ? "lcsk" : "lcskplus"; }

const char* to_string(GeneratorKind kind) {
  return kind == GeneratorKind::Hashing ? "hashing" : "sa";
}

std::vector<ChainSegment> merge_chain_segments(std::span<const MatchPair> chain, int64_t k,
                                               Mode mode) {
  std::vector<ChainSegment> segments;
  const MatchPair* prev = nullptr;
  for (const MatchPair& p : chain) {
    if (mode == Mode::LcskPlus && prev && continues(p, *prev)) {
      ++segments.back().len;
    } else {
      segments.push_back({p.i, p.j, k});
    }
    prev = &p;
  }
  return segments;
}

RunReport make_report(const Sequence& a, const Sequence& b, const SolverConfig& config,
                      const SolveResult& result, double wall_time) {
  RunReport report;
  report.mode = config.mode;
  report.k = config.k;
  report.m = seq_length(a);
  report.n = seq_length(b);
  report.length = result.length;
  report.generator_used = result.generator_used;
  report.sparse_rows = result.sparse_rows;
  report.dense_rows = result.dense_rows;
  report.stats = result.stats;
  report.wall_time = wall_time;
  if (result.chain) {
    report.chain = merge_chain_segments(*result.chain, config.k, config.mode);
  }
  return report;
}

std::string to_text(const RunReport& report, bool with_stats) {
  std::ostringstream out;
  out << report.length << '\n';
  if (report.chain) {
    for (const ChainSegment& seg : *report.chain) {
      out << seg.i << ' ' << seg.j << ' ' << seg.len << '\n';
    }
  }
  if (with_stats) {
    out << "mode: " << to_string(report.mode) << '\n'
        << "k: " << report.k << '\n'
        << "m: " << report.m << '\n'
        << "n: " << report.n << '\n'
        << "generator_used: " << to_string(report.generator_used) << '\n'
        << "sparse_rows: " << report.sparse_rows << '\n'
        << "dense_rows: " << report.dense_rows << '\n'
        << "match_pairs_total: " << report.stats.match_pairs_total << '\n'
        << "max_nodes_in_memory: " << report.stats.max_nodes_in_memory << '\n'
        << "compression_factor: " << report.stats.compression_factor << '\n'
        << "wall_time: " << report.wall_time << '\n';
  }
  return std::move(out).str();
}

std::string to_json(const RunReport& report) {
  nlohmann::json j{
      {"mode", to_string(report.mode)},
      {"k", report.k},
      {"m", report.m},
      {"n", report.n},
      {"length", report.length},
      {"generator_used", to_string(report.generator_used)},
      {"sparse_rows", report.sparse_rows},
      {"dense_rows", report.dense_rows},
      {"match_pairs_total", report.stats.match_pairs_total},
      {"max_nodes_in_memory", report.stats.max_nodes_in_memory},
      {"compression_factor", report.stats.compression_factor},
      {"wall_time", report.wall_time},
  };
  if (report.chain) {
    nlohmann::json chain = nlohmann::json::array();
    for (const ChainSegment& seg : *report.chain) {
      chain.push_back({seg.i, seg.j, seg.len});
    }
    j["chain"] = std::move(chain);
  }
  return j.dump();
}

}  // namespace lcsk
