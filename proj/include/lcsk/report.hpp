#ifndef LCSK_REPORT_HPP
#define LCSK_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcsk/solver.hpp"
#include "lcsk/types.hpp"

namespace lcsk {

/// Everything one run produced, ready for rendering.
struct RunReport {
  Mode mode = Mode::LcskPlus;
  int64_t k = 1;
  int64_t m = 0;
  int64_t n = 0;
  int64_t length = 0;
  GeneratorKind generator_used = GeneratorKind::Hashing;
  int64_t sparse_rows = 0;
  int64_t dense_rows = 0;
  MemoryStats stats;
  double wall_time = 0.0;  // seconds
  std::optional<std::vector<ChainSegment>> chain;
};

const char* to_string(Mode mode);
const char* to_string(GeneratorKind kind);

/// Collapses a pair chain into maximal-run segments. Lcsk blocks stay one
/// segment each; LcskPlus merges each run of continuations.
std::vector<ChainSegment> merge_chain_segments(std::span<const MatchPair> chain, int64_t k,
                                               Mode mode);

RunReport make_report(const Sequence& a, const Sequence& b, const SolverConfig& config,
                      const SolveResult& result, double wall_time);

/// Length, then chain segments one per line, then key: value statistics
/// when requested.
std::string to_text(const RunReport& report, bool with_stats);

/// Flat object keyed by field names; the chain is an array of [i, j, len].
std::string to_json(const RunReport& report);

}  // namespace lcsk

#endif  // LCSK_REPORT_HPP
