#ifndef LCSK_SOLVER_HPP
#define LCSK_SOLVER_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcsk/chain_store.hpp"
#include "lcsk/compressed_row.hpp"
#include "lcsk/prefix_min_tree.hpp"
#include "lcsk/types.hpp"

namespace lcsk {

struct SolverConfig {
  Mode mode = Mode::LcskPlus;
  int64_t k = 1;
  RowStrategy row_strategy = RowStrategy::Auto;
  UpdateRule lcskplus_update = UpdateRule::KStep;
  GeneratorChoice generator = GeneratorChoice::Auto;
  AlphabetChoice alphabet = AlphabetChoice::Auto;
  bool reconstruct = false;
};

/// Per-row work estimate: binary searches win when
/// matches * ceil(log2(len + 2)) < matches + len, a merged linear scan
/// otherwise. len is the current threshold array length.
bool row_is_sparse(int64_t row_matches, int64_t threshold_length);

/// The row-major sweep. Rows arrive in increasing order; within a row all
/// start points are read against the threshold state before any end point
/// writes it, so results do not depend on the order of starts.
class RowSweep {
 public:
  explicit RowSweep(const SolverConfig& config);

  void process_row(const RowEvents& events);

  /// Best chain value seen so far.
  int64_t best_value() const { return best_; }

  /// Drops pending per-pair records, extracts the chain and statistics.
  /// The sweep must not be fed further rows afterwards.
  SolveResult finish();

  int64_t sparse_rows() const { return sparse_rows_; }
  int64_t dense_rows() const { return dense_rows_; }
  int64_t pairs_seen() const { return pairs_; }

  /// Threshold state when the array representation is in use, else null.
  const CompressedRow* row_state() const { return tree_ ? nullptr : &row_; }
  const ChainStore& chains() const { return chains_; }
  /// Releases the per-pair records early (normally done by finish).
  void drain_window();

 private:
  struct PairRecord {
    int64_t start_d = 0;  // threshold index read at the start point
    int64_t dp = 0;       // value settled at the end point
    NodeRef pred;         // chain read at the start point
    NodeRef node;         // this pair's own node, kept for continuations
  };

  struct PairKeyHash {
    size_t operator()(const std::pair<int64_t, int64_t>& p) const {
      uint64_t h = static_cast<uint64_t>(p.first) * 0x9e3779b97f4a7c15ULL;
      h ^= static_cast<uint64_t>(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<size_t>(h);
    }
  };
  using RecordMap = std::unordered_map<std::pair<int64_t, int64_t>, PairRecord, PairKeyHash>;

  int64_t store_get(int64_t d) const;
  ChainNode* store_owner(int64_t d) const;
  int64_t query_start(int64_t column) const;
  void read_start(const MatchPair& p, int64_t d);
  void write_end(const MatchPair& p);
  void prune_records(int64_t row);

  SolverConfig config_;
  // The store outlives every NodeRef holder below it; members destruct in
  // reverse order, so the row, the tree, and the records must come after.
  ChainStore chains_;
  CompressedRow row_;
  std::optional<PrefixMinTree> tree_;
  RecordMap records_;
  std::deque<std::pair<int64_t, std::vector<std::pair<int64_t, int64_t>>>> record_rows_;
  int64_t best_ = 0;
  int64_t sparse_rows_ = 0;
  int64_t dense_rows_ = 0;
  int64_t pairs_ = 0;
  int64_t last_row_ = -1;
};

/// Full pipeline: alphabet resolution and validation, match-pair
/// generation, sweep, optional chain extraction.
SolveResult solve(const Sequence& a, const Sequence& b, const SolverConfig& config);

}  // namespace lcsk

#endif  // LCSK_SOLVER_HPP
