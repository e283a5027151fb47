#include "lcsk/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "lcsk/match_gen.hpp"

namespace lcsk {

bool row_is_sparse(int64_t row_matches, int64_t threshold_length) {
  int64_t log_cost = std::bit_width(static_cast<uint64_t>(threshold_length + 2 - 1));
  return row_matches * log_cost < row_matches + threshold_length;
}

RowSweep::RowSweep(const SolverConfig& config)
    : config_(config), row_(config.reconstruct) {
  assert(config_.k >= 1);
  if (config_.mode == Mode::LcskPlus && config_.lcskplus_update == UpdateRule::Tree) {
    tree_.emplace(config_.reconstruct);
  }
}

int64_t RowSweep::store_get(int64_t d) const {
  if (d == 0) return 0;
  return tree_ ? tree_->query(d) : row_.get(d);
}

ChainNode* RowSweep::store_owner(int64_t d) const {
  if (d == 0) return nullptr;
  return tree_ ? tree_->query_owner(d) : row_.owner(d);
}

int64_t RowSweep::query_start(int64_t column) const {
  // Largest d whose threshold sits strictly left of the start column, so
  // that chain's last block ends before this pair begins.
  int64_t j = column + 1;
  int64_t lo = 0;
  int64_t hi = best_;
  while (lo < hi) {
    int64_t mid = lo + (hi - lo + 1) / 2;
    if (store_get(mid) < j) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

void RowSweep::read_start(const MatchPair& p, int64_t d) {
  PairRecord rec;
  rec.start_d = d;
  if (config_.reconstruct) rec.pred = NodeRef::share(store_owner(d));
  records_.emplace(std::pair{p.i, p.j}, std::move(rec));
}

void RowSweep::write_end(const MatchPair& p) {
  auto it = records_.find({p.i, p.j});
  assert(it != records_.end());
  if (it == records_.end()) return;
  PairRecord& rec = it->second;

  int64_t dp;
  ChainNode* pred = nullptr;
  int64_t span;
  if (config_.mode == Mode::Lcsk) {
    dp = rec.start_d + 1;
    pred = rec.pred.get();
    span = 1;
  } else {
    // Chars gained: k past the best chain ending left of the start, or one
    // more than the pair this one continues. Ties keep the continuation.
    int64_t prec_dp = rec.start_d + config_.k;
    auto cont = records_.find({p.i - 1, p.j - 1});
    if (cont != records_.end() && cont->second.dp + 1 >= prec_dp) {
      dp = cont->second.dp + 1;
      pred = cont->second.node.get();
      span = 1;
    } else {
      dp = prec_dp;
      pred = rec.pred.get();
      span = config_.k;
    }
  }

  NodeRef node;
  if (config_.reconstruct) node = NodeRef::adopt(chains_.make_node(p, dp, pred));

  int64_t end_column = p.j + config_.k;  // one past the end point
  if (tree_) {
    tree_->prefix_update(dp, end_column, node.get());
  } else if (config_.mode == Mode::Lcsk) {
    row_.update_min(dp, end_column, node.get());
  } else {
    row_.prefix_update_min(dp, end_column, span, node.get());
  }

  rec.dp = dp;
  if (config_.mode == Mode::LcskPlus) rec.node = std::move(node);
  best_ = std::max(best_, dp);
}

void RowSweep::prune_records(int64_t row) {
  // A record serves its own end point k-1 rows after the start and a
  // possible continuation one row after that.
  while (!record_rows_.empty() && record_rows_.front().first <= row - config_.k) {
    for (const auto& key : record_rows_.front().second) records_.erase(key);
    record_rows_.pop_front();
  }
}

void RowSweep::process_row(const RowEvents& events) {
  assert(events.row > last_row_);
  last_row_ = events.row;
  pairs_ += std::ssize(events.starts);

  bool sparse;
  switch (config_.row_strategy) {
    case RowStrategy::ForceSparse:
      sparse = true;
      break;
    case RowStrategy::ForceDense:
      sparse = false;
      break;
    default:
      sparse = row_is_sparse(std::ssize(events.starts), best_ + 1);
  }
  ++(sparse ? sparse_rows_ : dense_rows_);

  if (!events.starts.empty()) {
    auto& keys = record_rows_.emplace_back(events.row, std::vector<std::pair<int64_t, int64_t>>{}).second;
    keys.reserve(events.starts.size());
    for (const MatchPair& p : events.starts) keys.emplace_back(p.i, p.j);

    if (sparse) {
      for (const MatchPair& p : events.starts) read_start(p, query_start(p.j));
    } else {
      // Merged scan: starts and thresholds advance together. A column step
      // backwards (permuted input) just restarts the cursor.
      int64_t d = 0;
      int64_t prev_col = kInfinity;
      for (const MatchPair& p : events.starts) {
        if (p.j < prev_col) d = 0;
        prev_col = p.j;
        while (store_get(d + 1) < p.j + 1) ++d;
        read_start(p, d);
      }
    }
  }

  for (const MatchPair& p : events.ends) {
    assert(p.i == events.row - config_.k + 1);
    write_end(p);
  }

  prune_records(events.row);
}

void RowSweep::drain_window() {
  records_.clear();
  record_rows_.clear();
}

SolveResult RowSweep::finish() {
  drain_window();

  SolveResult result;
  result.length = best_;
  result.sparse_rows = sparse_rows_;
  result.dense_rows = dense_rows_;
  result.stats.match_pairs_total = pairs_;
  if (config_.reconstruct) {
    result.stats.max_nodes_in_memory = chains_.peak();
    result.stats.compression_factor =
        pairs_ > 0 && chains_.peak() > 0 ? static_cast<double>(pairs_) / chains_.peak() : 1.0;
    result.chain = extract_chain(best_ > 0 ? store_owner(best_) : nullptr);
  }
  return result;
}

namespace {

Alphabet resolve_alphabet(const Sequence& a, const Sequence& b, AlphabetChoice choice) {
  switch (choice) {
    case AlphabetChoice::Dna: {
      Alphabet alpha = Alphabet::dna();
      if (!alpha.contains_all(a) || !alpha.contains_all(b)) {
        throw InputError("sequence contains symbols outside the declared alphabet");
      }
      return alpha;
    }
    case AlphabetChoice::Byte:
      return Alphabet::bytes();
    default:
      return Alphabet::discover(a, b);
  }
}

}  // namespace

SolveResult solve(const Sequence& a, const Sequence& b, const SolverConfig& config) {
  if (config.k < 1) throw ConfigError("k must be >= 1");
  if (config.mode == Mode::Lcsk && config.lcskplus_update == UpdateRule::Tree) {
    throw ConfigError("the tree update rule applies to LcskPlus only");
  }

  Alphabet alpha = resolve_alphabet(a, b, config.alphabet);
  auto stream = make_stream(a, b, config.k, alpha, config.generator);

  RowSweep sweep(config);
  const int64_t m = seq_length(a);
  RowEventBuffer buffer(*stream, m, config.k);
  for (int64_t i = 0; i < m; ++i) sweep.process_row(buffer.events_for_row(i));

  SolveResult result = sweep.finish();
  result.generator_used = stream->kind();
  return result;
}

}  // namespace lcsk
