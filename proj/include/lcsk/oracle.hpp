#ifndef LCSK_ORACLE_HPP
#define LCSK_ORACLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcsk/types.hpp"

namespace lcsk::oracle {

/// Full quadratic table; verification-scale inputs only.
struct DpTable {
  int64_t m = 0;
  int64_t n = 0;
  int64_t k = 1;
  Mode mode = Mode::Lcsk;
  std::vector<int64_t> values;  // (m+1) x (n+1), row-major

  int64_t at(int64_t i, int64_t j) const { return values[i * (n + 1) + j]; }
  int64_t result() const { return at(m, n); }
};

/// Textbook prefix recurrence, no sparsity: cell (i, j) extends (i-1, j),
/// (i, j-1), or closes a shared block ending exactly at the cell (length k
/// for Lcsk, any length >= k for LcskPlus).
DpTable dp_table(const Sequence& a, const Sequence& b, int64_t k, Mode mode);

struct ChainCheck {
  bool ok = true;
  int64_t score = 0;     // blocks for Lcsk, characters for LcskPlus
  std::string reason;    // first violated condition when !ok
};

/// Checks a reported chain from scratch: segment lengths, bounds, substring
/// equality, and strictly advancing non-overlapping order.
ChainCheck validate_chain(const Sequence& a, const Sequence& b, int64_t k, Mode mode,
                          std::span<const ChainSegment> segments);

/// A table cell holding value q with no other q-cell weakly above-left of
/// it; 1-based prefix coordinates.
struct DominantPoint {
  int64_t i = 0;
  int64_t j = 0;
  int64_t q = 0;

  friend bool operator==(const DominantPoint&, const DominantPoint&) = default;
  friend auto operator<=>(const DominantPoint&, const DominantPoint&) = default;
};

/// Minimal antichain of each value q >= 1, ordered by (q, i).
std::vector<DominantPoint> dominant_points(const DpTable& table);

/// All match pairs by direct substring comparison, row-major order.
std::vector<MatchPair> brute_force_match_pairs(const Sequence& a, const Sequence& b, int64_t k);

}  // namespace lcsk::oracle

#endif  // LCSK_ORACLE_HPP
