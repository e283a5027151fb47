#include "lcsk/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace lcsk::oracle {

DpTable dp_table(const Sequence& a, const Sequence& b, int64_t k, Mode mode) {
  assert(k >= 1);
  DpTable table;
  table.m = seq_length(a);
  table.n = seq_length(b);
  table.k = k;
  table.mode = mode;
  table.values.assign((table.m + 1) * (table.n + 1), 0);

  for (int64_t i = 1; i <= table.m; ++i) {
    for (int64_t j = 1; j <= table.n; ++j) {
      int64_t best = std::max(table.at(i - 1, j), table.at(i, j - 1));
      // Shared blocks ending exactly at (i, j), grown backward one symbol
      // at a time until the first mismatch.
      for (int64_t t = 1; t <= std::min(i, j); ++t) {
        if (a[i - t] != b[j - t]) break;
        if (mode == Mode::Lcsk) {
          if (t == k) {
            best = std::max(best, table.at(i - k, j - k) + 1);
            break;
          }
        } else if (t >= k) {
          best = std::max(best, table.at(i - t, j - t) + t);
        }
      }
      table.values[i * (table.n + 1) + j] = best;
    }
  }
  return table;
}

ChainCheck validate_chain(const Sequence& a, const Sequence& b, int64_t k, Mode mode,
                          std::span<const ChainSegment> segments) {
  ChainCheck check;
  const int64_t m = seq_length(a);
  const int64_t n = seq_length(b);

  auto fail = [&check](std::string reason) {
    check.ok = false;
    check.score = 0;
    check.reason = std::move(reason);
    return check;
  };

  for (size_t s = 0; s < segments.size(); ++s) {
    const ChainSegment& seg = segments[s];
    if (mode == Mode::Lcsk && seg.len != k) return fail("segment wrong length");
    if (mode == Mode::LcskPlus && seg.len < k) return fail("segment too short");
    if (seg.i < 0 || seg.j < 0 || seg.i + seg.len > m || seg.j + seg.len > n) {
      return fail("segment out of bounds");
    }
    if (a.compare(seg.i, seg.len, b, seg.j, seg.len) != 0) return fail("substring mismatch");
    if (s > 0) {
      const ChainSegment& prev = segments[s - 1];
      if (prev.i + prev.len > seg.i || prev.j + prev.len > seg.j) return fail("segments overlap");
    }
    check.score += mode == Mode::Lcsk ? 1 : seg.len;
  }
  return check;
}

std::vector<DominantPoint> dominant_points(const DpTable& table) {
  std::vector<DominantPoint> cells;
  for (int64_t i = 1; i <= table.m; ++i) {
    for (int64_t j = 1; j <= table.n; ++j) {
      if (int64_t q = table.at(i, j); q >= 1) cells.push_back({i, j, q});
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const DominantPoint& x, const DominantPoint& y) {
              return std::tie(x.q, x.i, x.j) < std::tie(y.q, y.i, y.j);
            });

  // Within one value, scanning by ascending row keeps exactly the cells
  // whose column undercuts everything kept before them.
  std::vector<DominantPoint> out;
  size_t t = 0;
  while (t < cells.size()) {
    int64_t q = cells[t].q;
    int64_t min_j = kInfinity;
    for (; t < cells.size() && cells[t].q == q; ++t) {
      if (cells[t].j < min_j) {
        out.push_back(cells[t]);
        min_j = cells[t].j;
      }
    }
  }
  return out;
}

std::vector<MatchPair> brute_force_match_pairs(const Sequence& a, const Sequence& b, int64_t k) {
  std::vector<MatchPair> pairs;
  for (int64_t i = 0; i + k <= seq_length(a); ++i) {
    for (int64_t j = 0; j + k <= seq_length(b); ++j) {
      if (a.compare(i, k, b, j, k) == 0) pairs.push_back({i, j});
    }
  }
  return pairs;
}

}  // namespace lcsk::oracle
