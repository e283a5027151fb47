#include "lcsk/compressed_row.hpp"

#include <cassert>

namespace lcsk {

CompressedRow CompressedRow::from_thresholds(std::vector<int64_t> thresholds) {
  assert(!thresholds.empty() && thresholds.front() == 0);
  CompressedRow row;
  row.thresholds_ = std::move(thresholds);
  row.check_invariant();
  return row;
}

int64_t CompressedRow::query(int64_t j) const {
  assert(j >= 1);
  int64_t lo = 0;
  int64_t hi = best();
  while (lo < hi) {
    int64_t mid = lo + (hi - lo + 1) / 2;
    if (thresholds_[static_cast<size_t>(mid)] < j) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

void CompressedRow::extend_to(int64_t d) {
  while (ssize() <= d) {
    thresholds_.push_back(kInfinity);
    if (track_owners_) owners_.emplace_back();
  }
}

void CompressedRow::update_min(int64_t d, int64_t j, ChainNode* node) {
  assert(d >= 1 && d <= ssize());
  extend_to(d);
  auto ud = static_cast<size_t>(d);
  if (j < thresholds_[ud]) {
    thresholds_[ud] = j;
    if (track_owners_) owners_[ud] = NodeRef::share(node);
  }
  check_invariant();
}

void CompressedRow::prefix_update_min(int64_t d, int64_t j, int64_t span, ChainNode* node) {
  assert(d >= 1 && span >= 1 && span <= d);
  // The walk may append up to span new slots, but its bottom must connect
  // to the existing array or the gap would be left at infinity.
  assert(d - span <= ssize() - 1);
  extend_to(d);
  // Walk downward; once a slot is already <= j, all slots below it are too.
  for (int64_t s = d; s > d - span; --s) {
    auto us = static_cast<size_t>(s);
    if (thresholds_[us] <= j) break;
    thresholds_[us] = j;
    if (track_owners_) owners_[us] = NodeRef::share(node);
  }
  check_invariant();
}

void CompressedRow::check_invariant() const {
#ifndef NDEBUG
  for (size_t d = 1; d < thresholds_.size(); ++d) {
    assert(thresholds_[d - 1] <= thresholds_[d]);
  }
  assert(!track_owners_ || owners_.size() == thresholds_.size());
#endif
}

}  // namespace lcsk
