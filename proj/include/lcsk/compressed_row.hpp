#ifndef LCSK_COMPRESSED_ROW_HPP
#define LCSK_COMPRESSED_ROW_HPP

#include <cstdint>
#include <vector>

#include "lcsk/chain_store.hpp"
#include "lcsk/types.hpp"

namespace lcsk {

/// The compressed state of the sweep: thresholds[d] is the smallest column
/// at which some chain of value d can end, over all rows seen so far. The
/// array is non-decreasing, starts with a zero sentinel at d = 0, and every
/// slot past the current end reads as +infinity. Entries only shrink as the
/// sweep advances, and the array grows by at most one new slot per update.
class CompressedRow {
 public:
  explicit CompressedRow(bool track_owners = false) : track_owners_(track_owners) {
    thresholds_.push_back(0);
    if (track_owners_) owners_.emplace_back();
  }

  /// Builds a row in a given state; for replaying recorded snapshots.
  static CompressedRow from_thresholds(std::vector<int64_t> thresholds);

  int64_t get(int64_t d) const {
    return d < ssize() ? thresholds_[static_cast<size_t>(d)] : kInfinity;
  }

  /// Largest d with thresholds[d] < j. Requires j >= 1 so the sentinel
  /// keeps d = 0 as a floor.
  int64_t query(int64_t j) const;

  /// thresholds[d] <- min(thresholds[d], j). d may be at most one past the
  /// current end, which appends a slot. The owner node, when given, is
  /// recorded on the slot iff the value actually improved.
  void update_min(int64_t d, int64_t j, ChainNode* node = nullptr);

  /// Applies update_min to d, d-1, ..., d-span+1, stopping early at the
  /// first slot already <= j (everything below it is smaller still). May
  /// append up to span slots; the span's bottom must lie within the array
  /// or at most one past its end.
  void prefix_update_min(int64_t d, int64_t j, int64_t span, ChainNode* node = nullptr);

  /// Largest d with a finite threshold: the best chain value so far.
  int64_t best() const { return ssize() - 1; }

  ChainNode* owner(int64_t d) const {
    return track_owners_ && d < ssize() ? owners_[static_cast<size_t>(d)].get() : nullptr;
  }

  const std::vector<int64_t>& thresholds() const { return thresholds_; }

 private:
  int64_t ssize() const { return static_cast<int64_t>(thresholds_.size()); }
  void extend_to(int64_t d);
  void check_invariant() const;

  std::vector<int64_t> thresholds_;
  std::vector<NodeRef> owners_;  // parallel to thresholds_ when tracking
  bool track_owners_ = false;
};

}  // namespace lcsk

#endif  // LCSK_COMPRESSED_ROW_HPP
