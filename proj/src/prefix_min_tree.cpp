#include "lcsk/prefix_min_tree.hpp"

#include <bit>
#include <cassert>
#include <utility>

namespace lcsk {

PrefixMinTree::PrefixMinTree(bool track_owners, int64_t initial_leaves)
    : leaves_(initial_leaves), track_owners_(track_owners) {
  assert(initial_leaves >= 1 && std::has_single_bit(static_cast<uint64_t>(initial_leaves)));
  values_.assign(static_cast<size_t>(2 * leaves_), kInfinity);
  if (track_owners_) owners_.resize(values_.size());
}

int64_t PrefixMinTree::query(int64_t leaf) const {
  assert(leaf >= 0);
  if (leaf >= leaves_) return kInfinity;
  int64_t out = kInfinity;
  for (int64_t x = leaves_ + leaf; x >= 1; x /= 2) {
    out = std::min(out, values_[static_cast<size_t>(x)]);
  }
  return out;
}

void PrefixMinTree::grow() {
  // Fresh root with the old tree as its left subtree: node x at depth d
  // keeps its depth-local position, landing at x + bit_floor(x).
  int64_t new_leaves = leaves_ * 2;
  std::vector<int64_t> values(static_cast<size_t>(2 * new_leaves), kInfinity);
  std::vector<NodeRef> owners;
  if (track_owners_) owners.resize(values.size());
  for (int64_t x = 1; x < 2 * leaves_; ++x) {
    int64_t nx = x + std::bit_floor(static_cast<uint64_t>(x));
    values[static_cast<size_t>(nx)] = values_[static_cast<size_t>(x)];
    if (track_owners_) owners[static_cast<size_t>(nx)] = std::move(owners_[static_cast<size_t>(x)]);
  }
  leaves_ = new_leaves;
  values_ = std::move(values);
  owners_ = std::move(owners);
}

void PrefixMinTree::prefix_update(int64_t leaf, int64_t value, ChainNode* node) {
  assert(leaf >= 0);
  // The descent walks toward the leaf one past the prefix, so that leaf
  // must exist.
  int64_t target = leaf + 1;
  while (leaves_ < target + 1) grow();

  int64_t x = 1;
  int64_t lo = 0;
  int64_t hi = leaves_;
  while (x < leaves_) {
    int64_t mid = lo + (hi - lo) / 2;
    if (target >= mid) {
      // Left child covers [lo, mid) which sits wholly inside the prefix.
      int64_t left = 2 * x;
      if (value < values_[static_cast<size_t>(left)]) {
        values_[static_cast<size_t>(left)] = value;
        if (track_owners_) owners_[static_cast<size_t>(left)] = NodeRef::share(node);
      }
      x = 2 * x + 1;
      lo = mid;
    } else {
      x = 2 * x;
      hi = mid;
    }
  }
}

ChainNode* PrefixMinTree::query_owner(int64_t leaf) const {
  assert(leaf >= 0);
  if (!track_owners_ || leaf >= leaves_) return nullptr;
  auto full = static_cast<uint64_t>(leaves_ + leaf);
  int64_t min_value = kInfinity;
  ChainNode* owner = nullptr;
  for (int s = std::bit_width(full) - 1; s >= 0; --s) {
    auto x = static_cast<size_t>(full >> s);
    if (values_[x] < min_value) {
      min_value = values_[x];
      owner = owners_[x].get();
    }
  }
  return owner;
}

}  // namespace lcsk
