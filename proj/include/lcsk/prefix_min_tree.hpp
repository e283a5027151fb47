#ifndef LCSK_PREFIX_MIN_TREE_HPP
#define LCSK_PREFIX_MIN_TREE_HPP

#include <cstdint>
#include <vector>

#include "lcsk/chain_store.hpp"
#include "lcsk/compressed_row.hpp"
#include "lcsk/types.hpp"

namespace lcsk {

/// Complete binary tree supporting range-min updates on a prefix of leaves
/// and point queries, both in O(log n). A query reads the minimum stored
/// along the root-to-leaf path; a prefix update [0..i] stamps the value on
/// the maximal subtrees covering the prefix, which are the left siblings
/// along the path to leaf i+1. Capacity doubles on demand: the old root is
/// re-rooted as the left child of a fresh root, shifting node x at depth d
/// to index x + 2^d in the heap layout.
class PrefixMinTree {
 public:
  explicit PrefixMinTree(bool track_owners = false, int64_t initial_leaves = 2);

  /// Minimum value covering leaf i; kInfinity when nothing covers it yet.
  int64_t query(int64_t leaf) const;

  /// values[0..leaf] <- min(values[0..leaf], value). Grows the tree so the
  /// leaf one past the prefix exists.
  void prefix_update(int64_t leaf, int64_t value, ChainNode* node = nullptr);

  /// The node stamped where the path minimum for this leaf is achieved,
  /// shallowest such position winning ties. Null when untouched.
  ChainNode* query_owner(int64_t leaf) const;

  int64_t leaf_capacity() const { return leaves_; }

 private:
  void grow();

  int64_t leaves_ = 0;
  std::vector<int64_t> values_;  // 1-based heap; leaves at [leaves_, 2*leaves_)
  std::vector<NodeRef> owners_;
  bool track_owners_ = false;
};

}  // namespace lcsk

#endif  // LCSK_PREFIX_MIN_TREE_HPP
