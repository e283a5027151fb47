#ifndef LCSK_CHAIN_STORE_HPP
#define LCSK_CHAIN_STORE_HPP

#include <cstdint>
#include <vector>

#include "lcsk/types.hpp"

namespace lcsk {

class ChainStore;

/// One link of a reconstruction chain. Nodes are reference counted: a node
/// is pointed at by threshold slots, by pending per-pair records inside the
/// sweep window, and by its successors' pred fields. When the last
/// reference drops the node is freed, which may cascade down the pred line.
struct ChainNode {
  MatchPair pair;
  int64_t dp = 0;
  ChainNode* pred = nullptr;  // counted reference into the predecessor chain
  int64_t refs = 0;
  ChainStore* store = nullptr;
};

/// Allocator and reference-count bookkeeper for ChainNode. Tracks the live
/// node count and its high-water mark so the memory saving of dropping
/// unreachable chains can be reported.
class ChainStore {
 public:
  ChainStore() = default;
  ChainStore(const ChainStore&) = delete;
  ChainStore& operator=(const ChainStore&) = delete;
  ~ChainStore();

  /// Creates a node carrying one reference owned by the caller. pred may be
  /// null; when set, the new node acquires its own reference to it.
  ChainNode* make_node(MatchPair pair, int64_t dp, ChainNode* pred);

  void acquire(ChainNode* node);
  /// Drops one reference; frees the node at zero and walks the pred line
  /// iteratively so long chains cannot overflow the stack.
  void release(ChainNode* node);

  int64_t live() const { return live_; }
  int64_t peak() const { return peak_; }
  int64_t created() const { return created_; }

  static constexpr int64_t node_bytes = static_cast<int64_t>(sizeof(ChainNode));

 private:
  int64_t live_ = 0;
  int64_t peak_ = 0;
  int64_t created_ = 0;
};

/// RAII reference to a ChainNode. Copying acquires, destruction releases.
class NodeRef {
 public:
  NodeRef() = default;
  /// Wraps a node without touching its count, taking over a reference the
  /// caller already holds (e.g. the creation reference from make_node).
  static NodeRef adopt(ChainNode* node) {
    NodeRef r;
    r.node_ = node;
    return r;
  }
  /// Wraps a node and acquires a new reference to it.
  static NodeRef share(ChainNode* node) {
    NodeRef r;
    r.node_ = node;
    if (node) node->store->acquire(node);
    return r;
  }

  NodeRef(const NodeRef& other) : node_(other.node_) {
    if (node_) node_->store->acquire(node_);
  }
  NodeRef(NodeRef&& other) noexcept : node_(other.node_) { other.node_ = nullptr; }
  NodeRef& operator=(const NodeRef& other) {
    if (this != &other) {
      NodeRef tmp(other);
      std::swap(node_, tmp.node_);
    }
    return *this;
  }
  NodeRef& operator=(NodeRef&& other) noexcept {
    if (this != &other) {
      reset();
      node_ = other.node_;
      other.node_ = nullptr;
    }
    return *this;
  }
  ~NodeRef() { reset(); }

  void reset() {
    if (node_) {
      node_->store->release(node_);
      node_ = nullptr;
    }
  }

  ChainNode* get() const { return node_; }
  ChainNode* operator->() const { return node_; }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  ChainNode* node_ = nullptr;
};

/// Walks the pred line from the final node and returns the chain in
/// ascending row order.
std::vector<MatchPair> extract_chain(const ChainNode* last);

}  // namespace lcsk

#endif  // LCSK_CHAIN_STORE_HPP
