#include "lcsk/chain_store.hpp"

#include <algorithm>
#include <cassert>

namespace lcsk {

ChainStore::~ChainStore() {
  // Owners (threshold slots, sweep records, extracted refs) must have been
  // destroyed first; by then every node has cascaded away.
  assert(live_ == 0);
}

ChainNode* ChainStore::make_node(MatchPair pair, int64_t dp, ChainNode* pred) {
  auto* node = new ChainNode{pair, dp, pred, 1, this};
  if (pred) acquire(pred);
  ++live_;
  ++created_;
  if (live_ > peak_) peak_ = live_;
  return node;
}

void ChainStore::acquire(ChainNode* node) {
  assert(node && node->refs > 0);
  ++node->refs;
}

void ChainStore::release(ChainNode* node) {
  assert(node && node->refs > 0);
  // Iterative cascade: freeing a node drops its pred reference, which may
  // free the pred in turn, all the way down a dead chain.
  while (node && --node->refs == 0) {
    ChainNode* pred = node->pred;
    delete node;
    --live_;
    node = pred;
  }
}

std::vector<MatchPair> extract_chain(const ChainNode* last) {
  std::vector<MatchPair> chain;
  for (const ChainNode* n = last; n; n = n->pred) chain.push_back(n->pair);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace lcsk
