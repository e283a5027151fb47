#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lcsk/chain_store.hpp"
#include "lcsk/compressed_row.hpp"

using lcsk::ChainStore;
using lcsk::CompressedRow;
using lcsk::kInfinity;
using lcsk::NodeRef;

namespace {

// Reference model: a plain array with the same contract, linear everywhere.
class NaiveRow {
 public:
  NaiveRow() : values_{0} {}

  int64_t query(int64_t j) const {
    int64_t d = 0;
    for (size_t s = 1; s < values_.size(); ++s) {
      if (values_[s] < j) d = static_cast<int64_t>(s);
    }
    return d;
  }

  void update_min(int64_t d, int64_t j) {
    while (static_cast<int64_t>(values_.size()) <= d) values_.push_back(kInfinity);
    auto ud = static_cast<size_t>(d);
    values_[ud] = std::min(values_[ud], j);
  }

  void prefix_update_min(int64_t d, int64_t j, int64_t span) {
    for (int64_t s = d; s > d - span; --s) update_min(s, j);
  }

  const std::vector<int64_t>& values() const { return values_; }

 private:
  std::vector<int64_t> values_;
};

}  // namespace

TEST_CASE("fresh row answers zero everywhere") {
  CompressedRow row;
  CHECK(row.thresholds() == std::vector<int64_t>{0});
  CHECK(row.best() == 0);
  CHECK(row.query(1) == 0);
  CHECK(row.query(5) == 0);
  CHECK(row.get(0) == 0);
  CHECK(row.get(1) == kInfinity);
  CHECK(row.get(100) == kInfinity);
}

TEST_CASE("query finds the largest index strictly below the column") {
  auto row = CompressedRow::from_thresholds({0, 5, 5, 5, 5, 33, 43, 43, 43, 43, 44, 49, 49, 49, 49});
  CHECK(row.query(28) == 4);
  CHECK(row.query(5) == 0);
  CHECK(row.query(6) == 4);
  CHECK(row.query(34) == 5);
  CHECK(row.query(50) == 14);
  CHECK(row.best() == 14);
}

TEST_CASE("query treats an equal threshold as not usable") {
  auto row = CompressedRow::from_thresholds({0, 3, 7});
  CHECK(row.query(7) == 1);
  CHECK(row.query(8) == 2);
  CHECK(row.query(4) == 1);
  CHECK(row.query(3) == 0);
  CHECK(row.query(1) == 0);
}

TEST_CASE("update_min appends one slot past the end") {
  CompressedRow row;
  row.update_min(1, 4);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 4});
}

TEST_CASE("update_min keeps the smaller value") {
  auto row = CompressedRow::from_thresholds({0, 4});
  row.update_min(1, 7);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 4});
  row.update_min(1, 2);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 2});
}

TEST_CASE("update_min improves an interior slot") {
  auto row = CompressedRow::from_thresholds({0, 5, 9});
  row.update_min(2, 6);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 5, 6});
}

TEST_CASE("prefix update rewrites a span and keeps the array sorted") {
  auto row = CompressedRow::from_thresholds({0, 5, 5, 5, 5, 33, 43, 43, 43, 43, 44, 49, 49, 49, 49});
  row.prefix_update_min(8, 31, 4);
  CHECK(row.thresholds() ==
        std::vector<int64_t>{0, 5, 5, 5, 5, 31, 31, 31, 31, 43, 44, 49, 49, 49, 49});
}

TEST_CASE("prefix update stops at the first slot already small enough") {
  auto row = CompressedRow::from_thresholds({0, 2, 9});
  row.prefix_update_min(2, 2, 2);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 2, 2});
}

TEST_CASE("prefix update with span one behaves like update_min") {
  CompressedRow row;
  row.prefix_update_min(1, 3, 1);
  CHECK(row.thresholds() == std::vector<int64_t>{0, 3});
}

TEST_CASE("random sweep-shaped operations agree with the reference model") {
  // Updates are derived from queries the way the sweep derives them: a
  // value-(d+1) chain ending at some column past the column that answered
  // d. Arbitrary (d, j) writes are outside the structure's contract and
  // could break its sortedness.
  std::mt19937_64 rng(20260816);
  for (int round = 0; round < 50; ++round) {
    CompressedRow row;
    NaiveRow model;
    for (int op = 0; op < 400; ++op) {
      int64_t column = static_cast<int64_t>(rng() % 95) + 1;
      switch (rng() % 3) {
        case 0: {
          CHECK(row.query(column) == model.query(column));
          break;
        }
        case 1: {
          int64_t d = model.query(column) + 1;
          int64_t value = column + static_cast<int64_t>(rng() % 5);
          row.update_min(d, value);
          model.update_min(d, value);
          break;
        }
        default: {
          int64_t gain = static_cast<int64_t>(rng() % 5) + 1;
          int64_t d = model.query(column) + gain;
          int64_t value = column + static_cast<int64_t>(rng() % 5);
          row.prefix_update_min(d, value, gain);
          model.prefix_update_min(d, value, gain);
          break;
        }
      }
      REQUIRE(row.thresholds() == model.values());
      REQUIRE(std::is_sorted(row.thresholds().begin(), row.thresholds().end()));
    }
  }
}

TEST_CASE("owners follow strict improvements only") {
  ChainStore store;
  {
    CompressedRow row(true);
    NodeRef n1 = NodeRef::adopt(store.make_node({0, 0}, 1, nullptr));
    NodeRef n2 = NodeRef::adopt(store.make_node({1, 1}, 1, nullptr));
    NodeRef n3 = NodeRef::adopt(store.make_node({2, 2}, 1, nullptr));

    row.update_min(1, 9, n1.get());
    CHECK(row.owner(1) == n1.get());
    row.update_min(1, 9, n2.get());
    CHECK(row.owner(1) == n1.get());
    row.update_min(1, 4, n2.get());
    CHECK(row.owner(1) == n2.get());

    row.prefix_update_min(3, 6, 2, n3.get());
    CHECK(row.owner(3) == n3.get());
    CHECK(row.owner(2) == n3.get());
    CHECK(row.owner(1) == n2.get());
    CHECK(row.owner(0) == nullptr);
    CHECK(row.thresholds() == std::vector<int64_t>{0, 4, 6, 6});

    CHECK(store.live() == 3);
  }
  CHECK(store.live() == 0);
}

TEST_CASE("owner slots hold references that keep nodes alive") {
  ChainStore store;
  {
    CompressedRow row(true);
    {
      NodeRef n = NodeRef::adopt(store.make_node({0, 0}, 1, nullptr));
      row.update_min(1, 5, n.get());
    }
    CHECK(store.live() == 1);
    CHECK(row.owner(1)->pair == lcsk::MatchPair{0, 0});
  }
  CHECK(store.live() == 0);
}
