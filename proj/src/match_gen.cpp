#include "lcsk/match_gen.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "lcsk/suffix_array.hpp"

namespace lcsk {

Alphabet Alphabet::discover(const Sequence& a, const Sequence& b) {
  Alphabet alpha;
  std::array<bool, 256> seen{};
  for (unsigned char c : a) seen[c] = true;
  for (unsigned char c : b) seen[c] = true;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) alpha.rank_[c] = static_cast<int16_t>(alpha.size_++);
  }
  return alpha;
}

Alphabet Alphabet::dna() {
  Alphabet alpha;
  const char* symbols = "ACGT";
  for (int r = 0; r < 4; ++r) alpha.rank_[static_cast<unsigned char>(symbols[r])] = static_cast<int16_t>(r);
  alpha.size_ = 4;
  return alpha;
}

Alphabet Alphabet::bytes() {
  Alphabet alpha;
  for (int c = 0; c < 256; ++c) alpha.rank_[c] = static_cast<int16_t>(c);
  alpha.size_ = 256;
  return alpha;
}

bool Alphabet::contains_all(const Sequence& s) const {
  return std::all_of(s.begin(), s.end(),
                     [this](char c) { return rank(static_cast<unsigned char>(c)) >= 0; });
}

bool kmer_fingerprint_feasible(int64_t sigma, int64_t k) {
  assert(sigma >= 0 && k >= 1);
  if (sigma <= 1) return true;
  if (k > 64) return false;
  const auto cap = static_cast<unsigned __int128>(1) << 64;
  unsigned __int128 v = 1;
  for (int64_t t = 0; t < k; ++t) {
    v *= static_cast<unsigned>(sigma);
    if (v > cap) return false;
  }
  return true;
}

namespace {

/// Base-sigma fingerprint roller over one sequence's k-mers.
class KmerRoller {
 public:
  KmerRoller(const Sequence& s, int64_t k, const Alphabet& alphabet)
      : s_(s), k_(k), alphabet_(alphabet) {
    uint64_t high = 1;
    for (int64_t t = 0; t + 1 < k_; ++t) high *= base();
    high_ = high;
  }

  int64_t last_start() const { return seq_length(s_) - k_; }

  /// Fingerprint of s[start..start+k); starts must be requested in
  /// non-decreasing order.
  uint64_t at(int64_t start) {
    assert(start >= cursor_ && start <= last_start());
    if (cursor_ == -1 || start > cursor_ + 1) {
      fp_ = 0;
      for (int64_t t = start; t < start + k_; ++t) fp_ = fp_ * base() + rank(t);
    } else if (start == cursor_ + 1) {
      fp_ = (fp_ - rank(start - 1) * high_) * base() + rank(start + k_ - 1);
    }
    cursor_ = start;
    return fp_;
  }

 private:
  uint64_t base() const { return static_cast<uint64_t>(alphabet_.size()); }
  uint64_t rank(int64_t pos) const {
    int r = alphabet_.rank(static_cast<unsigned char>(s_[pos]));
    assert(r >= 0);
    return static_cast<uint64_t>(r);
  }

  const Sequence& s_;
  int64_t k_;
  const Alphabet& alphabet_;
  uint64_t high_ = 1;   // base^(k-1)
  uint64_t fp_ = 0;
  int64_t cursor_ = -1;
};

class HashingStream final : public MatchPairStream {
 public:
  HashingStream(const Sequence& a, const Sequence& b, int64_t k, const Alphabet& alphabet)
      : roller_(a, k, alphabet) {
    if (!kmer_fingerprint_feasible(alphabet.size(), k)) {
      throw AlphabetTooLargeError("k-mer fingerprints need sigma^k <= 2^64; got sigma=" +
                                  std::to_string(alphabet.size()) + " k=" + std::to_string(k));
    }
    KmerRoller rb(b, k, alphabet);
    for (int64_t j = 0; j <= rb.last_start(); ++j) table_[rb.at(j)].push_back(j);
  }

  std::span<const int64_t> columns_for_row(int64_t row) override {
    if (row > roller_.last_start()) return {};
    auto it = table_.find(roller_.at(row));
    if (it == table_.end()) return {};
    return it->second;
  }

  GeneratorKind kind() const override { return GeneratorKind::Hashing; }

 private:
  KmerRoller roller_;
  std::unordered_map<uint64_t, std::vector<int64_t>> table_;
};

class SuffixArrayStream final : public MatchPairStream {
 public:
  SuffixArrayStream(const Sequence& a, const Sequence& b, int64_t k) {
    const int64_t m = seq_length(a);
    const int64_t n = seq_length(b);
    row_group_.assign(std::max<int64_t>(m, 1), -1);
    if (k > m || k > n) return;

    // B, separator, A in one text. Bytes shift up by one so the separator
    // value stays unique.
    std::vector<int32_t> text(n + 1 + m);
    for (int64_t j = 0; j < n; ++j) text[j] = static_cast<unsigned char>(b[j]) + 1;
    text[n] = 0;
    for (int64_t i = 0; i < m; ++i) text[n + 1 + i] = static_cast<unsigned char>(a[i]) + 1;

    auto sa = build_suffix_array(std::span<const int32_t>(text));
    auto lcp = build_lcp(std::span<const int32_t>(text), sa);

    // Maximal runs of adjacent suffixes with lcp >= k share their first k
    // symbols; within a run, collect A starts as rows and B starts as
    // columns.
    const int64_t total = std::ssize(sa);
    int64_t t = 0;
    while (t < total) {
      int64_t end = t + 1;
      while (end < total && lcp[end] >= k) ++end;

      std::vector<int64_t> rows, cols;
      for (int64_t u = t; u < end; ++u) {
        int64_t p = sa[u];
        if (p < n) {
          if (p + k <= n) cols.push_back(p);
        } else if (p > n) {
          int64_t i = p - n - 1;
          if (i + k <= m) rows.push_back(i);
        }
      }
      if (!rows.empty() && !cols.empty()) {
        std::sort(cols.begin(), cols.end());
        int64_t gid = std::ssize(group_cols_);
        group_cols_.push_back(std::move(cols));
        for (int64_t i : rows) row_group_[i] = gid;
      }
      t = end;
    }
  }

  std::span<const int64_t> columns_for_row(int64_t row) override {
    if (row >= std::ssize(row_group_) || row_group_[row] < 0) return {};
    return group_cols_[row_group_[row]];
  }

  GeneratorKind kind() const override { return GeneratorKind::SuffixArray; }

 private:
  std::vector<int64_t> row_group_;
  std::vector<std::vector<int64_t>> group_cols_;
};

}  // namespace

std::unique_ptr<MatchPairStream> make_hashing_stream(const Sequence& a, const Sequence& b,
                                                     int64_t k, const Alphabet& alphabet) {
  return std::make_unique<HashingStream>(a, b, k, alphabet);
}

std::unique_ptr<MatchPairStream> make_suffix_array_stream(const Sequence& a, const Sequence& b,
                                                          int64_t k) {
  return std::make_unique<SuffixArrayStream>(a, b, k);
}

std::unique_ptr<MatchPairStream> make_stream(const Sequence& a, const Sequence& b, int64_t k,
                                             const Alphabet& alphabet, GeneratorChoice choice) {
  switch (choice) {
    case GeneratorChoice::Hashing:
      return make_hashing_stream(a, b, k, alphabet);
    case GeneratorChoice::SuffixArray:
      return make_suffix_array_stream(a, b, k);
    case GeneratorChoice::Auto:
      break;
  }
  if (kmer_fingerprint_feasible(alphabet.size(), k)) return make_hashing_stream(a, b, k, alphabet);
  return make_suffix_array_stream(a, b, k);
}

std::vector<MatchPair> collect_match_pairs(MatchPairStream& stream, int64_t m, int64_t k) {
  std::vector<MatchPair> pairs;
  for (int64_t i = 0; i + k <= m; ++i) {
    for (int64_t j : stream.columns_for_row(i)) pairs.push_back({i, j});
  }
  return pairs;
}

RowEventBuffer::RowEventBuffer(MatchPairStream& stream, int64_t m, int64_t k)
    : stream_(stream), m_(m), k_(k) {
  assert(k >= 1);
}

const RowEvents& RowEventBuffer::events_for_row(int64_t row) {
  assert(row == next_row_ && row < m_);
  ++next_row_;

  auto cols = stream_.columns_for_row(row);
  window_.emplace_back(cols.begin(), cols.end());
  if (std::ssize(window_) > k_) window_.pop_front();

  events_.row = row;
  events_.starts.clear();
  events_.ends.clear();
  for (int64_t j : window_.back()) events_.starts.push_back({row, j});
  if (std::ssize(window_) == k_ && row >= k_ - 1) {
    for (int64_t j : window_.front()) events_.ends.push_back({row - k_ + 1, j});
  }
  return events_;
}

}  // namespace lcsk
