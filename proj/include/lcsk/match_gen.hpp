#ifndef LCSK_MATCH_GEN_HPP
#define LCSK_MATCH_GEN_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <vector>

#include "lcsk/types.hpp"

namespace lcsk {

/// A symbol set with a dense rank for fingerprinting. Validation and the
/// fingerprint base both come from here.
class Alphabet {
 public:
  /// Exactly the distinct symbols occurring in a and b.
  static Alphabet discover(const Sequence& a, const Sequence& b);
  /// A, C, G, T (uppercase).
  static Alphabet dna();
  /// All 256 byte values.
  static Alphabet bytes();

  int64_t size() const { return size_; }
  int rank(unsigned char c) const { return rank_[c]; }
  bool contains_all(const Sequence& s) const;

 private:
  Alphabet() { rank_.fill(-1); }

  std::array<int16_t, 256> rank_;
  int64_t size_ = 0;
};

/// True when every k-mer over this alphabet has a distinct value in 64 bits,
/// i.e. sigma^k <= 2^64.
bool kmer_fingerprint_feasible(int64_t sigma, int64_t k);

/// Produces, row by row, the columns j with A[row..row+k) = B[j..j+k).
/// Rows must be requested in non-decreasing order; each returned span stays
/// valid until the next call. Columns ascend.
class MatchPairStream {
 public:
  virtual ~MatchPairStream() = default;
  virtual std::span<const int64_t> columns_for_row(int64_t row) = 0;
  virtual GeneratorKind kind() const = 0;
};

/// Exact k-mer fingerprints: every k-mer of B goes into a hash table under
/// its base-sigma value, and A's k-mers are rolled across in O(1) each.
/// Throws AlphabetTooLargeError when sigma^k exceeds 64 bits.
std::unique_ptr<MatchPairStream> make_hashing_stream(const Sequence& a, const Sequence& b,
                                                     int64_t k, const Alphabet& alphabet);

/// Suffix array over B, separator, A: maximal runs of adjacent suffixes
/// with pairwise lcp >= k group together exactly the positions sharing a
/// k-mer, independent of alphabet size.
std::unique_ptr<MatchPairStream> make_suffix_array_stream(const Sequence& a, const Sequence& b,
                                                          int64_t k);

/// Honors a forced choice; on Auto picks hashing whenever the fingerprint
/// fits and falls back to the suffix array otherwise.
std::unique_ptr<MatchPairStream> make_stream(const Sequence& a, const Sequence& b, int64_t k,
                                             const Alphabet& alphabet, GeneratorChoice choice);

/// Drains a stream into explicit pairs in row-major order (tests, bindings).
std::vector<MatchPair> collect_match_pairs(MatchPairStream& stream, int64_t m, int64_t k);

/// Turns per-row start columns into per-row start and end events: the pairs
/// ending in row i are those that started in row i-k+1, so a window of the
/// last k rows' columns is kept.
class RowEventBuffer {
 public:
  RowEventBuffer(MatchPairStream& stream, int64_t m, int64_t k);

  /// Rows must be visited in increasing order, each exactly once. The
  /// returned events stay valid until the next call.
  const RowEvents& events_for_row(int64_t row);

 private:
  MatchPairStream& stream_;
  int64_t m_;
  int64_t k_;
  int64_t next_row_ = 0;
  std::deque<std::vector<int64_t>> window_;  // start columns of rows row-k+1 .. row
  RowEvents events_;
};

}  // namespace lcsk

#endif  // LCSK_MATCH_GEN_HPP
