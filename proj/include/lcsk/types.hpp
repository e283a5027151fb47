#ifndef LCSK_TYPES_HPP
#define LCSK_TYPES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsk {

/// Sentinel for "no column": compares above every real index.
inline constexpr int64_t kInfinity = std::numeric_limits<int64_t>::max();

/// Sequences are byte strings; indices are 64-bit throughout so inputs
/// longer than 2^31 symbols are handled without truncation.
using Sequence = std::string;

inline int64_t seq_length(const Sequence& s) { return static_cast<int64_t>(s.size()); }

enum class Mode { Lcsk, LcskPlus };

enum class RowStrategy { Auto, ForceSparse, ForceDense };

enum class UpdateRule { KStep, Tree };

enum class GeneratorChoice { Auto, Hashing, SuffixArray };

enum class GeneratorKind { Hashing, SuffixArray };

enum class AlphabetChoice { Auto, Dna, Byte };

/// A k-length substring match between A and B, identified by its start
/// coordinates. The end point is (i+k-1, j+k-1); k lives in the solver
/// configuration rather than in every pair.
struct MatchPair {
  int64_t i = 0;  // row: start index into A
  int64_t j = 0;  // column: start index into B

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

/// G precedes P when G's end lies strictly above-left of P's start, so the
/// two blocks can be chained without overlap.
inline bool precedes(const MatchPair& g, const MatchPair& p, int64_t k) {
  return g.i + k <= p.i && g.j + k <= p.j;
}

/// P continues G when P's start is one down-right step from G's start.
inline bool continues(const MatchPair& p, const MatchPair& g) {
  return p.i == g.i + 1 && p.j == g.j + 1;
}

/// The match-pair events falling in one row of the sweep: pairs whose start
/// point lies here and pairs whose end point lies here (i.e. pairs that
/// started k-1 rows earlier). Both lists ascend by column.
struct RowEvents {
  int64_t row = 0;
  std::vector<MatchPair> starts;
  std::vector<MatchPair> ends;
};

/// One reported run of a chain: a[i..i+len) matched to b[j..j+len).
/// Lcsk chains report one segment per block; LcskPlus chains merge each
/// maximal run of continuations into a single segment.
struct ChainSegment {
  int64_t i = 0;
  int64_t j = 0;
  int64_t len = 0;

  friend bool operator==(const ChainSegment&, const ChainSegment&) = default;
};

struct MemoryStats {
  int64_t match_pairs_total = 0;    // r
  int64_t max_nodes_in_memory = 0;  // peak simultaneous chain nodes
  double compression_factor = 1.0;  // r / peak; 1 when reconstruction is off
};

struct SolveResult {
  /// Optimum value: blocks for Lcsk, characters for LcskPlus.
  int64_t length = 0;
  /// Present iff reconstruction was requested; the pairs of one optimal
  /// chain in ascending row order.
  std::optional<std::vector<MatchPair>> chain;
  MemoryStats stats;
  int64_t sparse_rows = 0;
  int64_t dense_rows = 0;
  GeneratorKind generator_used = GeneratorKind::Hashing;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |Sigma|^k does not fit a 64-bit fingerprint; the hashing generator
/// cannot be used for this input.
struct AlphabetTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lcsk

#endif  // LCSK_TYPES_HPP
