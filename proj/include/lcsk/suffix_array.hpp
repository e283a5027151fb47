#ifndef LCSK_SUFFIX_ARRAY_HPP
#define LCSK_SUFFIX_ARRAY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lcsk/types.hpp"

namespace lcsk {

/// Suffix array by prefix doubling with counting sorts, O(n log n).
/// Symbols must be non-negative; an implicit terminator smaller than every
/// symbol is appended internally, so no input value is reserved.
std::vector<int64_t> build_suffix_array(std::span<const int32_t> text);
std::vector<int64_t> build_suffix_array(const Sequence& text);

/// LCP of lexicographically adjacent suffixes: lcp[t] is the longest common
/// prefix of text[sa[t-1]..] and text[sa[t]..], lcp[0] = 0.
std::vector<int64_t> build_lcp(std::span<const int32_t> text, std::span<const int64_t> sa);
std::vector<int64_t> build_lcp(const Sequence& text, std::span<const int64_t> sa);

}  // namespace lcsk

#endif  // LCSK_SUFFIX_ARRAY_HPP
