#include "lcsk/suffix_array.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lcsk {

std::vector<int64_t> build_suffix_array(std::span<const int32_t> text) {
  const int64_t len = std::ssize(text);
  if (len == 0) return {};

  // Shift every symbol up by one and append a zero terminator, making
  // cyclic-shift order coincide with suffix order.
  const int64_t n = len + 1;
  std::vector<int64_t> s(n);
  for (int64_t i = 0; i < len; ++i) {
    assert(text[i] >= 0);
    s[i] = text[i] + 1;
  }
  s[len] = 0;

  std::vector<int64_t> p(n), c(n), pn(n), cn(n), cnt;

  int64_t classes = 0;
  {
    int64_t sigma = *std::max_element(s.begin(), s.end()) + 1;
    cnt.assign(sigma, 0);
    for (int64_t v : s) ++cnt[v];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    for (int64_t i = 0; i < n; ++i) p[--cnt[s[i]]] = i;
    c[p[0]] = 0;
    classes = 1;
    for (int64_t i = 1; i < n; ++i) {
      if (s[p[i]] != s[p[i - 1]]) ++classes;
      c[p[i]] = classes - 1;
    }
  }

  for (int64_t h = 1; h < n && classes < n; h *= 2) {
    // Sort by (c[i], c[i+h]): shift the previous order left by h, then run
    // a stable counting sort on the first component.
    for (int64_t i = 0; i < n; ++i) {
      pn[i] = p[i] - h;
      if (pn[i] < 0) pn[i] += n;
    }
    cnt.assign(classes, 0);
    for (int64_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    for (int64_t i = n - 1; i >= 0; --i) p[--cnt[c[pn[i]]]] = pn[i];

    cn[p[0]] = 0;
    classes = 1;
    for (int64_t i = 1; i < n; ++i) {
      bool same = c[p[i]] == c[p[i - 1]] && c[(p[i] + h) % n] == c[(p[i - 1] + h) % n];
      if (!same) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }

  // p[0] is the appended terminator's suffix; the rest is the answer.
  return {p.begin() + 1, p.end()};
}

std::vector<int64_t> build_lcp(std::span<const int32_t> text, std::span<const int64_t> sa) {
  const int64_t n = std::ssize(text);
  assert(std::ssize(sa) == n);
  std::vector<int64_t> lcp(n, 0);
  if (n == 0) return lcp;

  std::vector<int64_t> rank(n);
  for (int64_t t = 0; t < n; ++t) rank[sa[t]] = t;

  // Kasai's trick: moving from suffix i to i+1 loses at most one matched
  // character, so h decreases by at most one per step.
  int64_t h = 0;
  for (int64_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    int64_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

namespace {

std::vector<int32_t> to_symbols(const Sequence& text) {
  std::vector<int32_t> s(text.size());
  for (size_t i = 0; i < text.size(); ++i) s[i] = static_cast<unsigned char>(text[i]);
  return s;
}

}  // namespace

std::vector<int64_t> build_suffix_array(const Sequence& text) {
  return build_suffix_array(std::span<const int32_t>(to_symbols(text)));
}

std::vector<int64_t> build_lcp(const Sequence& text, std::span<const int64_t> sa) {
  auto s = to_symbols(text);
  return build_lcp(std::span<const int32_t>(s), sa);
}

}  // namespace lcsk
