// Link patterns: non-crossing matchings of L sites where unmatched closings
// attach to the left boundary and unmatched openings to the right. Encoded as
// bracket words; basis order is lexicographic with '(' < ')', so the word read
// as a binary number (')' = 1, site 1 most significant) is the basis index.

#pragma once

#include <string>
#include <vector>

#include "tbloop/errors.hpp"

namespace tbloop::tl {

constexpr int kLeftBoundary = 0;  // partner code for the left boundary
// right boundary partner code is L + 1

class LinkPattern {
 public:
  int L = 0;
  unsigned word = 0;  // bit (L - i) set  <=>  site i holds ')'

  LinkPattern() = default;
  LinkPattern(int length, unsigned w) : L(length), word(w) {}
  explicit LinkPattern(const std::string& s) : L(static_cast<int>(s.size())) {
    for (char c : s) {
      word <<= 1;
      if (c == ')')
        word |= 1;
      else if (c != '(')
        throw std::invalid_argument("LinkPattern: expect only '(' and ')'");
    }
  }

  bool is_close(int site) const {  // site in 1..L
    return (word >> (L - site)) & 1u;
  }
  unsigned index() const { return word; }

  std::string str() const {
    std::string s;
    for (int i = 1; i <= L; ++i) s += is_close(i) ? ')' : '(';
    return s;
  }

  // partner[i] for i in 1..L: matched site, or 0 (left boundary), or L+1
  // (right boundary). Index 0 of the returned vector is unused.
  std::vector<int> matching() const {
    std::vector<int> partner(static_cast<size_t>(L) + 1, -1);
    std::vector<int> stack;
    for (int i = 1; i <= L; ++i) {
      if (!is_close(i)) {
        stack.push_back(i);
      } else if (!stack.empty()) {
        partner[static_cast<size_t>(i)] = stack.back();
        partner[static_cast<size_t>(stack.back())] = i;
        stack.pop_back();
      } else {
        partner[static_cast<size_t>(i)] = kLeftBoundary;
      }
    }
    for (int i : stack) partner[static_cast<size_t>(i)] = L + 1;
    return partner;
  }

  int left_attached_count() const {
    auto p = matching();
    int n = 0;
    for (int i = 1; i <= L; ++i)
      if (p[static_cast<size_t>(i)] == kLeftBoundary) ++n;
    return n;
  }

  // A single boundary-to-boundary line is implied exactly when the number of
  // left-attached sites is odd; it is omitted from the word.
  int throughlines() const { return left_attached_count() % 2; }

  // Horizontal reflection (used by the dual state): reverse and swap brackets,
  // '(' at site i -> ')' at site L+1-i.
  LinkPattern reflected() const {
    LinkPattern r(L, 0);
    for (int j = 1; j <= L; ++j) {
      r.word <<= 1;
      if (!is_close(L + 1 - j)) r.word |= 1;
    }
    return r;
  }

  friend bool operator==(const LinkPattern& a, const LinkPattern& b) {
    return a.L == b.L && a.word == b.word;
  }
  friend bool operator<(const LinkPattern& a, const LinkPattern& b) { return a.word < b.word; }
};

inline std::vector<LinkPattern> enumerate_link_patterns(int L) {
  if (L < 1 || L > 26) throw IndexOutOfRange("enumerate_link_patterns: L must be in 1..26");
  std::vector<LinkPattern> basis;
  basis.reserve(1u << L);
  for (unsigned w = 0; w < (1u << L); ++w) basis.emplace_back(L, w);
  return basis;
}

// phi_i insertion maps: LP_{L-2} -> LP_L inserting a small link at (i, i+1),
// and the boundary insertions LP_{L-1} -> LP_L.
inline LinkPattern insert_small_link(const LinkPattern& a, int i) {
  int L = a.L + 2;
  if (i < 1 || i > a.L + 1) throw IndexOutOfRange("insert_small_link: position");
  unsigned hi = a.word >> (a.L - (i - 1));          // sites 1..i-1
  unsigned lo = a.word & ((1u << (a.L - (i - 1))) - 1u);  // sites i..L-2
  unsigned w = (((hi << 2) | 0b01u) << (a.L - (i - 1))) | lo;
  return LinkPattern(L, w);
}
inline LinkPattern insert_left_close(const LinkPattern& a) {
  return LinkPattern(a.L + 1, (1u << a.L) | a.word);
}
inline LinkPattern insert_right_open(const LinkPattern& a) {
  return LinkPattern(a.L + 1, a.word << 1);
}

}  // namespace tbloop::tl
