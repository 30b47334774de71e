#pragma once

// Brute-force window counter used to check the closed forms for qtilde and
// q.  Deliberately naive: realize the partition as consecutive intervals on
// the integer line, slide every candidate window, test containment.  Keep
// it dumb; its value is independence from the formulas.

#include <utility>
#include <vector>

#include "normbundle/splitting.hpp"

namespace normbundle {

// Parts realized as consecutive closed intervals tiling [base, base+lambda-1]:
// a_1 = base, b_i = a_i + gamma_i - 1, a_{i+1} = b_i + 1.
struct IntervalPartition {
  std::vector<std::pair<int, int>> parts;

  static IntervalPartition realize(const Partition& p, int base = 1) {
    IntervalPartition out;
    int a = base;
    for (int gamma : p.parts) {
      out.parts.push_back({a, a + gamma - 1});
      a += gamma;
    }
    return out;
  }

  int lo() const { return parts.front().first; }
  int hi() const { return parts.back().second; }
};

namespace detail {

// Window of length k starting after j covers [j+1, j+k].
inline bool window_covers_some_part(int j, int k, const IntervalPartition& ip) {
  for (const auto& [a, b] : ip.parts) {
    if (j + 1 <= a && b <= j + k) return true;
  }
  return false;
}

}  // namespace detail

// Windows of length k, anywhere, containing at least one part.  A covering
// window satisfies j >= lo - k (it must reach the first part's territory)
// and j <= hi - 1, so scanning that range is exhaustive.
inline int count_qtilde(int k, const IntervalPartition& ip) {
  if (k < 1) throw std::invalid_argument("count_qtilde needs k >= 1");
  int count = 0;
  for (int j = ip.lo() - k; j <= ip.hi() - 1; ++j) {
    if (detail::window_covers_some_part(j, k, ip)) ++count;
  }
  return count;
}

inline int count_qtilde(int k, const Partition& p) {
  return count_qtilde(k, IntervalPartition::realize(p));
}

// Same, restricted to windows inside the span [lo, hi].  Zero as soon as
// k exceeds the span length.
inline int count_q(int k, const IntervalPartition& ip) {
  if (k < 1) throw std::invalid_argument("count_q needs k >= 1");
  int count = 0;
  for (int j = ip.lo() - 1; j + k <= ip.hi(); ++j) {
    if (detail::window_covers_some_part(j, k, ip)) ++count;
  }
  return count;
}

inline int count_q(int k, const Partition& p) {
  return count_q(k, IntervalPartition::realize(p));
}

}  // namespace normbundle
