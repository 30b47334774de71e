#pragma once

// Closed-form computation of the splitting type of the normal bundle.
//
// Writing N_f = O(c_1 + d + 2) + ... + O(c_{s-1} + d + 2), the multiset of
// twists c_i is recovered from the function
//
//   phi(k) = h^0(N_f(-d - 2 - k)) = sum_i [[c_i - k + 1]]
//
// whose second difference counts each value: #{ i : c_i = k } = phi(k+2)
// - 2 phi(k+1) + phi(k).  phi itself is a sum of per-component kernel
// dimensions, and the only nontrivial ingredient is q(k), the number of
// covering windows of the component's gamma-partition.  A direct route
// reads the c_i off the block lengths; both routes are computed and
// cross-checked on every call.

#include <algorithm>
#include <string>
#include <vector>

#include "normbundle/bracket.hpp"
#include "normbundle/curve.hpp"
#include "normbundle/errors.hpp"

namespace normbundle {

// Ordered tuple of positive parts (gamma_1, ..., gamma_r).  Component
// partitions always have parts >= 2; standalone combinatorial use (window
// counting) allows parts of size 1.
struct Partition {
  std::vector<int> parts;

  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("partition needs at least one part");
    for (int g : parts) {
      if (g < 1) throw std::invalid_argument("partition parts must be positive");
    }
  }

  int r() const { return static_cast<int>(parts.size()); }
  int lambda() const {
    int sum = 0;
    for (int g : parts) sum += g;
    return sum;
  }
};

// Number of length-k windows, anywhere on the integer line, that contain at
// least one part of the partition laid out with unit gaps.  Closed form:
// windows catching part i number [[k - gamma_i + 1]], and consecutive parts
// share [[k - gamma_i - gamma_{i+1} + 1]] of them (a window containing two
// parts contains everything between, so inclusion-exclusion telescopes).
inline int qtilde(int k, const Partition& p) {
  if (k < 1) throw std::invalid_argument("qtilde needs k >= 1");
  const std::vector<int>& g = p.parts;
  const int r = p.r();
  int total = 0;
  for (int i = 0; i < r; ++i) total += bracket(k - g[i] + 1);
  for (int i = 0; i + 1 < r; ++i) total -= bracket(k - g[i] - g[i + 1] + 1);
  return total;
}

// Same count restricted to windows inside the partition's own span
// [1, lambda].  For r = 1 only the full window k = gamma_1 fits.  For
// r >= 2 exactly [[k - gamma_1]] windows overhang on the left and
// [[k - gamma_r]] on the right; the subtraction is only valid while a
// window fits at all, hence the explicit k > lambda cutoff.
inline int q(int k, const Partition& p) {
  if (k < 1) throw std::invalid_argument("q needs k >= 1");
  const int lambda = p.lambda();
  if (k > lambda) return 0;
  if (p.r() == 1) return k == p.parts.front() ? 1 : 0;
  return qtilde(k, p) - bracket(k - p.parts.front()) - bracket(k - p.parts.back());
}

// Contribution of one component to phi(k), k >= 2: monomials of the k-th
// inverse derivative, plus derivatives of the apex, minus the overlap
// counted by q.  Self-extinguishing for k > lambda (every term is 0).
inline int phi_component(const Component& comp, int k) {
  if (k < 2) throw std::invalid_argument("phi_component needs k >= 2");
  int value = 0;
  for (const Block& blk : comp.blocks) value += bracket(blk.b() - k + 1);
  value += bracket(comp.lambda - k + 1);
  value -= q(k, Partition(comp.partition));
  return value;
}

// Full table of twist counts: phi(0) = d + e, phi(1) = 2(e + 1), and for
// k >= 2 the sum of component contributions.  Values are extended until the
// table ends in two zeros, which pins every second difference thereafter.
struct PhiTable {
  std::vector<int> values;

  int kmax() const { return static_cast<int>(values.size()) - 1; }

  // phi(k), with the implicit zero tail.
  int at(int k) const {
    if (k < 0) throw std::invalid_argument("phi is only defined for k >= 0");
    return k <= kmax() ? values[static_cast<std::size_t>(k)] : 0;
  }

  // phi(k+2) - 2 phi(k+1) + phi(k): the multiplicity of k as a twist.
  int second_difference(int k) const { return at(k + 2) - 2 * at(k + 1) + at(k); }
};

inline PhiTable phi_table(const CurveSummary& summary) {
  PhiTable table;
  table.values.push_back(summary.d + summary.e);
  table.values.push_back(2 * (summary.e + 1));
  for (int k = 2; k <= summary.d + 2; ++k) {
    int value = 0;
    for (const Component& comp : summary.components) value += phi_component(comp, k);
    table.values.push_back(value);
    const std::size_t n = table.values.size();
    if (n >= 4 && table.values[n - 1] == 0 && table.values[n - 2] == 0) return table;
  }
  // Components have lambda <= d - 2, so phi vanishes from k = d - 1 on and
  // the loop above always returns.
  throw internal_error(errc::cross_check_failure, "phi table failed to terminate");
}

// Multiset of twists c_i, kept sorted in non-increasing order.
struct SplittingType {
  std::vector<int> c;

  SplittingType() = default;
  explicit SplittingType(std::vector<int> values) : c(std::move(values)) {
    std::sort(c.begin(), c.end(), std::greater<int>());
  }

  int sum() const {
    int total = 0;
    for (int x : c) total += x;
    return total;
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend bool operator<(const SplittingType& a, const SplittingType& b) {
    return a.c < b.c;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c[i]);
    }
    return out + ")";
  }
};

// Reads the splitting type off a phi table via second differences.  The
// table must belong to a curve in P^s; s fixes the expected number of
// summands.  Both error conditions flag corrupt tables, not bad curves.
inline SplittingType splitting_from_phi(const PhiTable& table, int s) {
  std::vector<int> c;
  for (int k = table.kmax(); k >= 0; --k) {
    const int mult = table.second_difference(k);
    if (mult < 0) {
      throw internal_error(errc::negative_multiplicity,
                           "phi table is not convex at k = " + std::to_string(k) +
                               " (multiplicity " + std::to_string(mult) + ")");
    }
    for (int copy = 0; copy < mult; ++copy) c.push_back(k);
  }
  if (static_cast<int>(c.size()) != s - 1) {
    throw internal_error(errc::count_mismatch,
                         "phi table yields " + std::to_string(c.size()) +
                             " summands, expected s - 1 = " + std::to_string(s - 1));
  }
  return SplittingType(std::move(c));
}

// Direct route for one component: with the block lengths b_1, ..., b_r
// padded by sentinels b_0 = b_{r+1} = -1, the component contributes the
// r + 1 twists b_i + b_{i+1} + 2, i = 0..r.
inline std::vector<int> direct_c_values(const Component& comp) {
  std::vector<int> b = comp.b_values();
  b.insert(b.begin(), -1);
  b.push_back(-1);
  std::vector<int> c;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) c.push_back(b[i] + b[i + 1] + 2);
  std::sort(c.begin(), c.end(), std::greater<int>());
  return c;
}

// Splitting type of the whole curve: component twists plus d - 1 - dim d2T
// zero summands.  Computed directly and re-derived through the phi table;
// disagreement means a bug, and is reported as such.
inline SplittingType splitting_type(const CurveSummary& summary) {
  std::vector<int> c;
  for (const Component& comp : summary.components) {
    const std::vector<int> part = direct_c_values(comp);
    c.insert(c.end(), part.begin(), part.end());
  }
  const int zeros = summary.zero_summands();
  if (zeros < 0 || static_cast<int>(c.size()) + zeros != summary.s - 1) {
    throw internal_error(errc::count_mismatch,
                         "component twists plus " + std::to_string(zeros) +
                             " zeros do not add up to s - 1 = " +
                             std::to_string(summary.s - 1) + " summands");
  }
  c.insert(c.end(), static_cast<std::size_t>(zeros), 0);
  SplittingType direct(std::move(c));

  const SplittingType via_phi = splitting_from_phi(phi_table(summary), summary.s);
  if (!(direct == via_phi)) {
    throw internal_error(errc::cross_check_failure,
                         "direct twists " + direct.str() +
                             " disagree with phi route " + via_phi.str());
  }
  return direct;
}

}  // namespace normbundle
