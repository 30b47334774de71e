#pragma once

// Combinatorial model of a rational monomial curve of degree d in P^s.
//
// The curve is the projection of the degree-d rational normal curve away from
// the span T of e+1 monomials x^(d-i) y^i; we identify T with the sorted set
// of its y-exponents i.  Everything downstream (splitting formulas, oracles)
// consumes the block/component decomposition built here:
//
//   block      maximal run of consecutive exponents <alpha..beta>,
//              b = beta - alpha, gamma = b + 2
//   component  maximal chain of blocks in which consecutive blocks are
//              separated by a gap of exactly 2 (alpha_next = beta_prev + 2)
//
// A component with blocks <alpha_1..beta_1>, ..., <alpha_r..beta_r> has
// height lambda = sum(gamma_i) = beta_r - alpha_1 + 2 and apex monomial
// x^(d-alpha_1) y^(beta_r) of degree d + lambda - 2.

#include <algorithm>
#include <string>
#include <vector>

#include "normbundle/bracket.hpp"
#include "normbundle/errors.hpp"

namespace normbundle {

// Degree d plus the sorted y-exponents of the monomials spanning the
// projection center.  Structurally valid means exponents lie in [0, d] and
// 1 <= |exponents| <= d - 3, so that s = d - |exponents| >= 3.
struct MonomialSpace {
  int degree = 0;
  std::vector<int> exponents;

  int dim() const { return static_cast<int>(exponents.size()); }
  int e() const { return dim() - 1; }
  int s() const { return degree - dim(); }
};

struct Block {
  int alpha = 0;
  int beta = 0;

  int b() const { return beta - alpha; }
  int gamma() const { return b() + 2; }
  int length() const { return b() + 1; }
};

struct Component {
  std::vector<Block> blocks;
  int lambda = 0;              // sum of gammas = beta_last - alpha_first + 2
  std::vector<int> partition;  // (gamma_1, ..., gamma_r), each >= 2
  int apex_degree = 0;         // d + lambda - 2

  int r() const { return static_cast<int>(blocks.size()); }
  int alpha_first() const { return blocks.front().alpha; }
  int beta_last() const { return blocks.back().beta; }

  std::vector<int> b_values() const {
    std::vector<int> bs;
    bs.reserve(blocks.size());
    for (const Block& blk : blocks) bs.push_back(blk.b());
    return bs;
  }
};

namespace detail {

inline std::vector<int> normalize_exponents(std::vector<int> exps) {
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return exps;
}

}  // namespace detail

// Builds a MonomialSpace from center data (the exponents spanning T).
// Normalizes (sorts, deduplicates) and enforces structural validity only;
// the geometric constraint (no cusps or base points) lives in validate().
inline MonomialSpace from_center(int degree, std::vector<int> exponents) {
  if (degree < 4) {
    throw validation_error(errc::degree_too_small,
                           "degree " + std::to_string(degree) +
                               " too small: no valid center exists below degree 4",
                           degree);
  }
  exponents = detail::normalize_exponents(std::move(exponents));
  if (exponents.empty()) {
    throw validation_error(errc::empty_center,
                           "center must contain at least one exponent");
  }
  for (int x : exponents) {
    if (x < 0 || x > degree) {
      throw validation_error(errc::exponent_out_of_range,
                             "exponent " + std::to_string(x) +
                                 " outside [0, " + std::to_string(degree) + "]",
                             x);
    }
  }
  const int dim = static_cast<int>(exponents.size());
  if (dim > degree - 3) {
    throw validation_error(
        errc::dimension_too_large,
        "center of dimension " + std::to_string(dim) + " leaves s = " +
            std::to_string(degree - dim) + " < 3 (need at most d - 3 = " +
            std::to_string(degree - 3) + " exponents)",
        dim);
  }
  return MonomialSpace{degree, std::move(exponents)};
}

// Same model, entered through the monomials that survive on the curve.  The
// parametrization must contain x^d and y^d, i.e. exponents 0 and d; the
// center is the complement in [0, d].
inline MonomialSpace from_curve(int degree, std::vector<int> curve_exponents) {
  if (degree < 4) {
    throw validation_error(errc::degree_too_small,
                           "degree " + std::to_string(degree) +
                               " too small: no valid curve exists below degree 4",
                           degree);
  }
  curve_exponents = detail::normalize_exponents(std::move(curve_exponents));
  for (int x : curve_exponents) {
    if (x < 0 || x > degree) {
      throw validation_error(errc::exponent_out_of_range,
                             "exponent " + std::to_string(x) +
                                 " outside [0, " + std::to_string(degree) + "]",
                             x);
    }
  }
  const bool has0 = std::binary_search(curve_exponents.begin(),
                                       curve_exponents.end(), 0);
  const bool hasd = std::binary_search(curve_exponents.begin(),
                                       curve_exponents.end(), degree);
  if (!has0 || !hasd) {
    const int missing = has0 ? degree : 0;
    throw validation_error(errc::missing_endpoints,
                           "curve exponents must include 0 and " +
                               std::to_string(degree) + " (missing " +
                               std::to_string(missing) + ")",
                           missing);
  }
  std::vector<int> center;
  std::size_t pos = 0;
  for (int x = 0; x <= degree; ++x) {
    if (pos < curve_exponents.size() && curve_exponents[pos] == x) {
      ++pos;
      continue;
    }
    center.push_back(x);
  }
  if (center.empty()) {
    throw validation_error(errc::empty_center,
                           "curve uses every monomial; center is empty");
  }
  return from_center(degree, std::move(center));
}

// Witness that a space passed the geometric test: exponents within
// [2, d-2], which rules out cusps (1, d-1) and base points (0, d) of the
// projected parametrization.  Only validate() can mint one.
class ValidatedSpace {
 public:
  int degree() const { return space_.degree; }
  const std::vector<int>& exponents() const { return space_.exponents; }
  int dim() const { return space_.dim(); }
  int e() const { return space_.e(); }
  int s() const { return space_.s(); }
  const MonomialSpace& space() const { return space_; }

 private:
  friend ValidatedSpace validate(const MonomialSpace&);
  explicit ValidatedSpace(MonomialSpace space) : space_(std::move(space)) {}
  MonomialSpace space_;
};

inline ValidatedSpace validate(const MonomialSpace& space) {
  const int d = space.degree;
  if (!space.exponents.empty()) {
    const int lo = space.exponents.front();
    const int hi = space.exponents.back();
    const int bad = (lo < 2) ? lo : (hi > d - 2 ? hi : -1);
    if (bad >= 0) {
      const char* why = (bad == 0 || bad == d) ? "a base point" : "a cusp";
      throw validation_error(errc::cusp_or_basepoint_forbidden,
                             "exponent " + std::to_string(bad) +
                                 " gives the projected curve " + why +
                                 " (need exponents within [2, " +
                                 std::to_string(d - 2) + "])",
                             bad);
    }
  }
  return ValidatedSpace(space);
}

// Maximal runs of consecutive exponents.
inline std::vector<Block> blocks(const ValidatedSpace& space) {
  std::vector<Block> out;
  for (int x : space.exponents()) {
    if (!out.empty() && out.back().beta + 1 == x) {
      out.back().beta = x;
    } else {
      out.push_back(Block{x, x});
    }
  }
  return out;
}

// Groups blocks into components: consecutive blocks with a gap of exactly 2
// interact (they share second-derivative monomials) and belong together;
// a gap of 3 or more starts a fresh component.
inline std::vector<Component> components(const ValidatedSpace& space) {
  std::vector<Component> out;
  for (const Block& blk : blocks(space)) {
    if (!out.empty() && out.back().beta_last() + 2 == blk.alpha) {
      out.back().blocks.push_back(blk);
    } else {
      out.push_back(Component{});
      out.back().blocks.push_back(blk);
    }
  }
  for (Component& comp : out) {
    comp.lambda = comp.beta_last() - comp.alpha_first() + 2;
    comp.partition.clear();
    for (const Block& blk : comp.blocks) comp.partition.push_back(blk.gamma());
    comp.apex_degree = space.degree() + comp.lambda - 2;
  }
  return out;
}

// dim of the k-th inverse derivative space: each block <alpha..beta>
// contributes the monomials x^(d-alpha) y^(alpha+k-1) ... of which there are
// [[b - k + 1]]; blocks never interact here (only second derivatives mix).
inline int dim_inverse_derivative(const ValidatedSpace& space, int k) {
  int total = 0;
  for (const Block& blk : blocks(space)) total += bracket(blk.b() - k + 1);
  return total;
}

// Everything the splitting computation needs, in one struct.
struct CurveSummary {
  int d = 0;
  int e = 0;
  int s = 0;
  std::vector<Component> components;
  int dim_d2T = 0;  // dim of the second-derivative space, sum of (lambda_j + 1)

  int zero_summands() const { return d - 1 - dim_d2T; }
};

inline CurveSummary summarize(const ValidatedSpace& space) {
  CurveSummary out;
  out.d = space.degree();
  out.e = space.e();
  out.s = space.s();
  out.components = components(space);
  out.dim_d2T = 0;
  for (const Component& comp : out.components) out.dim_d2T += comp.lambda + 1;
  return out;
}

}  // namespace normbundle
