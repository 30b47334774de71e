#pragma once

// Exact linear algebra oracle for the splitting type.  Independent of the
// closed forms in splitting.hpp: here phi(k) is obtained as the kernel
// dimension of an honest differential operator on an honest monomial basis,
// and q(k) as an honest intersection dimension.  Slow by design; its job is
// to catch bugs in the fast route.

#include <stdexcept>
#include <string>
#include <vector>

#include "normbundle/curve.hpp"
#include "normbundle/exact_matrix.hpp"
#include "normbundle/operators.hpp"
#include "normbundle/splitting.hpp"

namespace normbundle {

namespace detail {

// Columns of a (k, d) tensor-basis matrix whose second factor lies in T:
// pairs (i, j) with j in the center's exponent set, in flat order.
inline std::vector<int> tensor_columns_over_center(const ValidatedSpace& space,
                                                   int k) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>((k + 1) * space.dim()));
  for (int i = 0; i <= k; ++i) {
    for (int j : space.exponents()) {
      cols.push_back(TensorBasisIndex{i, j}.flat(space.degree()));
    }
  }
  return cols;
}

}  // namespace detail

// phi(k) for k >= 2, computed as dim ker of the second-derivative operator
// D^2 : S^k U (x) T -> S^(k-2) U (x) S^(d-2) U, i.e. the composite
// matrix_D(k-1, d-1) * matrix_D(k, d) restricted to the T columns.
inline int phi_oracle(const ValidatedSpace& space, int k) {
  if (k < 2) throw std::invalid_argument("phi_oracle needs k >= 2");
  const int d = space.degree();
  const ExactMatrix restricted =
      matrix_D(k, d).select_columns(detail::tensor_columns_over_center(space, k));
  const ExactMatrix composite = matrix_D(k - 1, d - 1) * restricted;
  return (k + 1) * space.dim() - composite.rank();
}

// q(k) for a single-component center, from two explicit subspaces of
// S^(k-1) U (x) S^(d-1) U:
//
//   A = p_(k-1) images of the (lambda - k + 1) order-(lambda - k)
//       derivatives of the apex monomial h = x^(d - alpha_1) y^(beta_r);
//       the derivative dx^j dy^(lambda-k-j) h is a single monomial of
//       degree d + k - 2 with y-exponent alpha_1 + k - 2 + j (its scalar
//       coefficient cannot vanish and does not move the span);
//   B = image of D restricted to S^k U (x) T.
//
// q(k) is the codimension of A cap B inside A: the apex derivatives not
// absorbed by the image of D.  dim(A cap B) = dim A + dim B - dim(A + B),
// every term an exact rank.
inline int qk_oracle(const ValidatedSpace& space, int k) {
  const std::vector<Component> comps = components(space);
  if (comps.size() != 1) {
    throw std::invalid_argument(
        "qk_oracle handles single-component centers only (got " +
        std::to_string(comps.size()) + " components)");
  }
  const Component& comp = comps.front();
  const int lambda = comp.lambda;
  if (k < 2 || k > lambda) {
    throw std::invalid_argument("qk_oracle needs 2 <= k <= lambda = " +
                                std::to_string(lambda));
  }
  const int d = space.degree();

  std::vector<int> derivative_monomials;  // y-exponents inside S^(d+k-2) U
  for (int j = 0; j <= lambda - k; ++j) {
    derivative_monomials.push_back(comp.alpha_first() + k - 2 + j);
  }
  const SubspaceBasis a(
      matrix_p(k - 1, d - 1).select_columns(derivative_monomials));

  const ExactMatrix b =
      matrix_D(k, d).select_columns(detail::tensor_columns_over_center(space, k));

  const int dim_a = a.dim();
  const int dim_b = b.rank();
  const int dim_sum_ab = dim_sum(a, b);
  const int dim_intersection = dim_a + dim_b - dim_sum_ab;
  return dim_a - dim_intersection;
}

// phi table with the k >= 2 entries supplied by phi_oracle, same shape and
// stopping rule as the closed-form table.
inline PhiTable phi_table_oracle(const ValidatedSpace& space) {
  PhiTable table;
  table.values.push_back(space.degree() + space.e());
  table.values.push_back(2 * space.dim());
  for (int k = 2; k <= space.degree() + 2; ++k) {
    table.values.push_back(phi_oracle(space, k));
    const std::size_t n = table.values.size();
    if (n >= 4 && table.values[n - 1] == 0 && table.values[n - 2] == 0) return table;
  }
  throw internal_error(errc::cross_check_failure,
                       "oracle phi table failed to terminate");
}

inline SplittingType splitting_oracle(const ValidatedSpace& space) {
  return splitting_from_phi(phi_table_oracle(space), space.s());
}

}  // namespace normbundle
