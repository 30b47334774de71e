#pragma once

// The two operators whose kernels and images drive the oracle, written out
// on monomial bases.
//
// Basis conventions, used consistently everywhere:
//
//   S^n U        basis y-exponent m = 0..n, i.e. x^(n-m) y^m.
//   S^k U (x) S^d U   basis pairs (i, j), i = y-exponent in the S^k factor,
//                j = y-exponent in the S^d factor, flattened as
//                flat = i * (d + 1) + j.
//
//   D : S^k U (x) S^d U -> S^(k-1) U (x) S^(d-1) U
//       D = dx (x) dy - dy (x) dx (the wedge of the two partials).
//       On the basis pair (i, j):
//         (i, j) |-> (k - i) j (i, j-1) - i (d - j) (i-1, j)
//       where coefficients vanish exactly when a target index would leave
//       the valid range, so no explicit guards are needed.
//
//   p : S^(d+k) U -> S^k U (x) S^d U
//       the polarization-style section sending f to
//       sum_i binom(k, i) x^(k-i) y^i (x) dx^(k-i) dy^i (f), with the
//       harmless constant d!/(d+k)! dropped (column scaling does not move
//       ranks, kernels or spans).  On the monomial with y-exponent m:
//         column m has entry binom(k,i) fall(d+k-m, k-i) fall(m, i)
//         at row (i, m - i) for every i with 0 <= m - i <= d,
//       where fall(n, t) = n (n-1) ... (n-t+1).
//
// These satisfy D compose p = 0, rank D = k d, and im p = ker D (checked
// exhaustively in the tests rather than assumed).

#include <stdexcept>

#include "normbundle/exact_matrix.hpp"

namespace normbundle {

// Position of x^(k-i) y^i (x) x^(d-j) y^j in the flattened tensor basis.
struct TensorBasisIndex {
  int i = 0;
  int j = 0;

  int flat(int d) const { return i * (d + 1) + j; }
  static TensorBasisIndex unflat(int flat, int d) {
    return TensorBasisIndex{flat / (d + 1), flat % (d + 1)};
  }
};

inline ExactMatrix matrix_D(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("matrix_D needs k, d >= 1");
  ExactMatrix out(k * d, (k + 1) * (d + 1));
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= d; ++j) {
      const int src = TensorBasisIndex{i, j}.flat(d);
      if (i <= k - 1 && j >= 1) {
        // target (i, j-1) in S^(k-1) (x) S^(d-1): flat over width d
        out.add(i * d + (j - 1), src, BigInt((k - i) * j));
      }
      if (i >= 1 && j <= d - 1) {
        out.add((i - 1) * d + j, src, BigInt(-i * (d - j)));
      }
    }
  }
  return out;
}

namespace detail {

inline BigInt falling_factorial(int n, int t) {
  BigInt out(1);
  for (int step = 0; step < t; ++step) out *= (n - step);
  return out;
}

inline BigInt binomial_big(int n, int t) {
  if (t < 0 || t > n) return BigInt(0);
  BigInt out(1);
  for (int step = 1; step <= t; ++step) {
    out *= (n - t + step);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(step));
  }
  return out;
}

}  // namespace detail

inline ExactMatrix matrix_p(int k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("matrix_p needs k, d >= 0");
  ExactMatrix out((k + 1) * (d + 1), d + k + 1);
  for (int m = 0; m <= d + k; ++m) {
    for (int i = 0; i <= k; ++i) {
      const int j = m - i;
      if (j < 0 || j > d) continue;
      const BigInt coeff = detail::binomial_big(k, i) *
                           detail::falling_factorial(d + k - m, k - i) *
                           detail::falling_factorial(m, i);
      out.add(TensorBasisIndex{i, j}.flat(d), m, coeff);
    }
  }
  return out;
}

}  // namespace normbundle
