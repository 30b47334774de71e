#pragma once

// Sparse integer matrices with exact rank.  The oracle side of this library
// never touches floating point: entries are GMP integers and rank comes from
// fraction-free (Bareiss) elimination, so a computed rank is a proof.
//
// Two implementation notes:
//
//   * Elimination runs per connected component of the nonzero pattern.
//     Rank is additive across components (the matrix is block-diagonal up
//     to a row/column permutation), and the operator matrices built on top
//     of this class decompose into many tiny blocks, which keeps the
//     exhaustive cross-checks cheap on one core.
//
//   * Within a block, pivots are chosen by largest absolute value.  Bareiss
//     updates divide by the previous pivot; the division is exact because
//     every intermediate entry is a minor of the original matrix.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "normbundle/errors.hpp"

namespace normbundle {

using BigInt = mpz_class;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Fraction-free elimination on a dense block; destroys its argument and
// returns the number of pivots.  Columns with no usable pivot are skipped,
// so this handles rank-deficient and non-square blocks alike.
inline int bareiss_rank(std::vector<std::vector<BigInt>>& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  BigInt prev(1);
  int pr = 0;
  for (int pc = 0; pc < cols && pr < rows; ++pc) {
    int best = -1;
    for (int r = pr; r < rows; ++r) {
      if (mpz_sgn(m[r][pc].get_mpz_t()) == 0) continue;
      if (best < 0 ||
          mpz_cmpabs(m[r][pc].get_mpz_t(), m[best][pc].get_mpz_t()) > 0) {
        best = r;
      }
    }
    if (best < 0) continue;
    if (best != pr) std::swap(m[pr], m[best]);
    for (int r = pr + 1; r < rows; ++r) {
      for (int j = pc + 1; j < cols; ++j) {
        BigInt t = m[pr][pc] * m[r][j] - m[r][pc] * m[pr][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[r][j] = std::move(t);
      }
      m[r][pc] = 0;
    }
    prev = m[pr][pc];
    ++pr;
  }
  return pr;
}

}  // namespace detail

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const BigInt& v) {
    check_index(r, c);
    if (mpz_sgn(v.get_mpz_t()) == 0) return;
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto [it, inserted] = col.try_emplace(r, v);
    if (!inserted) {
      it->second += v;
      if (mpz_sgn(it->second.get_mpz_t()) == 0) col.erase(it);
    }
  }

  void set(int r, int c, BigInt v) {
    check_index(r, c);
    auto& col = columns_[static_cast<std::size_t>(c)];
    if (mpz_sgn(v.get_mpz_t()) == 0) {
      col.erase(r);
    } else {
      col[r] = std::move(v);
    }
  }

  BigInt at(int r, int c) const {
    check_index(r, c);
    const auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    return it == col.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& column(int c) const {
    if (c < 0 || c >= cols_) throw std::out_of_range("column index");
    return columns_[static_cast<std::size_t>(c)];
  }

  std::size_t nonzeros() const {
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
  }

  ExactMatrix select_columns(const std::vector<int>& which) const {
    ExactMatrix out(rows_, static_cast<int>(which.size()));
    for (std::size_t j = 0; j < which.size(); ++j) {
      out.columns_[j] = column(which[j]);
    }
    return out;
  }

  // Columns of `a` followed by columns of `b`.
  static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) {
      throw std::invalid_argument("hstack needs matching row counts");
    }
    ExactMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int c = 0; c < a.cols_; ++c) out.columns_[static_cast<std::size_t>(c)] = a.columns_[static_cast<std::size_t>(c)];
    for (int c = 0; c < b.cols_; ++c) out.columns_[static_cast<std::size_t>(a.cols_ + c)] = b.columns_[static_cast<std::size_t>(c)];
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("inner dimensions do not match");
    }
    ExactMatrix out(a.rows_, b.cols_);
    for (int jc = 0; jc < b.cols_; ++jc) {
      for (const auto& [inner, v] : b.columns_[static_cast<std::size_t>(jc)]) {
        for (const auto& [r, w] : a.columns_[static_cast<std::size_t>(inner)]) {
          out.add(r, jc, v * w);
        }
      }
    }
    return out;
  }

  // Exact rank.  Splits the nonzero pattern into connected components
  // (joining a row and a column whenever their entry is nonzero) and runs
  // fraction-free elimination on each dense block; ranks add up.
  int rank() const {
    detail::DisjointSets sets(rows_ + cols_);
    for (int c = 0; c < cols_; ++c) {
      for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)]) {
        (void)v;
        sets.unite(r, rows_ + c);
      }
    }
    std::map<int, std::vector<int>> groups;  // root -> column indices
    for (int c = 0; c < cols_; ++c) {
      if (columns_[static_cast<std::size_t>(c)].empty()) continue;
      groups[sets.find(rows_ + c)].push_back(c);
    }
    int total = 0;
    for (const auto& [root, group_cols] : groups) {
      (void)root;
      std::vector<int> group_rows;
      for (int c : group_cols) {
        for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)]) {
          (void)v;
          group_rows.push_back(r);
        }
      }
      std::sort(group_rows.begin(), group_rows.end());
      group_rows.erase(std::unique(group_rows.begin(), group_rows.end()),
                       group_rows.end());
      std::map<int, int> row_slot;
      for (std::size_t i = 0; i < group_rows.size(); ++i) {
        row_slot[group_rows[i]] = static_cast<int>(i);
      }
      std::vector<std::vector<BigInt>> dense(
          group_rows.size(), std::vector<BigInt>(group_cols.size(), BigInt(0)));
      for (std::size_t j = 0; j < group_cols.size(); ++j) {
        for (const auto& [r, v] : columns_[static_cast<std::size_t>(group_cols[j])]) {
          dense[static_cast<std::size_t>(row_slot[r])][j] = v;
        }
      }
      total += detail::bareiss_rank(dense);
    }
    return total;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("matrix index (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  int rows_;
  int cols_;
  std::vector<std::map<int, BigInt>> columns_;
};

// A subspace given by explicit spanning vectors (the matrix columns), with
// the invariant that the vectors are linearly independent; the constructor
// verifies it, so dim() is just the count.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(ExactMatrix columns) : columns_(std::move(columns)) {
    if (columns_.rank() != columns_.cols()) {
      throw internal_error(errc::cross_check_failure,
                           "basis vectors are linearly dependent");
    }
  }

  int ambient() const { return columns_.rows(); }
  int count() const { return columns_.cols(); }
  int dim() const { return columns_.cols(); }
  const ExactMatrix& columns() const { return columns_; }

 private:
  ExactMatrix columns_;
};

// dim(span(basis) + column span of `other`).
inline int dim_sum(const SubspaceBasis& basis, const ExactMatrix& other) {
  return ExactMatrix::hstack(basis.columns(), other).rank();
}

}  // namespace normbundle
