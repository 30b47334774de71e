#include <catch2/catch_amalgamated.hpp>

#include "normbundle/operators.hpp"

using namespace normbundle;

TEST_CASE("tensor index round trip") {
  const int d = 7;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= d; ++j) {
      const TensorBasisIndex t{i, j};
      const TensorBasisIndex back = TensorBasisIndex::unflat(t.flat(d), d);
      REQUIRE(back.i == i);
      REQUIRE(back.j == j);
    }
  }
  REQUIRE(TensorBasisIndex{0, 0}.flat(d) == 0);
  REQUIRE(TensorBasisIndex{1, 0}.flat(d) == d + 1);
}

TEST_CASE("matrix_D smallest instance written out") {
  // k = d = 1: source basis (0,0), (0,1), (1,0), (1,1); single target cell.
  // x (x) y maps to +1, y (x) x to -1, the diagonal pairs to 0.
  const ExactMatrix m = matrix_D(1, 1);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 4);
  REQUIRE(m.at(0, 0) == 0);
  REQUIRE(m.at(0, 1) == 1);
  REQUIRE(m.at(0, 2) == -1);
  REQUIRE(m.at(0, 3) == 0);
}

TEST_CASE("matrix_D columns are homogeneous in i + j") {
  // every entry of column (i, j) sits in a row with index sum i + j - 1;
  // this grading is what makes the rank computations decompose.
  const int k = 3, d = 5;
  const ExactMatrix m = matrix_D(k, d);
  for (int c = 0; c < m.cols(); ++c) {
    const TensorBasisIndex src = TensorBasisIndex::unflat(c, d);
    for (const auto& [row, v] : m.column(c)) {
      (void)v;
      const int ti = row / d;
      const int tj = row % d;
      REQUIRE(ti + tj == src.i + src.j - 1);
    }
  }
}

TEST_CASE("matrix_p smallest instances written out") {
  // k = 0: p is the identity on S^d
  const ExactMatrix p0 = matrix_p(0, 3);
  REQUIRE(p0.rows() == 4);
  REQUIRE(p0.cols() == 4);
  for (int m = 0; m <= 3; ++m) {
    REQUIRE(p0.at(m, m) != 0);
  }

  // k = 1, d = 1: columns are the images of x^2, xy, y^2
  const ExactMatrix p1 = matrix_p(1, 1);
  REQUIRE(p1.rows() == 4);
  REQUIRE(p1.cols() == 3);
  REQUIRE(p1.at(0, 0) == 2);  // x (x) dx(x^2) = 2 x (x) x
  REQUIRE(p1.at(1, 1) == 1);  // x (x) dx(xy) -> (0,1)... both middle entries 1
  REQUIRE(p1.at(2, 1) == 1);
  REQUIRE(p1.at(3, 2) == 2);
}

TEST_CASE("derivative operator and section are exact partners") {
  // rank D = k d (so ker has dimension d + k + 1), p injective, D p = 0:
  // together these say im p = ker D.
  for (int d = 1; d <= 6; ++d) {
    for (int k = 1; k <= d; ++k) {
      const ExactMatrix D = matrix_D(k, d);
      const ExactMatrix p = matrix_p(k, d);
      REQUIRE(D.rows() == k * d);
      REQUIRE(D.cols() == (k + 1) * (d + 1));
      REQUIRE(p.rows() == (k + 1) * (d + 1));
      REQUIRE(p.cols() == d + k + 1);
      REQUIRE(D.rank() == k * d);
      REQUIRE(p.rank() == d + k + 1);
      REQUIRE((D * p).nonzeros() == 0);
    }
  }
}
