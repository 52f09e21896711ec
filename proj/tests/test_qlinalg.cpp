#include <algorithm>
#include <random>

#include "doctest.h"
#include "xah/qlinalg.hpp"

using namespace xah;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> entry(-3, 3), keep(0, 9);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng) < density) {
        Scalar x(entry(rng), 1 + std::abs(entry(rng)));
        x.canonicalize();
        m(i, j) = x;
      }
  return m;
}

// rank-deficient by construction: a product through a thin middle
Matrix low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r, 8) * random_matrix(rng, r, cols, 8);
}

}  // namespace

TEST_CASE("scalars print and parse exactly") {
  for (const char* s : {"0", "-7", "3/4", "-22/7", "123456789012345678901234567891/7"})
    CHECK(to_string(parse_scalar(s)) == s);
  CHECK(parse_scalar("6/8") == Scalar(3, 4));
}

TEST_CASE("rank, kernel and image of a fixed matrix") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(m.apply(k.basis()[0])));
  CHECK(image(m).dim() == 2);
  CHECK(image(m).contains(Vector{1, 2, 1}));
  CHECK_FALSE(image(m).contains(Vector{1, 0, 0}));
}

TEST_CASE("reduced echelon form does not depend on row order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = low_rank(rng, 6, 7, 1 + trial % 5);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::shuffle(rows.begin(), rows.end(), rng);
    Rref a = rref(m), b = rref(Matrix::from_rows(rows, m.cols()));
    CHECK(a.pivots == b.pivots);
    CHECK(a.reduced == b.reduced);
  }
}

TEST_CASE("rank plus nullity, kernel annihilated, image spanned") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + trial % 5, cols = 3 + trial % 4;
    Matrix m = trial % 2 ? random_matrix(rng, rows, cols, 4) : low_rank(rng, rows, cols, 2);
    Subspace k = kernel(m), im = image(m);
    CHECK(rank(m) + k.dim() == cols);
    CHECK(im.dim() == rank(m));
    for (const Vector& v : k.basis()) CHECK(is_zero(m.apply(v)));
    for (std::size_t j = 0; j < cols; ++j) CHECK(im.contains(m.col(j)));
  }
}

TEST_CASE("sparse and dense elimination agree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = trial % 3 ? random_matrix(rng, 7, 5, 3) : low_rank(rng, 7, 5, 3);
    SparseMatrix s(m);
    CHECK(s.dense() == m);
    CHECK(rank(s) == rank(m));
    CHECK(kernel(s) == kernel(m));
    CHECK(image(s) == image(m));
    CHECK(s.transpose().dense() == m.transpose());
    Matrix n = random_matrix(rng, 5, 4, 5);
    CHECK((s * SparseMatrix(n)).dense() == m * n);
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 4, 4, 9);
    Vector x{1, Scalar(-2, 3), 0, 5};
    auto y = solve(m, m.apply(x));
    REQUIRE(y);
    CHECK(m.apply(*y) == m.apply(x));
    auto inv = inverse(m);
    CHECK(bool(inv) == (rank(m) == 4));
    if (inv) CHECK(*inv * m == Matrix::identity(4));
  }
  Matrix singular = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
  CHECK_FALSE(solve(singular, Vector{1, 0}));
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("quotient representatives are the non-pivot unit vectors") {
  QuotientSpace q(4, {Vector{1, 1, 0, 0}, Vector{0, 0, 1, -1}});
  CHECK(q.dim() == 2);
  CHECK(q.representative_indices() == std::vector<std::size_t>{1, 3});
  CHECK(q.project(Vector{1, 0, 0, 0}) == Vector{-1, 0});
  for (std::size_t i = 0; i < q.dim(); ++i) CHECK(q.project(q.lift(unit_vector(2, i))) == unit_vector(2, i));
  for (const Vector& r : q.relations().basis()) CHECK(is_zero(q.project(r)));
}

TEST_CASE("subspace sums and containment") {
  Subspace a = Subspace::span(3, {Vector{1, 0, 0}});
  Subspace b = Subspace::span(3, {Vector{0, 1, 1}, Vector{1, 1, 1}});
  CHECK(b.contains(a));
  CHECK(a.sum(b) == b);
  CHECK(b.coordinates(Vector{2, 1, 1}));
  CHECK_FALSE(b.coordinates(Vector{0, 1, 0}));
}
