#ifndef XAH_QLINALG_HPP
#define XAH_QLINALG_HPP

// Exact linear algebra over the rationals: dense matrices, canonical
// row-echelon forms, kernels, solves, subspaces and quotient spaces.
// Every comparison is exact; nothing in this layer ever rounds.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xah {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Scalar& s);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a x
Scalar dot(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_col(std::size_t c, const Vector& v);
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; basis of the result is the lexicographic pairing.
Matrix kron(const Matrix& a, const Matrix& b);

/// (index, value) pairs with increasing indices and nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Row-compressed matrix for large, mostly empty differentials.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  explicit SparseMatrix(const Matrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;
  Scalar at(std::size_t r, std::size_t c) const;

  /// entry (r, c) += x
  void add(std::size_t r, std::size_t c, const Scalar& x);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix dense() const;
  SparseMatrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form. Pivots are chosen leftmost column first,
/// topmost remaining row within a column.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const SparseMatrix& m);

/// A linear subspace of Q^n held by its reduced row-echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(std::size_t ambient_dim);
  /// Trusted: basis rows already in reduced echelon form with these pivots.
  static Subspace from_echelon(std::size_t ambient_dim, std::vector<Vector> basis, std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates in basis(); nullopt when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its component along the pivot coordinates.
  Vector reduce(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);

/// Canonical solution of m v = b (free variables zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Solves m X = b column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// ambient / span(relations). Representatives are the standard basis
/// vectors at the non-pivot columns of the relation echelon form.
class QuotientSpace {
 public:
  explicit QuotientSpace(std::size_t ambient_dim = 0);
  QuotientSpace(std::size_t ambient_dim, const std::vector<Vector>& relations);
  explicit QuotientSpace(Subspace relations);

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return reps_.size(); }
  const Subspace& relations() const { return relations_; }
  const std::vector<std::size_t>& representative_indices() const { return reps_; }

  Vector project(const Vector& v) const;
  Vector lift(const Vector& coords) const;
  Matrix projection_matrix() const;
  Matrix lift_matrix() const;

 private:
  void init_reps();

  Subspace relations_;
  std::vector<std::size_t> reps_;
};

/// Matrix of the map induced by f between quotients, or nullopt when f does
/// not carry source relations into target relations.
std::optional<Matrix> induced_map(const Matrix& f, const QuotientSpace& source,
                                  const QuotientSpace& target);

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xah

#endif
