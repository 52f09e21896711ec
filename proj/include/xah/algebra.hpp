#ifndef XAH_ALGEBRA_HPP
#define XAH_ALGEBRA_HPP

// Finite-dimensional associative algebras given by structure constants, and
// their finite-dimensional modules.

#include <memory>
#include <string>
#include <vector>

#include "xah/qlinalg.hpp"

namespace xah {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FinDimAlgebra {
 public:
  /// products[i * dim + j] holds the coordinates of b_i * b_j.
  /// Throws AlgebraError unless associative and unital.
  FinDimAlgebra(std::vector<std::string> labels, std::vector<Vector> products, Vector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return products_[i * dim() + j][k];
  }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of v -> x v.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  Matrix left_mult(const Vector& x) const;
  /// Matrix of v -> v x.
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix right_mult(const Vector& x) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  bool is_commutative() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Vector> products_;
  Vector unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

/// The ground field as a one-dimensional algebra.
AlgebraPtr ground_field();

AlgebraPtr opposite(const FinDimAlgebra& a);
/// A ⊗ A^op with (x⊗y)(x'⊗y') = xx' ⊗ y'y; basis b_i ⊗ b_j at index i*dim+j.
AlgebraPtr enveloping(const FinDimAlgebra& a);

enum class Side { Left, Right };

/// A module over a finite-dimensional algebra: one action matrix per basis
/// element. For Side::Right, action(i) is the matrix of m -> m b_i.
class ModuleRep {
 public:
  ModuleRep(AlgebraPtr algebra, Side side, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FinDimAlgebra& alg() const { return *algebra_; }
  std::size_t dim() const { return dim_; }
  Side side() const { return side_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Matrix by which an arbitrary algebra element acts.
  Matrix act(const Vector& u) const;

 private:
  AlgebraPtr algebra_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

ModuleRep regular_module(const AlgebraPtr& a, Side side);

/// Left and right module structures on a common space whose actions commute.
struct BimoduleRep {
  ModuleRep left;
  ModuleRep right;
  BimoduleRep(ModuleRep l, ModuleRep r);
};

/// M ⊗_a N as a quotient of M ⊗_k N (basis index m * dim N + n).
struct TensorOver {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  QuotientSpace space;

  std::size_t dim() const { return space.dim(); }
  /// Quotient coordinates of m ⊗ n.
  Vector pure(const Vector& m, const Vector& n) const;
  /// Descends f ⊗ g to the quotients; nullopt when it does not descend.
  std::optional<Matrix> descend(const Matrix& f, const Matrix& g, const TensorOver& target) const;
};

/// Quotient of M ⊗_k N by the given pairs of commuting-action matrices:
/// span{ (L_a m) ⊗ n − m ⊗ (R_a n) }.
TensorOver balanced_tensor(std::size_t left_dim, std::size_t right_dim,
                           const std::vector<Matrix>& on_left, const std::vector<Matrix>& on_right);

TensorOver tensor_over(const ModuleRep& right, const ModuleRep& left);

/// Hom_a(M, N) as a subspace of dim(N) x dim(M) matrices, flattened row-major.
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Matrix element(std::size_t i) const;
  Matrix as_matrix(const Vector& coords) const;
  std::optional<Vector> coordinates(const Matrix& f) const;
};

HomSpace hom_over(const ModuleRep& m, const ModuleRep& n);

/// Matrix of op restricted to an invariant subspace, in the subspace basis.
std::optional<Matrix> restrict_to(const Matrix& op, const Subspace& s);

Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

}  // namespace xah

#endif
