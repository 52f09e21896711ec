#ifndef XAH_LIE_HPP
#define XAH_LIE_HPP

// Lie algebras by structure constants, U(g) in PBW normal form as a ring
// over A = k, finite-dimensional g-modules, and the Chevalley–Eilenberg
// resolution.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "xah/complexes.hpp"

namespace xah {

class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LieAlgebraData {
 public:
  /// brackets[i * dim + j] = [x_i, x_j]. Throws AlgebraError unless
  /// antisymmetric and Jacobi holds on all basis triples.
  LieAlgebraData(std::string name, std::vector<std::string> labels, std::vector<Vector> brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y ↦ [x_i, y].
  Matrix ad(std::size_t i) const;
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vector> brackets_;
};

using LiePtr = std::shared_ptr<const LieAlgebraData>;

/// U(g) with the PBW basis of ordered monomials x_1^{a_1} ⋯ x_d^{a_d},
/// enumerated by total degree and then lexicographically (higher powers of
/// earlier variables first). Products whose degree exceeds max_degree throw
/// DegreeOverflow.
class PBWRing : public HopfRing {
 public:
  PBWRing(LiePtr lie, std::size_t max_degree);

  std::string name() const override { return "U(" + lie_->name() + ")"; }
  bool finite() const override { return false; }
  std::size_t basis_size(std::size_t max_degree) const override;
  std::size_t degree(std::size_t b) const override { return degree_[b]; }
  std::string label(std::size_t b) const override;
  Elem one() const override { return basis_elem(0); }
  Elem multiply_basis(std::size_t i, std::size_t j) const override;
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::vector<std::size_t> factors(std::size_t b) const override;
  std::size_t base_dim() const override { return 1; }
  Vector base_unit() const override { return {Scalar(1)}; }
  Matrix base_action(std::size_t) const override { return Matrix(1, 1); }
  Elem source(const Vector& a) const override { return basis_elem(0, a[0]); }
  Elem target(const Vector& a) const override { return basis_elem(0, a[0]); }
  /// Δ(x^a) = Σ_c binom(a, c) x^c ⊗ x^{a−c}
  std::vector<Term> coproduct(std::size_t b) const override;
  /// x₊ ⊗ x₋ = x ⊗ 1 − 1 ⊗ x, extended by (uv)₊ ⊗ (uv)₋ = u₊v₊ ⊗ v₋u₋.
  std::vector<Term> translation(std::size_t b) const override;
  /// Checks ρ(x_i)ρ(x_j) − ρ(x_j)ρ(x_i) = ρ([x_i, x_j]) (reversed for right modules).
  void validate(const Representation& m) const override;

  const LieAlgebraData& lie() const { return *lie_; }
  std::size_t max_degree() const { return max_degree_; }
  /// Basis index of x_i.
  std::size_t generator(std::size_t i) const { return gens_[i]; }
  const std::vector<unsigned>& exponents(std::size_t b) const { return monomials_[b]; }
  std::size_t index_of(const std::vector<unsigned>& exponents) const;
  /// x_{i_1} x_{i_2} ⋯ in normal form.
  Elem word(const std::vector<std::size_t>& letters) const;
  Elem lie_element(const Vector& x) const;

 private:
  Elem times_generator(std::size_t b, std::size_t k) const;

  LiePtr lie_;
  std::size_t max_degree_;
  std::vector<std::vector<unsigned>> monomials_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> prefix_;  // prefix_[D] = number of monomials of degree ≤ D
  std::map<std::vector<unsigned>, std::size_t> index_;
  std::vector<std::size_t> gens_;
  struct Memo {
    std::mutex lock;
    std::map<std::pair<std::size_t, std::size_t>, Elem> by_generator;
    std::map<std::pair<std::size_t, std::size_t>, Elem> products;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

using PBWPtr = std::shared_ptr<const PBWRing>;

PBWPtr make_pbw(LiePtr lie, std::size_t max_degree);

/// A left g-module from one matrix per basis element of g (validated).
Representation lie_module(const PBWPtr& ring, const std::vector<Matrix>& action, std::string name);
Representation trivial_lie_module(const PBWPtr& ring);
Representation adjoint_module(const PBWPtr& ring);
/// Hom(g, k) with (x·f)(y) = −f([x, y]).
Representation coadjoint_module(const PBWPtr& ring);

struct CEResolution {
  FreeResolution resolution;
  /// subsets[n][s]: the increasing index list of the generator e_S of P_n
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
};

/// P_n = U ⊗ Λⁿg, d(e_S) = Σ_i (−1)^{i+1} x_{s_i} e_{S∖s_i}
///                         + Σ_{i<j} (−1)^{i+j} e_{[x_{s_i}, x_{s_j}] ∧ S∖{s_i,s_j}}.
CEResolution ce_resolution(const PBWPtr& ring);

/// Δ(e_S) = Σ_{S = I ⊔ J} sign(I, J) e_I ⊗ e_J.
Diagonal ce_diagonal(const CEResolution& ce);

/// Translation data on generators: x_i ↦ terms of x_i₊ ⊗ x_i₋.
std::vector<std::vector<Term>> translation_map_ug(const PBWRing& ring);

}  // namespace xah

#endif
