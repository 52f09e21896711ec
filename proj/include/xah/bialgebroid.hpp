#ifndef XAH_BIALGEBROID_HPP
#define XAH_BIALGEBROID_HPP

// Left ×_A-bialgebras and ×_A-Hopf algebras on a finite-dimensional U:
// the four A-actions, Takeuchi checks, Galois and translation maps, and the
// two monoidal products on modules.

#include <memory>
#include <string>
#include <vector>

#include "xah/algebra.hpp"

namespace xah {

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotWellDefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The four commuting A-actions on U, one matrix per basis element of A:
///   a ▷ u = η(a⊗1)u,   u ◁ b = η(1⊗b)u,   a ▶ u = u η(1⊗a),   u ◀ b = u η(b⊗1).
struct FourActions {
  std::vector<Matrix> tri_left;
  std::vector<Matrix> tri_right;
  std::vector<Matrix> full_left;
  std::vector<Matrix> full_right;
};

class BialgebroidData {
 public:
  /// eta: dim U × dim(A)^2, the image of a_i ⊗ a_j at column i*dimA + j.
  /// delta_lift: dim(U)^2 × dim U, any k-level lift of Δ into U ⊗_k U.
  /// epsilon_hat: one dimA × dimA matrix per U-basis element (left action on A).
  BialgebroidData(AlgebraPtr u, AlgebraPtr a, Matrix eta, Matrix delta_lift, std::vector<Matrix> epsilon_hat);

  const FinDimAlgebra& U() const { return *u_; }
  const FinDimAlgebra& A() const { return *a_; }
  const AlgebraPtr& U_ptr() const { return u_; }
  const AlgebraPtr& A_ptr() const { return a_; }
  std::size_t dim_u() const { return u_->dim(); }
  std::size_t dim_a() const { return a_->dim(); }

  const Matrix& eta() const { return eta_; }
  Vector eta_of(const Vector& a, const Vector& b) const;
  /// η(a ⊗ 1)
  Vector source(const Vector& a) const { return eta_of(a, a_->unit()); }
  /// η(1 ⊗ b)
  Vector target(const Vector& b) const { return eta_of(a_->unit(), b); }

  /// U◁ ⊗_A ▷U, the codomain of Δ.
  const TensorOver& u_tensor_a_u() const { return uau_; }
  /// Δ(b_i) in quotient coordinates (column i).
  const Matrix& delta() const { return delta_; }
  /// Canonical k-level lift of Δ (quotient representatives), dimU^2 × dimU.
  const Matrix& delta_lift() const { return delta_lift_; }
  Vector delta_of(const Vector& u) const { return delta_lift_.apply(u); }

  const std::vector<Matrix>& epsilon_hat() const { return eps_hat_; }
  /// A as a left U-module through ε̂.
  const ModuleRep& base_module() const { return *base_module_; }
  /// ε(u) = ε̂(u)(1).
  Vector counit(const Vector& u) const;

  const FourActions& actions() const { return actions_; }

 private:
  AlgebraPtr u_;
  AlgebraPtr a_;
  Matrix eta_;
  TensorOver uau_;
  Matrix delta_;
  Matrix delta_lift_;
  std::vector<Matrix> eps_hat_;
  std::shared_ptr<ModuleRep> base_module_;
  FourActions actions_;
};

using BialgebroidPtr = std::shared_ptr<const BialgebroidData>;

FourActions build_actions(const BialgebroidData& data);

struct CheckReport {
  struct Item {
    std::string name;
    bool pass;
    std::string witness;
  };
  std::vector<Item> items;

  void add(std::string name, bool pass, std::string witness = {});
  bool all_pass() const;
  std::size_t failures() const;
};

/// Centralizer condition per U-basis element, Δ and ε̂ as A^e-algebra maps,
/// coassociativity and counitality on the quotient.
CheckReport check_takeuchi(const BialgebroidData& data);

/// U ×_A U inside U ⊗_A U, computed by solving the centrality system.
Subspace takeuchi_centralizer(const BialgebroidData& data);

class HopfStructure {
 public:
  const BialgebroidData& parent() const { return *parent_; }
  const BialgebroidPtr& parent_ptr() const { return parent_; }
  /// ▶U ⊗_{A^op} U◁, the domain of β.
  const TensorOver& galois_domain() const { return domain_; }
  const Matrix& beta() const { return beta_; }
  const Matrix& beta_inverse() const { return beta_inv_; }
  /// u₊ ⊗ u₋ in galois_domain coordinates (column i for b_i).
  const Matrix& translation() const { return translation_; }
  /// Canonical k-level lift of the translation map, dimU^2 × dimU.
  const Matrix& translation_lift() const { return translation_lift_; }
  Vector translation_of(const Vector& u) const { return translation_lift_.apply(u); }

  friend HopfStructure galois_map(BialgebroidPtr data);

 private:
  BialgebroidPtr parent_;
  TensorOver domain_;
  Matrix beta_;
  Matrix beta_inv_;
  Matrix translation_;
  Matrix translation_lift_;
};

/// Throws NotInvertible when the Galois map is not bijective.
HopfStructure galois_map(BialgebroidPtr data);

/// The five translation-map identities plus membership in U ×_{A^op} U.
CheckReport check_schauenburg(const HopfStructure& h);

/// A monoidal product of modules: the quotient and the induced action.
struct ModuleProduct {
  TensorOver space;
  ModuleRep module;
};

/// M ⊗_A N with u(m⊗n) = u₍₁₎m ⊗ u₍₂₎n.
ModuleProduct module_tensor_left(const BialgebroidData& data, const ModuleRep& m, const ModuleRep& n);
/// M ⊗_A P with (m⊗p)u = u₋m ⊗ pu₊, a right U-module.
ModuleProduct module_tensor_right(const HopfStructure& h, const ModuleRep& m, const ModuleRep& p);

struct Isomorphism {
  Matrix forward;
  Matrix inverse;
};

/// (M ⊗_A P) ⊗_U N → P ⊗_U (N ⊗_A M), m⊗p⊗n ↦ p⊗n⊗m.
Isomorphism tensor_flip(const HopfStructure& h, const ModuleRep& m, const ModuleRep& p, const ModuleRep& n);

struct GaloisModule {
  TensorOver domain;   // ▶U ⊗_{A^op} M◁
  ModuleRep domain_module;
  ModuleProduct codomain;  // U ⊗ M
  Isomorphism beta;
};

/// β_M(u ⊗ m) = u₍₁₎ ⊗ u₍₂₎m with inverse u ⊗ m ↦ u₊ ⊗ u₋m.
GaloisModule galois_module(const HopfStructure& h, const ModuleRep& m);

/// Unit isomorphisms A ⊗ M → M and M ⊗ A → M of the monoidal structure.
Matrix left_unitor(const BialgebroidData& data, const ModuleRep& m, const ModuleProduct& a_tensor_m);
Matrix right_unitor(const BialgebroidData& data, const ModuleRep& m, const ModuleProduct& m_tensor_a);

}  // namespace xah

#endif
