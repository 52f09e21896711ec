#ifndef XAH_PRODUCTS_HPP
#define XAH_PRODUCTS_HPP

// Cup, Yoneda, bullet and cap products on Ext_U(A, −) and Tor^U(−, A),
// evaluated on (co)chains over one free resolution P of A and reduced to
// class coordinates.
//
// Cochains in Hom_U(P_n, M) and chains in N ⊗_U P_n use the coordinates of
// hom_complex and tensor_complex.

#include "xah/homology.hpp"

namespace xah {

/// A resolution together with a diagonal P → Tot(P ⊗_A P) over id_A.
class CupPairing {
 public:
  /// p must outlive the pairing.
  CupPairing(const FreeResolution& p, Diagonal diag);
  /// Diagonal by lift_diagonal; finite rings only.
  static CupPairing lifted(const FreeResolution& p, std::size_t max_degree);

  const FreeResolution& resolution() const { return *p_; }
  const Diagonal& diagonal() const { return diag_; }
  std::size_t depth() const { return diag_.depth(); }

  /// (φ ⊗ ψ)∘Δ in Hom_U(P_{m+n}, M ⊗_A N), with (φ ⊗ ψ)(x ⊗ y) = φ(x) ⊗ ψ(y)
  /// as in the classical Hochschild cup.
  Vector cup_cochain(const Representation& m, std::size_t deg_phi, const Vector& phi, const Representation& n,
                     std::size_t deg_psi, const Vector& psi, const TensorModule& mn) const;

  /// z ∈ N ⊗_U P_k goes to Σ (−1)^{|x||y|} (φ(y) ⊗ n) ⊗_U x over n ⊗ (x ⊗ y)
  /// in N ⊗_U Δ(P_k), with y ∈ P_m; the result lies in (M ⊗_A N) ⊗_U P_{k−m},
  /// mn = tensor_right(M, N).
  Vector cap_chain(const Representation& m, std::size_t deg_phi, const Vector& phi, const Representation& n,
                   std::size_t deg_z, const Vector& z, const TensorModule& mn) const;

 private:
  const FreeResolution* p_;
  Diagonal diag_;
};

/// Blockwise image of a (co)chain under a k-linear map f : M → M'.
Vector map_coefficients(const Matrix& f, const Vector& c);

/// ψ ∘ φ̃_n for φ ∈ Hom_U(P_m, A) lifted by lift_chain_map and ψ ∈ Hom_U(P_n, M).
Vector yoneda_cochain(const FreeResolution& p, std::size_t deg_phi, const Vector& phi, const Representation& m,
                      std::size_t deg_psi, const Vector& psi);

/// (id_N ⊗ φ̃_{k−m})(z) for φ ∈ Hom_U(P_m, A) and z ∈ N ⊗_U P_k.
Vector bullet_chain(const FreeResolution& p, std::size_t deg_phi, const Vector& phi, const Representation& n,
                    std::size_t deg_z, const Vector& z);

// ------------------------------------------------------------ on classes

/// Ext(A, A) with its products, and Tor(N, A) as a module over it. Class
/// arguments and results are coordinates in the canonical class bases.
class ProductEngine {
 public:
  /// pairing.resolution() must outlive the engine.
  ProductEngine(const CupPairing& pairing, std::size_t max_degree);

  const CupPairing& pairing() const { return pairing_; }
  const FreeResolution& resolution() const { return pairing_.resolution(); }
  const ExtGroups& ext() const { return ext_; }
  std::size_t max_degree() const { return ext_.max_degree(); }

  /// The class of the augmentation, i.e. id_A.
  Vector unit() const;
  /// φ ⌣ ψ, read in Ext(A, A) through A ⊗_A A ≅ A.
  Vector cup(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const;
  /// ψ ∘ φ
  Vector yoneda(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const;
  /// Cup from cochains instead of classes; the result is a class.
  Vector cup_cochains(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const;

  /// φ • z for z ∈ Tor_k(N, A), landing in Tor_{k−m}(N, A).
  Vector bullet(std::size_t m, const Vector& phi, const TorGroups& tor, std::size_t k, const Vector& z) const;
  /// φ ⌢ z, read in Tor_{k−m}(N, A) through A ⊗_A N ≅ N.
  Vector cap(std::size_t m, const Vector& phi, const TorGroups& tor, std::size_t k, const Vector& z) const;

  /// table[i][j] = class of e_i ⌣ e_j for basis classes of Extᵐ and Extⁿ.
  std::vector<std::vector<Vector>> cup_table(std::size_t m, std::size_t n) const;
  std::vector<std::vector<Vector>> yoneda_table(std::size_t m, std::size_t n) const;

 private:
  const CupPairing& pairing_;
  Representation a_;
  ExtGroups ext_;
  TensorModule aa_;
  Matrix unitor_;
};

/// Cap with general coefficients: φ ∈ Extᵐ(A, M), z ∈ Tor_k(N, A), result in
/// Tor_{k−m}(M ⊗_A N, A) given as tor_mn over mn = tensor_right(M, N).
Vector cap(const CupPairing& pairing, const ExtGroups& ext_m, std::size_t m, const Vector& phi, const TorGroups& tor_n,
           std::size_t k, const Vector& z, const TensorModule& mn, const TorGroups& tor_mn);

/// Cup with general coefficients: φ ∈ Extᵐ(A, M), ψ ∈ Extⁿ(A, N), result in
/// ext_mn = Ext(A, M ⊗_A N) over mn = tensor_left(M, N).
Vector cup(const CupPairing& pairing, const ExtGroups& ext_m, std::size_t m, const Vector& phi, const ExtGroups& ext_n,
           std::size_t n, const Vector& psi, const TensorModule& mn, const ExtGroups& ext_mn);

// ------------------------------------------------------------- checks

struct ProductReport {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  bool pass() const { return failures.empty(); }
};

/// ψ∘φ = φ⌣ψ = (−1)^{mn} ψ⌣φ on all basis classes with m + n ≤ max_total.
ProductReport check_cup_yoneda(const ProductEngine& e, std::size_t max_total);
/// φ•z = φ⌢z on basis classes, degrees up to the engine window.
ProductReport check_bullet_cap(const ProductEngine& e, const TorGroups& tor);
/// Unit, associativity, and independence of cocycle representatives.
ProductReport check_cup_algebra(const ProductEngine& e, std::size_t max_total);

}  // namespace xah

#endif
