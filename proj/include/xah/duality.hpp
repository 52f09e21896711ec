#ifndef XAH_DUALITY_HPP
#define XAH_DUALITY_HPP

// Duality modules: A* = Ext^d_U(A, U), the dual resolution, the fundamental
// class ω ∈ Tor_d(A*, A) and cap product with it. For projective A (d = 0)
// everything is computed from dual bases.

#include <optional>
#include <string>
#include <vector>

#include "xah/products.hpp"

namespace xah {

class NotDuality : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- underived

/// Generators e_i of A over a finite ring U, a U-linear splitting ι of
/// π : Uⁿ → A, and the dual elements eⁱ = pr_i ∘ ι of A* = Hom_U(A, U).
struct DualBases {
  Representation a;
  std::vector<Vector> generators;
  /// ι, as a (n · dim U) × dim A matrix
  Matrix splitting;
  /// Hom_U(A, U) as flattened dim U × dim A matrices
  Subspace hom;
  /// A* with (α·u)(a) = α(a)u
  Representation astar;
  /// eⁱ in the coordinates of hom
  std::vector<Vector> duals;
  /// A* ⊗_U A and ω₀ = Σ eⁱ ⊗ eᵢ in its coordinates
  QuotientSpace astar_tensor_a;
  Vector omega;

  /// α(a) ∈ U for α in hom coordinates
  Vector evaluate(const Vector& alpha, const Vector& a) const;
};

/// Throws NotProjective when no splitting exists. Empty generators mean the
/// standard basis of A.
DualBases dual_bases(const Representation& a, std::vector<Vector> generators = {});

/// Σ eⁱ(a)eᵢ = a on a basis of A and Σ eⁱ α(eᵢ) = α on a basis of A*.
bool check_dual_bases(const DualBases& db, std::string* witness = nullptr);

struct LinearIso {
  Matrix forward;
  Matrix inverse;
  bool bijective = false;
};

/// δ : M ⊗_U A → Hom_{Uᵒᵖ}(A*, M), m ⊗ a ↦ (α ↦ m α(a)), for a right module
/// M, with inverse φ ↦ Σ φ(eⁱ) ⊗ eᵢ; both in canonical coordinates.
LinearIso delta_underived(const Representation& m, const DualBases& db);

/// · • ω₀ : Hom_U(A, M) → A* ⊗_U M, φ ↦ Σ eⁱ ⊗ φ(eᵢ).
LinearIso bullet_omega_underived(const Representation& m, const DualBases& db);

/// · ⌢ ω₀ : Hom_U(A, M) → (M ⊗_A A*) ⊗_U A, φ ↦ Σ (φ(eᵢ) ⊗ eⁱ) ⊗ 1.
LinearIso cap_omega_underived(const Representation& m, const DualBases& db);

// --------------------------------------------------------------- derived

/// Homology of Hom_U(C, U) read through PBW filtration pieces.
struct DualComplexHomology {
  /// the dual complex, a complex of free modules on the other side
  FreeComplex dual;
  /// dims[j][k]: dim of ker d_j on F_k minus rank of d_{j+1} on F_{k−c}
  std::vector<std::vector<std::size_t>> dims;
  std::size_t bound = 0;
  /// the first filtration level at which dims[0] has settled
  std::size_t settled = 0;
  /// H_0 of the dual complex as a module, and the augmentation on generators
  Representation top;
  std::vector<Vector> augmentation;
};

/// Works for finite rings (one filtration piece) and PBW rings.
DualComplexHomology dual_complex_homology(const FreeComplex& c, std::size_t bound);

struct DualityData {
  std::size_t d = 0;
  /// dim Extⁿ_U(A, U) for n = 0 .. top
  std::vector<std::size_t> ext_dims;
  std::size_t bound = 0;
  Representation astar;
  /// P*_{d−•}, a resolution of A* by free right modules
  FreeResolution dual_resolution;
  /// ω as a chain in A* ⊗_U P_d, and its class in Tor_d(A*, A)
  Vector omega;
  Vector omega_class;
  /// set when d = 0 and A is projective
  std::optional<DualBases> underived;
};

/// Ext_U(A, U) through the filtration bound; throws NotDuality unless it is
/// concentrated in the top degree of p. Finite rings with A projective take
/// the underived path with d = 0, checking Ext vanishing on p's window.
DualityData detect_duality(const FreeResolution& p, std::size_t bound = 4);

struct DeltaCheck {
  std::vector<bool> commutes;
  bool pass() const;
};

/// δ : M ⊗_U P_i → Hom_{Uᵒᵖ}(P*_{d−i}, M) is the identity in generator
/// coordinates; checks that it commutes with the differentials.
DeltaCheck check_delta(const DualityData& dd, const FreeResolution& p, const Representation& m);

/// A isomorphic to (A*)*, computed by dualizing the dual resolution.
bool check_double_dual(const DualityData& dd, const Representation& a, std::size_t bound = 4);

/// Exists an invertible module map between two modules on the same side.
bool isomorphic(const Representation& x, const Representation& y);

struct DualityRow {
  std::size_t m = 0;
  std::size_t ext_dim = 0;
  std::size_t tor_dim = 0;
  Matrix cap;
  bool bijective = false;
};

/// · ⌢ [ω] : Extᵐ_U(A, M) → Tor_{d−m}(M ⊗ A*, A) for a left module M.
DualityRow duality_isomorphism(const DualityData& dd, const CupPairing& pairing, const Representation& m,
                               std::size_t degree);
std::vector<DualityRow> duality_table(const DualityData& dd, const CupPairing& pairing, const Representation& m);

}  // namespace xah

#endif
