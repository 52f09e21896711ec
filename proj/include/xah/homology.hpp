#ifndef XAH_HOMOLOGY_HPP
#define XAH_HOMOLOGY_HPP

// Ext_U(A, M) and Tor^U(N, A) from a free resolution of A, with explicit
// (co)cycle representatives in generator coordinates.

#include <vector>

#include "xah/complexes.hpp"
#include "xah/lie.hpp"

namespace xah {

/// Hom_U(P_n, M) = M^{rank} with coordinates s * dim M + i, stored in
/// degree −n; δf = f∘d, i.e. (δf)_s = Σ ρ_M(E) f_t. M lives on the side of
/// P, so a right resolution gives Hom_{Uᵒᵖ}.
/// Degrees −(max_degree + 1) .. 0.
ChainComplex hom_complex(const FreeResolution& p, const Representation& m, std::size_t max_degree);

/// N ⊗_U P_n = N^{rank} for N on the other side of P, d(n ⊗ e_s) = Σ nE ⊗ e_t.
/// Degrees 0 .. max_degree + 1.
ChainComplex tensor_complex(const Representation& n, const FreeResolution& p, std::size_t max_degree);

class ExtGroups {
 public:
  /// p must outlive this object.
  ExtGroups(const FreeResolution& p, Representation m, std::size_t max_degree);

  const FreeResolution& resolution() const { return *p_; }
  const Representation& module() const { return m_; }
  std::size_t max_degree() const { return groups_.size() - 1; }
  const ChainComplex& complex() const { return complex_; }
  const HomologyGroup& group(std::size_t n) const;
  std::size_t dim(std::size_t n) const { return group(n).dim(); }
  std::vector<std::size_t> dims() const;
  /// Canonical cocycle of the i-th basis class of Extⁿ.
  Vector representative(std::size_t n, std::size_t i) const { return group(n).representative(i); }
  /// Class coordinates; nullopt for a non-cocycle.
  std::optional<Vector> classify(std::size_t n, const Vector& cocycle) const { return group(n).classify(cocycle); }
  /// δ of a cochain in degree n.
  Vector coboundary(std::size_t n, const Vector& cochain) const;

 private:
  const FreeResolution* p_;
  Representation m_;
  ChainComplex complex_;
  std::vector<HomologyGroup> groups_;
};

class TorGroups {
 public:
  TorGroups(Representation n, const FreeResolution& p, std::size_t max_degree);

  const FreeResolution& resolution() const { return *p_; }
  const Representation& module() const { return n_; }
  std::size_t max_degree() const { return groups_.size() - 1; }
  const ChainComplex& complex() const { return complex_; }
  const HomologyGroup& group(std::size_t k) const;
  std::size_t dim(std::size_t k) const { return group(k).dim(); }
  std::vector<std::size_t> dims() const;
  Vector representative(std::size_t k, std::size_t i) const { return group(k).representative(i); }
  std::optional<Vector> classify(std::size_t k, const Vector& cycle) const { return group(k).classify(cycle); }
  Vector boundary(std::size_t k, const Vector& chain) const;

 private:
  const FreeResolution* p_;
  Representation n_;
  ChainComplex complex_;
  std::vector<HomologyGroup> groups_;
};

/// Hom_U(X, Y) for two left (or two right) modules, as flattened dim Y × dim X
/// matrices commuting with every generator.
Subspace module_hom(const Representation& x, const Representation& y);
/// N ⊗_U M for a right module N and a left module M, a quotient of N ⊗_k M.
QuotientSpace module_tensor(const Representation& n, const Representation& m);

/// Pullback along the comparison map P → Q over id_A on Extⁿ, as a matrix
/// from the class basis of ext_q to that of ext_p.
Matrix compare_ext(const ChainLift& comparison, const ExtGroups& ext_q, const ExtGroups& ext_p, std::size_t n);

struct ResolutionComparison {
  std::vector<std::size_t> dims_p;
  std::vector<std::size_t> dims_q;
  /// per degree: the induced maps are mutually inverse isomorphisms
  std::vector<bool> bijective;
  std::vector<bool> round_trip_identity;
  bool pass() const;
};

/// Lifts id_A both ways and checks the induced maps on Ext(−, M) in degrees
/// up to max_degree.
ResolutionComparison resolution_independence(const FreeResolution& p, const FreeResolution& q, const Representation& m,
                                             std::size_t max_degree);

/// dim Extⁿ_{U(g)}(k, k) for abelian g from the unnormalized bar complex,
/// graded by PBW weight and summed over weights ≤ max_weight.
std::vector<std::size_t> weight_graded_bar_ext(const PBWRing& ring, std::size_t max_degree, std::size_t max_weight);

}  // namespace xah

#endif
