#ifndef XAH_COMPLEXES_HPP
#define XAH_COMPLEXES_HPP

// Chain complexes of finite-dimensional spaces, double complexes and their
// totalization, complexes of finitely generated free modules over a ring,
// free resolutions (bar, and anything else given by generators), and lifting
// of chain maps between resolutions.

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xah/ring.hpp"

namespace xah {

class WindowExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LiftFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotProjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------- ChainComplex

/// Finitely many nonzero degrees, d_n : C_n → C_{n−1}. Cochain complexes are
/// stored with C_{−n} = Cⁿ.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// dims[k] lives in degree lowest + k; differentials[k] is d at degree
  /// lowest + k, for k = 1 .. dims.size() − 1.
  ChainComplex(int lowest, std::vector<std::size_t> dims, std::vector<SparseMatrix> differentials);
  ChainComplex(int lowest, std::vector<std::size_t> dims, const std::vector<Matrix>& differentials);

  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int n) const;
  /// dim(n−1) × dim(n); defined for lowest ≤ n ≤ highest + 1.
  const SparseMatrix& d(int n) const;

 private:
  int lowest_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> d_;  // index n − lowest, one past highest included
};

struct HomologyGroup {
  int degree = 0;
  Subspace cycles;
  Subspace boundaries;
  /// cycles / boundaries, in coordinates of the cycle basis
  QuotientSpace quotient;

  std::size_t dim() const { return quotient.dim(); }
  /// Canonical cycle representing the i-th basis class.
  Vector representative(std::size_t i) const;
  /// Class coordinates of a cycle; nullopt when v is not a cycle.
  std::optional<Vector> classify(const Vector& v) const;
};

HomologyGroup homology(const ChainComplex& c, int n);
/// (Tᵐ C)_n = C_{n−m} with differential (−1)ᵐ d.
ChainComplex shift(const ChainComplex& c, int m);

// ---------------------------------------------------------- DoubleComplex

using Bidegree = std::pair<int, int>;

struct DoubleComplex {
  std::map<Bidegree, std::size_t> dims;
  /// at (i,j): C_{i,j} → C_{i−1,j}
  std::map<Bidegree, Matrix> horizontal;
  /// at (i,j): C_{i,j} → C_{i,j−1}
  std::map<Bidegree, Matrix> vertical;

  std::size_t dim(Bidegree b) const;
  Matrix h(Bidegree b) const;
  Matrix v(Bidegree b) const;
  /// Throws unless both differentials square to zero and commute.
  void check() const;
};

struct TotalComplex {
  ChainComplex complex;
  /// offset of C_{i,j} inside Tot_{i+j}; blocks ordered by increasing i
  std::map<Bidegree, std::size_t> offset;
};

/// d = d_h + (−1)^i d_v on C_{i,j}.
TotalComplex totalize(const DoubleComplex& dc);
DoubleComplex transpose(const DoubleComplex& dc);

// ------------------------------------------------------------ FreeComplex

/// d(e_source) contains coef · e_target (left) or e_target · coef (right).
struct Edge {
  std::size_t source;
  std::size_t target;
  Elem coef;
};

/// F_0 ← F_1 ← … ← F_top, each F_n free of rank ranks[n] on the given side.
struct FreeComplex {
  RingPtr ring;
  Side side = Side::Left;
  std::vector<std::size_t> ranks;
  /// edges[n] describes d_n : F_n → F_{n−1}; edges[0] is empty.
  std::vector<std::vector<Edge>> edges;

  std::size_t top() const { return ranks.size() - 1; }
  std::size_t rank(std::size_t n) const { return n < ranks.size() ? ranks[n] : 0; }
  /// d(e_s) as a list per source generator.
  std::vector<std::vector<std::pair<std::size_t, Elem>>> rows(std::size_t n) const;
  /// Throws unless d∘d = 0 as identities in the ring.
  void check() const;
};

/// Hom(F_{top−•}, U): the free complex on the other side with the same
/// coefficients, edges reversed.
FreeComplex dual(const FreeComplex& c);

/// Underlying k-linear map of d_n restricted to filtration ≤ source_bound,
/// coordinates b * rank + generator (filtration pieces are prefixes).
Matrix underlying_differential(const FreeComplex& c, std::size_t n, std::size_t source_bound,
                               std::size_t target_bound);
/// Largest filtration degree of a coefficient in d_n.
std::size_t coefficient_degree(const FreeComplex& c, std::size_t n);

// --------------------------------------------------------- FreeResolution

struct FreeResolution {
  std::string name;
  FreeComplex complex;
  /// ε(e_j) ∈ A for the generators of F_0
  std::vector<Vector> augmentation;
  /// true when F_n = 0 beyond top, so every degree is certified
  bool finite_length = false;

  const RingPtr& ring() const { return complex.ring; }
  std::size_t rank(std::size_t n) const { return complex.rank(n); }
  /// Highest degree in which Ext and Tor are certified.
  std::size_t window() const;
  void require(std::size_t n) const;
  /// d² = 0 and ε∘d_1 = 0.
  void check() const;
};

// ------------------------------------------------------------ bar

/// C_n = (▶U◁)^{⊗_{A^op} n+1} in the normal form U ⊗ V^{⊗n}, where V is
/// spanned by a basis of U as a free left module over η(1⊗A). Basis element
/// (u, γ_1, …, γ_n) has index u · rⁿ + (γ_1 … γ_n in base r).
class BarResolution {
 public:
  using Sparse = Elem;

  BarResolution(RingPtr ring, std::size_t depth);

  const FreeResolution& resolution() const { return res_; }
  std::size_t rank_over_base() const { return r_; }
  const std::vector<Vector>& free_basis() const { return v_; }
  std::size_t dim(std::size_t n) const;

  Sparse normalize(const std::vector<Vector>& factors) const;
  /// b′ on C_n, n ≥ 1
  Sparse boundary(std::size_t n, const Sparse& x) const;
  /// s : C_n → C_{n+1}
  Sparse homotopy(std::size_t n, const Sparse& x) const;
  Vector augment(const Sparse& x) const;
  /// s : A → C_0, a ↦ η(1⊗a)
  Sparse unit_section(const Vector& a) const;

  struct Report {
    std::vector<std::string> failures;
    std::size_t checked = 0;
    bool pass() const { return failures.empty(); }
  };
  /// b′² = 0, εb′ = 0, b′s + sb′ = id and εs = id on full bases up to max_degree.
  Report check_contractible(std::size_t max_degree) const;

 private:
  std::vector<std::pair<std::size_t, Elem>> generator_row(std::size_t n, std::size_t gamma) const;
  const FinDimHopfRing& fin() const;

  RingPtr ring_;
  std::size_t depth_;
  std::size_t r_ = 0;
  std::vector<Vector> v_;
  Matrix decompose_;  // u ↦ coordinates (γ, a) with u = Σ η(1⊗a_γ) v_γ
  FreeResolution res_;
  struct RowCache;
  std::shared_ptr<RowCache> rows_;
};

// ---------------------------------------------------------- ModuleComplex

/// A chain complex whose terms carry module structures and whose
/// differentials are module maps. Degree −1 may hold the augmentation target.
struct ModuleComplex {
  ChainComplex complex;
  std::map<int, Representation> modules;

  /// Throws unless every differential commutes with the generator actions.
  void check() const;
};

/// Underlying k-linear complex of a resolution over a finite ring, augmented
/// by A in degree −1, degrees 0..max_degree; coordinates gen * dim U + u.
ModuleComplex evaluate(const FreeResolution& p, std::size_t max_degree);

struct TensorResolution {
  ModuleComplex complex;
  struct Block {
    int i;
    int j;
    std::size_t offset;
    TensorModule product;
  };
  std::map<int, std::vector<Block>> blocks;
};

/// Tot(P ⊗_A P) with the diagonal action, augmented by A ⊗_A A ≅ A.
TensorResolution tensor_resolution(const ModuleComplex& p, std::size_t max_degree);

// ------------------------------------------------------------- chain maps

/// Components P_{shift+k} → Q_k on generators: images[k][s] = Σ coef · e_t.
struct ChainLift {
  std::size_t shift = 0;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Elem>>>> images;
};

/// Lifts the cochain P_m → A with the given values on generators to a chain
/// map P → Tᵐ Q, i.e. d φ_k = (−1)ᵐ φ_{k−1} d, for k = 0..depth. With m = 0
/// and values f(ε(e_j)) this is the comparison map over f.
ChainLift lift_chain_map(const FreeResolution& p, const FreeResolution& q, std::size_t m,
                         const std::vector<Vector>& values, std::size_t depth);

/// Images of generators of P_n in Q_n (k-level), lifting f : A → Q_{−1}.
std::vector<std::vector<Vector>> lift_to_module_complex(const FreeResolution& p, const ModuleComplex& q,
                                                        const Matrix& f, std::size_t max_degree);

/// Applies a lift component to an element Σ x_s e_s of P_{shift+k}.
std::vector<Elem> apply_lift(const RingPtr& ring, const ChainLift& f, std::size_t k, const std::vector<Elem>& x);

// --------------------------------------------------------------- diagonal

/// coef · (b_left_basis e_left_gen) ⊗ (b_right_basis e_right_gen) in
/// P_left_degree ⊗_A P_{n − left_degree}.
struct DiagonalTerm {
  Scalar coef;
  std::size_t left_degree;
  std::size_t left_gen;
  std::size_t left_basis;
  std::size_t right_gen;
  std::size_t right_basis;
};

/// A chain map P → Tot(P ⊗_A P) over id_A, on generators: terms[n][s].
struct Diagonal {
  std::vector<std::vector<std::vector<DiagonalTerm>>> terms;
  std::size_t depth() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Diagonal of a resolution over a finite ring, by lifting id_A into
/// tensor_resolution degree by degree.
Diagonal lift_diagonal(const FreeResolution& p, std::size_t max_degree);

/// Checks d∘Δ = Δ∘d as identities in P ⊗ P and (ε⊗ε)Δ_0 = ε; only for
/// A = k, where P ⊗_A P = P ⊗_k P.
bool is_diagonal(const FreeResolution& p, const Diagonal& diag, std::string* witness = nullptr);

}  // namespace xah

#endif
