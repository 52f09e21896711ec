#ifndef XAH_RING_HPP
#define XAH_RING_HPP

// The rings the resolution machinery computes over. A ring has a countable
// basis with a filtration degree (always 0 in the finite-dimensional case),
// together with the ×_A-Hopf data the products need: A as a left module,
// source and target maps, and k-level lifts of Δ and of the translation map.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "xah/algebra.hpp"
#include "xah/bialgebroid.hpp"

namespace xah {

/// Sparse coordinates over a ring basis.
using Elem = std::map<std::size_t, Scalar>;

Elem basis_elem(std::size_t b, const Scalar& c = Scalar(1));
void add_to(Elem& y, const Scalar& c, const Elem& x);
Elem scaled(const Elem& x, const Scalar& c);
bool is_zero(const Elem& x);
Elem to_elem(const Vector& v);

/// c · b_left ⊗ b_right
struct Term {
  Scalar coef;
  std::size_t left;
  std::size_t right;
};

class Representation;

class HopfRing : public std::enable_shared_from_this<HopfRing> {
 public:
  virtual ~HopfRing() = default;

  virtual std::string name() const = 0;
  virtual bool finite() const = 0;
  /// Basis elements of degree ≤ max_degree are exactly the indices below this.
  virtual std::size_t basis_size(std::size_t max_degree) const = 0;
  virtual std::size_t degree(std::size_t b) const = 0;
  virtual std::string label(std::size_t b) const = 0;
  virtual Elem one() const = 0;
  virtual Elem multiply_basis(std::size_t i, std::size_t j) const = 0;
  /// Algebra generators, and any basis element as an ordered product of them.
  virtual const std::vector<std::size_t>& generators() const = 0;
  virtual std::vector<std::size_t> factors(std::size_t b) const = 0;

  virtual std::size_t base_dim() const = 0;
  virtual Vector base_unit() const = 0;
  /// Action of a generator on A.
  virtual Matrix base_action(std::size_t generator) const = 0;
  /// η(a ⊗ 1) and η(1 ⊗ a).
  virtual Elem source(const Vector& a) const = 0;
  virtual Elem target(const Vector& a) const = 0;
  virtual std::vector<Term> coproduct(std::size_t b) const = 0;
  /// b₊ ⊗ b₋
  virtual std::vector<Term> translation(std::size_t b) const = 0;

  /// Throws AlgebraError unless the generator matrices define a module.
  virtual void validate(const Representation& m) const = 0;

  Elem multiply(const Elem& x, const Elem& y) const;
  std::size_t max_degree(const Elem& x) const;
  std::shared_ptr<const HopfRing> ptr() const { return shared_from_this(); }
};

using RingPtr = std::shared_ptr<const HopfRing>;

/// A finite-dimensional module given by the action of the ring generators.
class Representation {
 public:
  Representation() = default;
  Representation(RingPtr ring, Side side, std::size_t dim, std::map<std::size_t, Matrix> generator_action,
                 std::string name = {});

  const RingPtr& ring() const { return ring_; }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::map<std::size_t, Matrix>& generator_action() const { return gens_; }

  Matrix act_basis(std::size_t b) const;
  Matrix act(const Elem& u) const;
  Vector apply(const Elem& u, const Vector& v) const { return act(u).apply(v); }

 private:
  struct Cache {
    std::mutex lock;
    std::map<std::size_t, Matrix> basis;
  };
  RingPtr ring_;
  Side side_ = Side::Left;
  std::size_t dim_ = 0;
  std::map<std::size_t, Matrix> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// A as a left module.
Representation base_module(const RingPtr& ring);
/// The same space with the transposed action, on the other side.
Representation transpose_module(const Representation& m);
/// The dual right module Hom(M, k) of a left module, and vice versa.
inline Representation dual_module(const Representation& m) { return transpose_module(m); }

struct TensorModule {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  QuotientSpace space;
  Representation module;

  std::size_t dim() const { return space.dim(); }
  Vector pure(const Vector& m, const Vector& n) const;
};

/// M ⊗_A N for left modules, u(m⊗n) = u₍₁₎m ⊗ u₍₂₎n.
TensorModule tensor_left(const Representation& m, const Representation& n);
/// M ⊗_A P for a left module M and a right module P, (m⊗p)u = u₋m ⊗ pu₊.
TensorModule tensor_right(const Representation& m, const Representation& p);
/// a ⊗ m ↦ η(a⊗1)m on A ⊗_A M.
Matrix left_unitor(const TensorModule& a_tensor_m, const Representation& m);
/// a ⊗ p ↦ a ▶ p = p η(1⊗a) on the right module A ⊗_A P.
Matrix right_module_unitor(const TensorModule& a_tensor_p, const Representation& p);

/// A finite-dimensional ×_A-Hopf algebra as a ring.
class FinDimHopfRing : public HopfRing {
 public:
  explicit FinDimHopfRing(std::shared_ptr<const HopfStructure> h, std::string name);

  std::string name() const override { return name_; }
  bool finite() const override { return true; }
  std::size_t basis_size(std::size_t) const override { return dim_; }
  std::size_t degree(std::size_t) const override { return 0; }
  std::string label(std::size_t b) const override;
  Elem one() const override;
  Elem multiply_basis(std::size_t i, std::size_t j) const override;
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::vector<std::size_t> factors(std::size_t b) const override { return {b}; }
  std::size_t base_dim() const override;
  Vector base_unit() const override;
  Matrix base_action(std::size_t generator) const override;
  Elem source(const Vector& a) const override;
  Elem target(const Vector& a) const override;
  std::vector<Term> coproduct(std::size_t b) const override;
  std::vector<Term> translation(std::size_t b) const override;
  void validate(const Representation& m) const override;

  const HopfStructure& hopf() const { return *h_; }
  std::size_t dim() const { return dim_; }

 private:
  std::shared_ptr<const HopfStructure> h_;
  std::string name_;
  std::size_t dim_;
  std::vector<std::size_t> gens_;
};

std::shared_ptr<const FinDimHopfRing> make_ring(const HopfStructure& h, std::string name);
Representation from_module(const RingPtr& ring, const ModuleRep& m, std::string name = {});
/// The module as a ModuleRep over U; only for finite rings.
ModuleRep to_module(const Representation& m);
/// U acting on itself by left or right multiplication; only for finite rings.
Representation regular_representation(const RingPtr& ring, Side side);

}  // namespace xah

#endif
