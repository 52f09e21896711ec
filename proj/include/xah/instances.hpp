#ifndef XAH_INSTANCES_HPP
#define XAH_INSTANCES_HPP

// The built-in catalog: group algebras, Sweedler's algebra, enveloping
// algebras Aᵉ, U(g) for small g, and a bialgebra whose Galois map is not
// invertible.

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "xah/lie.hpp"

namespace xah {

class UnknownInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  enum class Kind { Finite, Lie, NonHopf };

  std::string id;
  std::string description;
  Kind kind = Kind::Finite;
  /// Finite and NonHopf
  BialgebroidPtr bialgebroid;
  /// Finite only
  std::shared_ptr<const HopfStructure> hopf;
  /// FinDimHopfRing or PBWRing
  RingPtr ring;
  /// Lie only
  LiePtr lie;
  PBWPtr pbw;
  std::vector<std::string> modules;

  bool finite() const { return kind == Kind::Finite; }
};

/// Catalog ids in a fixed order.
const std::vector<std::string>& instance_ids();
/// Built on first use; throws UnknownInstance.
const Instance& instance(const std::string& id);

/// Named left module of an instance ("trivial" is always A); throws
/// UnknownInstance for names outside Instance::modules.
Representation instance_module(const Instance& inst, const std::string& name);
/// Right module counterpart: "trivial" is A with its right action (a·(x⊗y) =
/// yax for Aᵉ, the counit when A = k); other finite modules are transposed,
/// g-modules use m·x = −xm.
Representation instance_right_module(const Instance& inst, const std::string& name);

LiePtr abelian_lie(std::size_t dim);
LiePtr nonabelian2_lie();
LiePtr sl2_lie();

/// Group algebra of a permutation group given by its elements (identity first).
BialgebroidPtr group_algebra(const std::vector<std::vector<std::size_t>>& elements,
                             const std::vector<std::string>& labels);
/// Aᵉ as a ×_A-bialgebra over A.
BialgebroidPtr enveloping_bialgebroid(const AlgebraPtr& a);

AlgebraPtr dual_numbers();
AlgebraPtr split_pair();
AlgebraPtr upper_triangular2();

/// Counit, coassociativity, multiplicativity of Δ and (Sch1), (Sch2), (Sch4),
/// (Sch5) on all PBW monomials of degree ≤ max_degree (products included).
/// Over A = k the Takeuchi conditions reduce to these.
CheckReport check_pbw_hopf(const PBWRing& u, std::size_t max_degree);

nlohmann::json algebra_json(const FinDimAlgebra& a);
nlohmann::json instance_json(const Instance& inst);

}  // namespace xah

#endif
