#include "xah/bialgebroid.hpp"

#include <utility>

namespace xah {

namespace {

// Ambient operator u⊗v ↦ Σ Δ(u)·(1⊗v) on U⊗U (the Galois map before descent).
Matrix beta_ambient(const BialgebroidData& d) {
  const std::size_t n = d.dim_u();
  Matrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector di = d.delta_lift().col(i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = di[p * n + q];
          if (sgn(c) == 0) continue;
          const Vector& qj = d.U().basis_product(q, j);
          for (std::size_t r = 0; r < n; ++r)
            if (sgn(qj[r]) != 0) out(p * n + r, i * n + j) += c * qj[r];
        }
  }
  return out;
}

// Componentwise product of two k-level tensors in U ⊗ U, with the second
// factor multiplied in the given order (reversed when twisted).
Vector tensor_product(const FinDimAlgebra& u, const Vector& x, const Vector& y, bool twisted) {
  const std::size_t n = u.dim();
  Vector out(n * n, Scalar(0));
  for (std::size_t a = 0; a < n * n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < n * n; ++b) {
      if (sgn(y[b]) == 0) continue;
      Scalar c = x[a] * y[b];
      const Vector& first = u.basis_product(a / n, b / n);
      const Vector& second = twisted ? u.basis_product(b % n, a % n) : u.basis_product(a % n, b % n);
      for (std::size_t p = 0; p < n; ++p) {
        if (sgn(first[p]) == 0) continue;
        for (std::size_t q = 0; q < n; ++q)
          if (sgn(second[q]) != 0) out[p * n + q] += c * first[p] * second[q];
      }
    }
  }
  return out;
}

// U ⊗ U ⊗ U modulo two families of relations, built as an iterated quotient.
// Not outer_first: (U◁ ⊗ ▷U) ⊗ X with a ∈ A acting by ◁ on the middle factor
// against on_third on the last. outer_first: U ⊗ (U◁ ⊗ ▷U) with on_first on
// the first factor against ◁ on the last.
struct Triple {
  std::size_t nu;
  bool outer_first;
  Matrix inner_projection;
  TensorOver outer;

  Vector project(const Vector& v) const {
    const std::size_t q = inner_projection.rows();
    Vector w(nu * q, Scalar(0));
    Vector slice(nu * nu);
    for (std::size_t k = 0; k < nu; ++k) {
      for (std::size_t m = 0; m < nu * nu; ++m) slice[m] = outer_first ? v[k * nu * nu + m] : v[m * nu + k];
      if (is_zero(slice)) continue;
      Vector p = inner_projection.apply(slice);
      for (std::size_t r = 0; r < q; ++r) (outer_first ? w[k * q + r] : w[r * nu + k]) = p[r];
    }
    return outer.space.project(w);
  }
};

Triple triple_tensor(const BialgebroidData& d, const std::vector<Matrix>& outer_action, bool outer_first) {
  const std::size_t nu = d.dim_u();
  const TensorOver& inner = d.u_tensor_a_u();
  Matrix id = Matrix::identity(nu);
  std::vector<Matrix> induced;
  for (const Matrix& t : d.actions().tri_right) {
    auto m = induced_map(kron(id, t), inner.space, inner.space);
    if (!m) throw NotWellDefined("◁ does not descend to U ⊗_A U");
    induced.push_back(*m);
  }
  TensorOver outer = outer_first ? balanced_tensor(nu, inner.dim(), outer_action, induced)
                                 : balanced_tensor(inner.dim(), nu, induced, outer_action);
  return Triple{nu, outer_first, inner.space.projection_matrix(), std::move(outer)};
}

Vector pure_tensor(const Vector& x, const Vector& y) {
  Vector v(x.size() * y.size(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) v[i * y.size() + j] = x[i] * y[j];
  }
  return v;
}

// Σ D_pq(u) (f_p ⊗ g_q) as an operator, for D the k-level lift of some
// two-tensor-valued map evaluated at u.
Matrix sum_kron(const Vector& tensor, std::size_t n, const std::vector<Matrix>& f, const std::vector<Matrix>& g) {
  Matrix out(f.front().rows() * g.front().rows(), f.front().cols() * g.front().cols());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& c = tensor[p * n + q];
      if (sgn(c) != 0) out = out + c * kron(f[p], g[q]);
    }
  return out;
}

std::string label(const FinDimAlgebra& a, std::size_t i) { return a.labels()[i]; }

}  // namespace

// ------------------------------------------------------- BialgebroidData

BialgebroidData::BialgebroidData(AlgebraPtr u, AlgebraPtr a, Matrix eta, Matrix delta_lift,
                                 std::vector<Matrix> epsilon_hat)
    : u_(std::move(u)), a_(std::move(a)), eta_(std::move(eta)), eps_hat_(std::move(epsilon_hat)) {
  const std::size_t nu = u_->dim(), na = a_->dim();
  if (eta_.rows() != nu || eta_.cols() != na * na) throw AlgebraError("eta: expected dimU × dimA^2");
  if (delta_lift.rows() != nu * nu || delta_lift.cols() != nu) throw AlgebraError("Delta: expected dimU^2 × dimU");

  // η must be a unital algebra map A ⊗ A^op → U.
  AlgebraPtr ae = enveloping(*a_);
  if (eta_.apply(ae->unit()) != u_->unit()) throw AlgebraError("eta is not unital");
  for (std::size_t i = 0; i < ae->dim(); ++i)
    for (std::size_t j = 0; j < ae->dim(); ++j)
      if (u_->multiply(eta_.col(i), eta_.col(j)) != eta_.apply(ae->basis_product(i, j)))
        throw AlgebraError("eta is not multiplicative at (" + ae->labels()[i] + ", " + ae->labels()[j] + ")");

  base_module_ = std::make_shared<ModuleRep>(u_, Side::Left, eps_hat_);
  actions_ = build_actions(*this);
  uau_ = balanced_tensor(nu, nu, actions_.tri_right, actions_.tri_left);

  delta_ = Matrix(uau_.dim(), nu);
  delta_lift_ = Matrix(nu * nu, nu);
  for (std::size_t i = 0; i < nu; ++i) {
    Vector c = uau_.space.project(delta_lift.col(i));
    delta_.set_col(i, c);
    delta_lift_.set_col(i, uau_.space.lift(c));
  }
}

Vector BialgebroidData::eta_of(const Vector& a, const Vector& b) const { return eta_.apply(pure_tensor(a, b)); }

Vector BialgebroidData::counit(const Vector& u) const { return base_module_->act(u).apply(a_->unit()); }

FourActions build_actions(const BialgebroidData& d) {
  FourActions f;
  for (std::size_t i = 0; i < d.dim_a(); ++i) {
    Vector a = d.A().basis_vector(i);
    Vector s = d.source(a);
    Vector t = d.target(a);
    f.tri_left.push_back(d.U().left_mult(s));
    f.tri_right.push_back(d.U().left_mult(t));
    f.full_left.push_back(d.U().right_mult(t));
    f.full_right.push_back(d.U().right_mult(s));
  }
  return f;
}

// ----------------------------------------------------------- CheckReport

void CheckReport::add(std::string name, bool pass, std::string witness) {
  items.push_back({std::move(name), pass, std::move(witness)});
}

bool CheckReport::all_pass() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  std::size_t f = 0;
  for (const auto& i : items)
    if (!i.pass) ++f;
  return f;
}

// -------------------------------------------------------- check_takeuchi

Subspace takeuchi_centralizer(const BialgebroidData& d) {
  const std::size_t nu = d.dim_u();
  const auto& q = d.u_tensor_a_u();
  Matrix id = Matrix::identity(nu);
  // Stack (a▶ ⊗ 1 − 1 ⊗ ◀a) over a, descended to the quotient, and take the kernel.
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < d.dim_a(); ++a) {
    Matrix op = kron(d.actions().full_left[a], id) - kron(id, d.actions().full_right[a]);
    auto ind = induced_map(op, q.space, q.space);
    if (!ind) throw NotWellDefined("centralizer operator does not descend to U ⊗_A U");
    for (std::size_t r = 0; r < ind->rows(); ++r) rows.push_back(ind->row(r));
  }
  if (rows.empty()) return Subspace::full(q.dim());
  return kernel(Matrix::from_rows(rows, q.dim()));
}

CheckReport check_takeuchi(const BialgebroidData& d) {
  CheckReport rep;
  const FinDimAlgebra& U = d.U();
  const FinDimAlgebra& A = d.A();
  const std::size_t nu = d.dim_u(), na = d.dim_a();
  const auto& q = d.u_tensor_a_u();
  Subspace centre = takeuchi_centralizer(d);

  for (std::size_t i = 0; i < nu; ++i)
    rep.add("centralizer(" + label(U, i) + ")", centre.contains(d.delta().col(i)));

  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      Vector lhs = q.space.project(d.delta_of(U.basis_product(i, j)));
      Vector rhs = q.space.project(tensor_product(U, d.delta_lift().col(i), d.delta_lift().col(j), false));
      if (lhs != rhs) {
        rep.add("delta multiplicative", false, label(U, i) + "*" + label(U, j));
        goto after_mult;
      }
    }
  rep.add("delta multiplicative", true);
after_mult:

  {
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < na && ok; ++a)
      for (std::size_t b = 0; b < na && ok; ++b) {
        Vector ea = A.basis_vector(a), eb = A.basis_vector(b);
        Vector lhs = q.space.project(d.delta_of(d.eta_of(ea, eb)));
        Vector rhs = q.pure(d.source(ea), d.target(eb));
        if (lhs != rhs) {
          ok = false;
          witness = "eta(" + label(A, a) + "⊗" + label(A, b) + ")";
        }
      }
    rep.add("delta over A^e", ok, witness);
  }

  {
    // ε̂(η(a⊗b)) = (c ↦ a c b); multiplicativity of ε̂ is the module axiom
    // enforced at construction.
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < na && ok; ++a)
      for (std::size_t b = 0; b < na && ok; ++b) {
        Matrix lhs = d.base_module().act(d.eta_of(A.basis_vector(a), A.basis_vector(b)));
        Matrix rhs = A.left_mult(a) * A.right_mult(b);
        if (!(lhs == rhs)) {
          ok = false;
          witness = "eta(" + label(A, a) + "⊗" + label(A, b) + ")";
        }
      }
    rep.add("epsilon_hat over A^e", ok, witness);
    rep.add("epsilon_hat multiplicative", true);
  }

  {
    // Coassociativity in (U ⊗_A U) ⊗_A U.
    Triple triple = triple_tensor(d, d.actions().tri_left, false);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < nu && ok; ++i) {
      Vector dl = d.delta_lift().col(i);
      Vector left(nu * nu * nu, Scalar(0)), right(nu * nu * nu, Scalar(0));
      for (std::size_t p = 0; p < nu; ++p)
        for (std::size_t r = 0; r < nu; ++r) {
          const Scalar& c = dl[p * nu + r];
          if (sgn(c) == 0) continue;
          axpy(left, c, pure_tensor(d.delta_lift().col(p), U.basis_vector(r)));
          axpy(right, c, pure_tensor(U.basis_vector(p), d.delta_lift().col(r)));
        }
      if (triple.project(left) != triple.project(right)) {
        ok = false;
        witness = label(U, i);
      }
    }
    rep.add("coassociative", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < nu && ok; ++i) {
      Vector dl = d.delta_lift().col(i);
      Vector left(nu, Scalar(0)), right(nu, Scalar(0));
      for (std::size_t p = 0; p < nu; ++p)
        for (std::size_t r = 0; r < nu; ++r) {
          const Scalar& c = dl[p * nu + r];
          if (sgn(c) == 0) continue;
          // ε(b_p) ▷ b_r and b_p ◁ ε(b_r)
          axpy(left, c, U.multiply(d.source(d.counit(U.basis_vector(p))), U.basis_vector(r)));
          axpy(right, c, U.multiply(d.target(d.counit(U.basis_vector(r))), U.basis_vector(p)));
        }
      if (left != U.basis_vector(i) || right != U.basis_vector(i)) {
        ok = false;
        witness = label(U, i);
      }
    }
    rep.add("counital", ok, witness);
  }
  return rep;
}

// ------------------------------------------------------------ galois_map

HopfStructure galois_map(BialgebroidPtr data) {
  const BialgebroidData& d = *data;
  const std::size_t nu = d.dim_u();
  HopfStructure h;
  h.parent_ = data;
  h.domain_ = balanced_tensor(nu, nu, d.actions().full_left, d.actions().tri_right);
  auto beta = induced_map(beta_ambient(d), h.domain_.space, d.u_tensor_a_u().space);
  if (!beta) throw NotWellDefined("Galois map does not descend to the balanced tensor products");
  h.beta_ = *beta;
  auto inv = inverse(h.beta_);
  if (!inv)
    throw NotInvertible("Galois map has rank " + std::to_string(rank(h.beta_)) + " on spaces of dimension " +
                        std::to_string(h.domain_.dim()) + " and " + std::to_string(d.u_tensor_a_u().dim()));
  h.beta_inv_ = *inv;
  h.translation_ = Matrix(h.domain_.dim(), nu);
  h.translation_lift_ = Matrix(nu * nu, nu);
  for (std::size_t i = 0; i < nu; ++i) {
    Vector t = h.beta_inv_.apply(d.u_tensor_a_u().pure(d.U().basis_vector(i), d.U().unit()));
    h.translation_.set_col(i, t);
    h.translation_lift_.set_col(i, h.domain_.space.lift(t));
  }
  return h;
}

// ----------------------------------------------------- check_schauenburg

CheckReport check_schauenburg(const HopfStructure& h) {
  CheckReport rep;
  const BialgebroidData& d = h.parent();
  const FinDimAlgebra& U = d.U();
  const FinDimAlgebra& A = d.A();
  const std::size_t nu = d.dim_u(), na = d.dim_a();
  const auto& dom = h.galois_domain();
  const auto& uau = d.u_tensor_a_u();
  Matrix beta_amb = beta_ambient(d);

  auto run = [&](const std::string& name, auto&& pred) {
    for (std::size_t i = 0; i < nu; ++i)
      if (!pred(i)) {
        rep.add(name, false, label(U, i));
        return;
      }
    rep.add(name, true);
  };

  // u₊₍₁₎ ⊗ u₊₍₂₎u₋ = u ⊗ 1
  run("Sch1", [&](std::size_t i) {
    Vector lhs = uau.space.project(beta_amb.apply(h.translation_lift().col(i)));
    return lhs == uau.pure(U.basis_vector(i), U.unit());
  });

  // u₍₁₎₊ ⊗ u₍₁₎₋u₍₂₎ = u ⊗ 1
  run("Sch2", [&](std::size_t i) {
    Vector dl = d.delta_lift().col(i);
    Vector acc(nu * nu, Scalar(0));
    for (std::size_t p = 0; p < nu; ++p)
      for (std::size_t r = 0; r < nu; ++r) {
        const Scalar& c = dl[p * nu + r];
        if (sgn(c) == 0) continue;
        axpy(acc, c, tensor_product(U, h.translation_lift().col(p), pure_tensor(U.unit(), U.basis_vector(r)), false));
      }
    return dom.space.project(acc) == dom.pure(U.basis_vector(i), U.unit());
  });

  // u₊ ⊗ u₋ ∈ U ×_{A^op} U
  {
    Matrix id = Matrix::identity(nu);
    std::vector<Matrix> ops;
    for (std::size_t a = 0; a < na; ++a)
      ops.push_back(kron(d.actions().tri_right[a], id) - kron(id, d.actions().full_left[a]));
    run("Sch3", [&](std::size_t i) {
      for (const auto& op : ops)
        if (!is_zero(dom.space.project(op.apply(h.translation_lift().col(i))))) return false;
      return true;
    });
  }

  // u₊ ⊗ u₋₍₁₎ ⊗ u₋₍₂₎ = u₊₊ ⊗ u₋ ⊗ u₊₋ ; A^op links factors 1 and 3, A links 2 and 3.
  {
    Triple triple = triple_tensor(d, d.actions().full_left, true);
    run("Sch37", [&](std::size_t i) {
      Vector t = h.translation_lift().col(i);
      Vector lhs(nu * nu * nu, Scalar(0)), rhs(nu * nu * nu, Scalar(0));
      for (std::size_t p = 0; p < nu; ++p)
        for (std::size_t r = 0; r < nu; ++r) {
          const Scalar& c = t[p * nu + r];
          if (sgn(c) == 0) continue;
          axpy(lhs, c, pure_tensor(U.basis_vector(p), d.delta_lift().col(r)));
          Vector tp = h.translation_lift().col(p);
          for (std::size_t x = 0; x < nu; ++x)
            for (std::size_t z = 0; z < nu; ++z) {
              const Scalar& c2 = tp[x * nu + z];
              if (sgn(c2) == 0) continue;
              rhs[(x * nu + r) * nu + z] += c * c2;
            }
        }
      return triple.project(lhs) == triple.project(rhs);
    });
  }

  // (uv)₊ ⊗ (uv)₋ = u₊v₊ ⊗ v₋u₋ on all basis pairs
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < nu && ok; ++i)
      for (std::size_t j = 0; j < nu && ok; ++j) {
        Vector lhs = dom.space.project(h.translation_of(U.basis_product(i, j)));
        Vector rhs = dom.space.project(
            tensor_product(U, h.translation_lift().col(i), h.translation_lift().col(j), true));
        if (lhs != rhs) {
          ok = false;
          witness = label(U, i) + "*" + label(U, j);
        }
      }
    rep.add("Sch4", ok, witness);
  }

  // η(a⊗b)₊ ⊗ η(a⊗b)₋ = η(a⊗1) ⊗ η(b⊗1)
  {
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < na && ok; ++a)
      for (std::size_t b = 0; b < na && ok; ++b) {
        Vector ea = A.basis_vector(a), eb = A.basis_vector(b);
        Vector lhs = dom.space.project(h.translation_of(d.eta_of(ea, eb)));
        if (lhs != dom.pure(d.source(ea), d.source(eb))) {
          ok = false;
          witness = "eta(" + label(A, a) + "⊗" + label(A, b) + ")";
        }
      }
    rep.add("Sch5", ok, witness);
  }
  return rep;
}

// ---------------------------------------------------------- module products

ModuleProduct module_tensor_left(const BialgebroidData& d, const ModuleRep& m, const ModuleRep& n) {
  if (m.side() != Side::Left || n.side() != Side::Left) throw AlgebraError("module_tensor_left: need left modules");
  const std::size_t na = d.dim_a(), nu = d.dim_u();
  std::vector<Matrix> on_m, on_n;
  for (std::size_t a = 0; a < na; ++a) {
    on_m.push_back(m.act(d.target(d.A().basis_vector(a))));  // m ◁ a
    on_n.push_back(n.act(d.source(d.A().basis_vector(a))));  // a ▷ n
  }
  TensorOver space = balanced_tensor(m.dim(), n.dim(), on_m, on_n);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < nu; ++i) {
    Matrix amb = sum_kron(d.delta_lift().col(i), nu, m.actions(), n.actions());
    auto ind = induced_map(amb, space.space, space.space);
    if (!ind) throw NotWellDefined("U-action via Delta does not descend to M ⊗_A N at " + label(d.U(), i));
    action.push_back(*ind);
  }
  return ModuleProduct{space, ModuleRep(d.U_ptr(), Side::Left, std::move(action))};
}

ModuleProduct module_tensor_right(const HopfStructure& h, const ModuleRep& m, const ModuleRep& p) {
  if (m.side() != Side::Left || p.side() != Side::Right)
    throw AlgebraError("module_tensor_right: need a left module and a right module");
  const BialgebroidData& d = h.parent();
  const std::size_t na = d.dim_a(), nu = d.dim_u();
  std::vector<Matrix> on_m, on_p;
  for (std::size_t a = 0; a < na; ++a) {
    Vector t = d.target(d.A().basis_vector(a));
    on_m.push_back(m.act(t));  // m ◁ a
    on_p.push_back(p.act(t));  // a ▶ p = p η(1⊗a)
  }
  TensorOver space = balanced_tensor(m.dim(), p.dim(), on_m, on_p);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < nu; ++i) {
    // (m ⊗ p) u = u₋ m ⊗ p u₊ ; translation lift index is (plus, minus).
    Vector t = h.translation_lift().col(i);
    Matrix amb(m.dim() * p.dim(), m.dim() * p.dim());
    for (std::size_t x = 0; x < nu; ++x)
      for (std::size_t y = 0; y < nu; ++y) {
        const Scalar& c = t[x * nu + y];
        if (sgn(c) != 0) amb = amb + c * kron(m.action(y), p.action(x));
      }
    auto ind = induced_map(amb, space.space, space.space);
    if (!ind) throw NotWellDefined("right U-action does not descend to M ⊗_A P at " + label(d.U(), i));
    action.push_back(*ind);
  }
  return ModuleProduct{space, ModuleRep(d.U_ptr(), Side::Right, std::move(action))};
}

Isomorphism tensor_flip(const HopfStructure& h, const ModuleRep& m, const ModuleRep& p, const ModuleRep& n) {
  ModuleProduct mp = module_tensor_right(h, m, p);
  TensorOver source = tensor_over(mp.module, n);
  ModuleProduct nm = module_tensor_left(h.parent(), n, m);
  TensorOver target = tensor_over(p, nm.module);

  const std::size_t dn = n.dim(), dm = m.dim(), dp = p.dim();
  Matrix amb(target.left_dim * target.right_dim, source.left_dim * source.right_dim);
  for (std::size_t x = 0; x < mp.space.dim(); ++x) {
    std::size_t idx = mp.space.space.representative_indices()[x];
    std::size_t mi = idx / dp, pi = idx % dp;
    for (std::size_t ni = 0; ni < dn; ++ni) {
      Vector nmv = nm.space.pure(unit_vector(dn, ni), unit_vector(dm, mi));
      for (std::size_t y = 0; y < nmv.size(); ++y)
        if (sgn(nmv[y]) != 0) amb(pi * target.right_dim + y, x * dn + ni) = nmv[y];
    }
  }
  auto fwd = induced_map(amb, source.space, target.space);
  if (!fwd) throw NotWellDefined("tensor flip does not descend");
  auto inv = inverse(*fwd);
  if (!inv) throw NotInvertible("tensor flip is not bijective");
  return Isomorphism{*fwd, *inv};
}

GaloisModule galois_module(const HopfStructure& h, const ModuleRep& m) {
  const BialgebroidData& d = h.parent();
  const std::size_t nu = d.dim_u(), na = d.dim_a();
  std::vector<Matrix> on_u, on_m;
  for (std::size_t a = 0; a < na; ++a) {
    on_u.push_back(d.actions().full_left[a]);             // a ▶ u
    on_m.push_back(m.act(d.target(d.A().basis_vector(a))));  // m ◁ a
  }
  TensorOver domain = balanced_tensor(nu, m.dim(), on_u, on_m);
  std::vector<Matrix> dom_action;
  Matrix idm = Matrix::identity(m.dim());
  for (std::size_t i = 0; i < nu; ++i) {
    auto ind = induced_map(kron(d.U().left_mult(i), idm), domain.space, domain.space);
    if (!ind) throw NotWellDefined("left multiplication does not descend to ▶U ⊗_{A^op} M◁");
    dom_action.push_back(*ind);
  }
  ModuleRep dom_module(d.U_ptr(), Side::Left, std::move(dom_action));
  ModuleProduct cod = module_tensor_left(d, regular_module(d.U_ptr(), Side::Left), m);

  const std::size_t dm = m.dim();
  Matrix fwd_amb(nu * dm, nu * dm), inv_amb(nu * dm, nu * dm);
  for (std::size_t i = 0; i < nu; ++i) {
    Vector dl = d.delta_lift().col(i);
    Vector tl = h.translation_lift().col(i);
    for (std::size_t j = 0; j < dm; ++j) {
      Vector f(nu * dm, Scalar(0)), g(nu * dm, Scalar(0));
      for (std::size_t p = 0; p < nu; ++p)
        for (std::size_t q = 0; q < nu; ++q) {
          if (sgn(dl[p * nu + q]) != 0)
            axpy(f, dl[p * nu + q], pure_tensor(unit_vector(nu, p), m.action(q).col(j)));
          if (sgn(tl[p * nu + q]) != 0)
            axpy(g, tl[p * nu + q], pure_tensor(unit_vector(nu, p), m.action(q).col(j)));
        }
      fwd_amb.set_col(i * dm + j, f);
      inv_amb.set_col(i * dm + j, g);
    }
  }
  auto fwd = induced_map(fwd_amb, domain.space, cod.space.space);
  auto inv = induced_map(inv_amb, cod.space.space, domain.space);
  if (!fwd || !inv) throw NotWellDefined("generalised Galois map does not descend");
  return GaloisModule{domain, std::move(dom_module), std::move(cod), Isomorphism{*fwd, *inv}};
}

Matrix left_unitor(const BialgebroidData& d, const ModuleRep& m, const ModuleProduct& am) {
  // a ⊗ m ↦ η(a⊗1) m
  const std::size_t na = d.dim_a(), dm = m.dim();
  Matrix amb(dm, na * dm);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix s = m.act(d.source(d.A().basis_vector(a)));
    for (std::size_t j = 0; j < dm; ++j) amb.set_col(a * dm + j, s.col(j));
  }
  auto ind = induced_map(amb, am.space.space, QuotientSpace(dm));
  if (!ind) throw NotWellDefined("left unitor does not descend");
  return *ind;
}

Matrix right_unitor(const BialgebroidData& d, const ModuleRep& m, const ModuleProduct& ma) {
  // m ⊗ a ↦ η(1⊗a) m
  const std::size_t na = d.dim_a(), dm = m.dim();
  Matrix amb(dm, dm * na);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix t = m.act(d.target(d.A().basis_vector(a)));
    for (std::size_t j = 0; j < dm; ++j) amb.set_col(j * na + a, t.col(j));
  }
  auto ind = induced_map(amb, ma.space.space, QuotientSpace(dm));
  if (!ind) throw NotWellDefined("right unitor does not descend");
  return *ind;
}

}  // namespace xah
