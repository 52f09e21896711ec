#include "doctest.h"
#include "xah/instances.hpp"

using namespace xah;

namespace {

bool associative(const FinDimAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vector l = a.multiply(a.multiply(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k));
        Vector r = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(k)));
        if (l != r) return false;
      }
  return true;
}

bool unital(const FinDimAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.multiply(a.unit(), a.basis_vector(i)) != a.basis_vector(i) ||
        a.multiply(a.basis_vector(i), a.unit()) != a.basis_vector(i))
      return false;
  return true;
}

std::vector<std::string> finite_ids() {
  std::vector<std::string> ids;
  for (const auto& id : instance_ids())
    if (instance(id).finite()) ids.push_back(id);
  return ids;
}

}  // namespace

TEST_CASE("catalog algebras are associative and unital") {
  for (const auto& id : instance_ids()) {
    const Instance& in = instance(id);
    if (in.kind == Instance::Kind::Lie) continue;
    CAPTURE(id);
    CHECK(associative(in.bialgebroid->U()));
    CHECK(unital(in.bialgebroid->U()));
    CHECK(associative(in.bialgebroid->A()));
  }
}

TEST_CASE("enveloping algebra multiplies as A ⊗ Aᵒᵖ") {
  AlgebraPtr a = upper_triangular2();
  AlgebraPtr e = enveloping(*a);
  const std::size_t n = a->dim();
  REQUIRE(e->dim() == n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t xp = 0; xp < n; ++xp)
        for (std::size_t yp = 0; yp < n; ++yp) {
          Vector lhs = e->multiply(e->basis_vector(x * n + y), e->basis_vector(xp * n + yp));
          Vector xx = a->multiply(a->basis_vector(x), a->basis_vector(xp));
          Vector yy = a->multiply(a->basis_vector(yp), a->basis_vector(y));
          Vector rhs(n * n, Scalar(0));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = xx[i] * yy[j];
          CHECK(lhs == rhs);
        }
}

TEST_CASE("Takeuchi and Schauenburg sweeps pass on every Hopf instance") {
  for (const auto& id : finite_ids()) {
    CAPTURE(id);
    const Instance& in = instance(id);
    CheckReport t = check_takeuchi(*in.bialgebroid);
    CheckReport s = check_schauenburg(*in.hopf);
    CHECK(t.all_pass());
    CHECK(s.all_pass());
    CHECK(t.items.size() > 0);
    CHECK(s.items.size() > 0);
  }
}

TEST_CASE("the negative control has a non-invertible Galois map") {
  const Instance& in = instance("neg-monoid");
  CHECK(check_takeuchi(*in.bialgebroid).all_pass());
  CHECK_THROWS_AS(galois_map(in.bialgebroid), NotInvertible);
}

TEST_CASE("group algebras translate g to g ⊗ g⁻¹") {
  for (std::string id : {"qz2", "qz3", "qs3"}) {
    const Instance& in = instance(id);
    const FinDimAlgebra& u = in.bialgebroid->U();
    const std::size_t n = u.dim();
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t inv = n;
      for (std::size_t h = 0; h < n; ++h)
        if (u.multiply(u.basis_vector(g), u.basis_vector(h)) == u.unit()) inv = h;
      REQUIRE(inv < n);
      CHECK(in.hopf->translation_of(u.basis_vector(g)) == unit_vector(n * n, g * n + inv));
    }
  }
}

TEST_CASE("Galois map and its inverse compose to the identity") {
  for (const auto& id : finite_ids()) {
    const HopfStructure& h = *instance(id).hopf;
    const std::size_t n = h.beta().cols();
    CHECK(h.beta() * h.beta_inverse() == Matrix::identity(n));
    CHECK(h.beta_inverse() * h.beta() == Matrix::identity(n));
  }
}

TEST_CASE("monoidal unit, tensor flip and Galois modules") {
  for (std::string id : {"sweedler", "ae-qeps", "ae-ut2", "qs3"}) {
    CAPTURE(id);
    const Instance& in = instance(id);
    const BialgebroidData& data = *in.bialgebroid;
    ModuleRep a = data.base_module();
    ModuleRep u_left = regular_module(data.U_ptr(), Side::Left);
    ModuleRep u_right = regular_module(data.U_ptr(), Side::Right);

    ModuleProduct am = module_tensor_left(data, a, u_left);
    Matrix unit = left_unitor(data, u_left, am);
    CHECK(unit.rows() == u_left.dim());
    CHECK(rank(unit) == u_left.dim());
    CHECK(am.space.dim() == u_left.dim());
    for (std::size_t i = 0; i < data.dim_u(); ++i) CHECK(unit * am.module.action(i) == u_left.action(i) * unit);

    ModuleProduct ma = module_tensor_left(data, u_left, a);
    CHECK(rank(right_unitor(data, u_left, ma)) == u_left.dim());

    Isomorphism flip = tensor_flip(*in.hopf, a, u_right, a);
    CHECK(flip.forward * flip.inverse == Matrix::identity(flip.forward.rows()));
    CHECK(flip.inverse * flip.forward == Matrix::identity(flip.forward.cols()));

    GaloisModule gm = galois_module(*in.hopf, a);
    CHECK(gm.beta.forward * gm.beta.inverse == Matrix::identity(gm.beta.forward.rows()));
    CHECK(gm.beta.inverse * gm.beta.forward == Matrix::identity(gm.beta.forward.cols()));
  }
}

TEST_CASE("right module product over U(g) follows (m ⊗ p)X = m ⊗ pX − Xm ⊗ p") {
  const Instance& in = instance("lie-nonabelian2");
  Representation m = instance_module(in, "adjoint");
  Representation p = instance_right_module(in, "coadjoint");
  TensorModule mp = tensor_right(m, p);
  REQUIRE(mp.dim() == m.dim() * p.dim());
  for (std::size_t g : in.ring->generators()) {
    Matrix expected = kron(Matrix::identity(m.dim()), p.act_basis(g)) - kron(m.act_basis(g), Matrix::identity(p.dim()));
    CHECK(mp.module.act_basis(g) == expected);
  }
}
