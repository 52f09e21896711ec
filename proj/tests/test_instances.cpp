#include <random>

#include "doctest.h"
#include "xah/instances.hpp"

using namespace xah;

namespace {

Elem random_elem(const PBWRing& u, std::mt19937& rng, std::size_t max_degree) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, u.basis_size(max_degree) - 1);
  Elem x;
  for (int k = 0; k < 3; ++k) {
    const std::size_t b = pick(rng);
    if (int c = coef(rng)) add_to(x, Scalar(c), basis_elem(b));
  }
  return x;
}

}  // namespace

TEST_CASE("catalog lists every instance once") {
  CHECK(instance_ids().size() == 12);
  for (const auto& id : instance_ids()) {
    const Instance& in = instance(id);
    CHECK(in.id == id);
    CHECK(in.modules.empty() == (in.kind == Instance::Kind::NonHopf));
    CHECK(instance_json(in)["id"] == id);
  }
  CHECK_THROWS_AS(instance("nope"), UnknownInstance);
  CHECK_THROWS_AS(instance_module(instance("qs3"), "nope"), UnknownInstance);
}

TEST_CASE("Lie algebra constructor rejects bad brackets") {
  Vector zero{0, 0}, x{1, 0};
  CHECK_THROWS(LieAlgebraData("bad", {"x", "y"}, {zero, x, x, zero}));
  CHECK_NOTHROW(LieAlgebraData("good", {"x", "y"}, {zero, x, Vector{-1, 0}, zero}));
}

TEST_CASE("PBW straightening in the nonabelian algebra") {
  const PBWRing& u = *instance("lie-nonabelian2").pbw;
  // [x, y] = y, so yx = xy − y
  Elem yx = u.word({1, 0});
  Elem expected = basis_elem(u.index_of({1, 1}));
  add_to(expected, Scalar(-1), basis_elem(u.generator(1)));
  CHECK(yx == expected);
}

TEST_CASE("abelian PBW product is polynomial multiplication") {
  const PBWRing& u = *instance("lie-abelian2").pbw;
  Elem p = u.multiply_basis(u.index_of({1, 2}), u.index_of({2, 0}));
  CHECK(p == basis_elem(u.index_of({3, 2})));
}

TEST_CASE("PBW multiplication is associative on random elements") {
  std::mt19937 rng(3);
  for (std::string id : {"lie-nonabelian2", "lie-sl2"}) {
    const PBWRing& u = *instance(id).pbw;
    for (int trial = 0; trial < 40; ++trial) {
      Elem a = random_elem(u, rng, 2), b = random_elem(u, rng, 2), c = random_elem(u, rng, 2);
      CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
    }
  }
}

TEST_CASE("PBW products beyond the bound overflow") {
  const PBWRing& u = *instance("lie-abelian1").pbw;
  const std::size_t top = u.index_of({unsigned(u.max_degree())});
  CHECK_THROWS_AS(u.multiply_basis(top, u.generator(0)), DegreeOverflow);
}

TEST_CASE("coproduct of x² is binomial") {
  const PBWRing& u = *instance("lie-abelian1").pbw;
  const std::size_t one = 0, x = u.index_of({1}), x2 = u.index_of({2});
  std::map<std::pair<std::size_t, std::size_t>, Scalar> got;
  for (const Term& t : u.coproduct(x2)) got[{t.left, t.right}] += t.coef;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> want{{{x2, one}, 1}, {{x, x}, 2}, {{one, x2}, 1}};
  CHECK(got == want);
}

TEST_CASE("translation of a generator is x ⊗ 1 − 1 ⊗ x") {
  const PBWRing& u = *instance("lie-sl2").pbw;
  auto gens = translation_map_ug(u);
  for (std::size_t i = 0; i < 3; ++i) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> got;
    for (const Term& t : gens[i]) got[{t.left, t.right}] += t.coef;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> want{{{u.generator(i), 0}, 1}, {{0, u.generator(i)}, -1}};
    CHECK(got == want);
  }
}

TEST_CASE("U(g) Hopf identities through degree 3") {
  for (std::string id : {"lie-abelian1", "lie-abelian2", "lie-nonabelian2", "lie-sl2"}) {
    CAPTURE(id);
    CheckReport r = check_pbw_hopf(*instance(id).pbw, 3);
    CHECK(r.all_pass());
  }
}

TEST_CASE("CE resolutions square to zero with binomial ranks") {
  for (std::string id : {"lie-abelian1", "lie-abelian2", "lie-nonabelian2", "lie-sl2"}) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    CHECK_NOTHROW(ce.resolution.check());
    const std::size_t d = in.lie->dim();
    CHECK(ce.resolution.complex.top() == d);
    std::size_t binom = 1;
    for (std::size_t n = 0; n <= d; ++n) {
      CHECK(ce.resolution.rank(n) == binom);
      binom = binom * (d - n) / (n + 1);
    }
    CHECK(is_diagonal(ce.resolution, ce_diagonal(ce)));
  }
}

TEST_CASE("g-modules are representations") {
  for (std::string id : {"lie-nonabelian2", "lie-sl2"}) {
    const Instance& in = instance(id);
    for (const auto& m : in.modules) {
      CHECK_NOTHROW(in.ring->validate(instance_module(in, m)));
      CHECK_NOTHROW(in.ring->validate(instance_right_module(in, m)));
    }
  }
}
