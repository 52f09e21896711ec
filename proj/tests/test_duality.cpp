#include "doctest.h"
#include "oracle.hpp"
#include "xah/duality.hpp"
#include "xah/instances.hpp"

using namespace xah;

TEST_CASE("dual bases of the trivial QS₃-module") {
  const Instance& in = instance("qs3");
  Representation a = base_module(in.ring);
  DualBases db = dual_bases(a);
  std::string witness;
  CHECK(check_dual_bases(db, &witness));
  CHECK(witness.empty());
  CHECK(db.astar.dim() == 1);
  // e¹ sends 1 to the averaging idempotent
  CHECK(db.evaluate(db.duals[0], Vector{1}) == Vector(6, Scalar(1, 6)));
}

TEST_CASE("dual bases of the regular module are e₁ = 1, e¹ = id") {
  const Instance& in = instance("qs3");
  Representation u = regular_representation(in.ring, Side::Left);
  const std::size_t n = u.dim();
  Vector one(n, Scalar(0));
  one[0] = 1;
  DualBases db = dual_bases(u, {one});
  CHECK(check_dual_bases(db));
  for (std::size_t i = 0; i < n; ++i) CHECK(db.evaluate(db.duals[0], unit_vector(n, i)) == unit_vector(n, i));
}

TEST_CASE("ω₀ does not depend on the generating set") {
  const Instance& in = instance("qs3");
  Representation a = base_module(in.ring);
  DualBases one = dual_bases(a), two = dual_bases(a, {Vector{3}, Vector{-1}}), three = dual_bases(a, {Vector{Scalar(2, 7)}});
  CHECK(one.omega == two.omega);
  CHECK(one.omega == three.omega);
  CHECK_FALSE(is_zero(one.omega));
}

TEST_CASE("dual numbers are not projective over their enveloping algebra") {
  CHECK_THROWS_AS(dual_bases(base_module(instance("ae-qeps").ring)), NotProjective);
  BarResolution bar(instance("ae-qeps").ring, 3);
  CHECK_THROWS_AS(detect_duality(bar.resolution()), NotDuality);
}

TEST_CASE("underived δ, ·•ω₀ and ·⌢ω₀ over QS₃") {
  const Instance& in = instance("qs3");
  DualBases db = dual_bases(base_module(in.ring));
  for (const auto& m : in.modules) {
    CAPTURE(m);
    LinearIso delta = delta_underived(instance_right_module(in, m), db);
    LinearIso bullet = bullet_omega_underived(instance_module(in, m), db);
    LinearIso cap = cap_omega_underived(instance_module(in, m), db);
    CHECK(delta.bijective);
    CHECK(bullet.bijective);
    CHECK(cap.bijective);
    const std::size_t invariants = m == "trivial" || m == "regular" ? 1 : 0;
    CHECK(bullet.forward.cols() == invariants);
    CHECK(cap.forward.cols() == invariants);
  }
  // Z/2 with the sign module: both sides vanish
  const Instance& z2 = instance("qz2");
  DualBases d2 = dual_bases(base_module(z2.ring));
  LinearIso sign = cap_omega_underived(instance_module(z2, "sign"), d2);
  CHECK(sign.forward.rows() == 0);
  CHECK(sign.forward.cols() == 0);
}

TEST_CASE("semisimple rings route to d = 0") {
  const Instance& in = instance("qs3");
  BarResolution bar(in.ring, 3);
  DualityData dd = detect_duality(bar.resolution());
  CHECK(dd.d == 0);
  REQUIRE(dd.underived);
  CHECK(dd.ext_dims == std::vector<std::size_t>{1, 0, 0});
  CHECK(check_double_dual(dd, base_module(in.ring)));
}

TEST_CASE("CE instances are duality modules of dimension dim g") {
  for (std::string id : {"lie-abelian1", "lie-abelian2", "lie-nonabelian2", "lie-sl2"}) {
    CAPTURE(id);
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    DualityData dd = detect_duality(ce.resolution);
    const std::size_t d = in.lie->dim();
    CHECK(dd.d == d);
    std::vector<std::size_t> expected(d + 1, 0);
    expected[d] = 1;
    CHECK(dd.ext_dims == expected);
    CHECK(dd.astar.dim() == 1);
    CHECK(dd.omega_class == Vector{1});
    CHECK(check_double_dual(dd, base_module(in.ring)));
    for (const auto& m : in.modules) CHECK(check_delta(dd, ce.resolution, instance_right_module(in, m)).pass());
  }
}

TEST_CASE("A* carries the modular character") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"lie-abelian2", "abelian2"}, {"lie-nonabelian2", "nonabelian2"}, {"lie-sl2", "sl2"}};
  for (const auto& [id, name] : pairs) {
    CAPTURE(id);
    const Instance& in = instance(id);
    DualityData dd = detect_duality(ce_resolution(in.pbw).resolution);
    std::vector<oracle::Q> chi = oracle::modular_character(oracle::named_lie(name));
    for (std::size_t i = 0; i < in.lie->dim(); ++i) CHECK(dd.astar.act_basis(in.pbw->generator(i))(0, 0) == chi[i]);
  }
}

TEST_CASE("cap with ω matches the oracle's duality profile and is invertible") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"lie-abelian1", "abelian1"}, {"lie-abelian2", "abelian2"}, {"lie-nonabelian2", "nonabelian2"}, {"lie-sl2", "sl2"}};
  for (const auto& [id, name] : pairs) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    DualityData dd = detect_duality(ce.resolution);
    CupPairing pairing(ce.resolution, ce_diagonal(ce));
    oracle::Lie g = oracle::named_lie(name);
    for (const auto& m : in.modules) {
      CAPTURE(id);
      CAPTURE(m);
      oracle::DualityProfile want = oracle::lie_duality(g, oracle::lie_module(g, m));
      std::vector<std::size_t> ext, tor;
      for (const DualityRow& row : duality_table(dd, pairing, instance_module(in, m))) {
        ext.push_back(row.ext_dim);
        tor.push_back(row.tor_dim);
        CHECK(row.bijective);
      }
      CHECK(ext == want.ext);
      CHECK(tor == want.tor);
    }
  }
}

TEST_CASE("nonabelian duality profile is (1,1,0) on both sides") {
  const Instance& in = instance("lie-nonabelian2");
  CEResolution ce = ce_resolution(in.pbw);
  DualityData dd = detect_duality(ce.resolution);
  CupPairing pairing(ce.resolution, ce_diagonal(ce));
  for (std::size_t m = 0; m <= 2; ++m) {
    DualityRow row = duality_isomorphism(dd, pairing, instance_module(in, "trivial"), m);
    CHECK(row.ext_dim == (m < 2 ? 1u : 0u));
    CHECK(row.tor_dim == row.ext_dim);
    CHECK(row.bijective);
  }
  CHECK_THROWS_AS(duality_isomorphism(dd, pairing, instance_module(in, "trivial"), 3), WindowExceeded);
}

TEST_CASE("isomorphic distinguishes twisted characters") {
  const Instance& in = instance("lie-nonabelian2");
  DualityData dd = detect_duality(ce_resolution(in.pbw).resolution);
  CHECK_FALSE(isomorphic(dd.astar, instance_right_module(in, "trivial")));
  CHECK(isomorphic(dd.astar, dd.astar));
}
