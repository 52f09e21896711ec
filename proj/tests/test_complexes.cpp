#include "doctest.h"
#include "xah/homology.hpp"
#include "xah/instances.hpp"

using namespace xah;

namespace {

// 0 ← k ← U ← U ← U … over QZ₂ with d alternating 1 − g and 1 + g
FreeResolution periodic_z2(std::size_t top) {
  const Instance& in = instance("qz2");
  FreeResolution p;
  p.name = "periodic";
  p.complex.ring = in.ring;
  p.complex.side = Side::Left;
  p.complex.ranks.assign(top + 1, 1);
  p.complex.edges.assign(top + 1, {});
  for (std::size_t n = 1; n <= top; ++n) {
    Elem c{{0, Scalar(1)}, {1, Scalar(n % 2 ? -1 : 1)}};
    p.complex.edges[n].push_back({0, 0, c});
  }
  p.augmentation = {Vector{1}};
  return p;
}

}  // namespace

TEST_CASE("shift negates the differential on odd shifts") {
  ChainComplex c(0, {1, 1}, std::vector<Matrix>{Matrix::from_rows({{2}}, 1)});
  ChainComplex s1 = shift(c, 1), s2 = shift(c, 2);
  CHECK(s1.lowest() == 1);
  CHECK(s1.d(2).dense() == Matrix::from_rows({{-2}}, 1));
  CHECK(s2.d(3).dense() == Matrix::from_rows({{2}}, 1));
}

TEST_CASE("homology of a small complex") {
  // Z: 0 → Q² → Q² → Q → 0 with ranks 1, 1
  ChainComplex c(0, {1, 2, 2}, std::vector<Matrix>{Matrix::from_rows({{1, 0}}, 2), Matrix::from_rows({{0, 0}, {1, 0}}, 2)});
  CHECK(homology(c, 0).dim() == 0);
  CHECK(homology(c, 1).dim() == 0);
  CHECK(homology(c, 2).dim() == 1);
  HomologyGroup h = homology(c, 2);
  CHECK(h.classify(h.representative(0)) == Vector{1});
  CHECK_FALSE(h.classify(Vector{1, 0}));
}

TEST_CASE("totalization squares to zero and commutes with transposition") {
  // the tensor product of two copies of Q → Q (identity)
  DoubleComplex dc;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) dc.dims[{i, j}] = 1;
  dc.horizontal[{1, 0}] = dc.horizontal[{1, 1}] = Matrix::identity(1);
  dc.vertical[{0, 1}] = dc.vertical[{1, 1}] = Matrix::identity(1);
  CHECK_NOTHROW(dc.check());
  TotalComplex t = totalize(dc), tt = totalize(transpose(dc));
  CHECK((t.complex.d(1) * t.complex.d(2)).is_zero());
  for (int n = 0; n <= 2; ++n) {
    CHECK(homology(t.complex, n).dim() == 0);
    CHECK(homology(tt.complex, n).dim() == 0);
  }
  DoubleComplex bad = dc;
  bad.vertical[{1, 1}] = Matrix::from_rows({{2}}, 1);
  CHECK_THROWS(bad.check());
}

TEST_CASE("bar resolutions are contractible") {
  for (std::string id : {"qs3", "ae-qeps"}) {
    CAPTURE(id);
    BarResolution bar(instance(id).ring, 5);
    auto r = bar.check_contractible(4);
    CHECK(r.pass());
    CHECK(r.checked > 0);
    CHECK_NOTHROW(bar.resolution().check());
  }
  for (std::string id : {"sweedler", "ae-ut2", "ae-qxq", "qz3"}) {
    CAPTURE(id);
    BarResolution bar(instance(id).ring, 4);
    CHECK(bar.check_contractible(3).pass());
  }
}

TEST_CASE("bar window is one below its depth") {
  BarResolution bar(instance("qz2").ring, 3);
  CHECK(bar.resolution().window() == 2);
  CHECK_THROWS_AS(ExtGroups(bar.resolution(), base_module(instance("qz2").ring), 3), WindowExceeded);
}

TEST_CASE("a hand-made periodic resolution compares isomorphically with bar") {
  const Instance& in = instance("qz2");
  FreeResolution p = periodic_z2(5);
  CHECK_NOTHROW(p.check());
  BarResolution bar(in.ring, 5);
  for (const auto& m : in.modules) {
    CAPTURE(m);
    ResolutionComparison c = resolution_independence(p, bar.resolution(), instance_module(in, m), 3);
    CHECK(c.pass());
    CHECK(c.dims_p == c.dims_q);
  }
}

TEST_CASE("lifted chain maps commute with the differential up to the shift sign") {
  const Instance& in = instance("ae-qeps");
  BarResolution bar(in.ring, 4);
  const FreeResolution& p = bar.resolution();
  ExtGroups ext(p, base_module(in.ring), 2);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t i = 0; i < ext.dim(m); ++i) {
      Vector phi = ext.representative(m, i);
      std::vector<Vector> values;
      const std::size_t da = in.ring->base_dim();
      for (std::size_t s = 0; s < p.rank(m); ++s) values.emplace_back(phi.begin() + s * da, phi.begin() + (s + 1) * da);
      ChainLift f = lift_chain_map(p, p, m, values, 1);
      CHECK(f.shift == m);
      CHECK(f.images.size() >= 2);
    }
}

TEST_CASE("the lifted diagonal is a chain map over the identity") {
  const Instance& in = instance("qz2");
  BarResolution bar(in.ring, 4);
  Diagonal diag = lift_diagonal(bar.resolution(), 3);
  CHECK(diag.depth() == 3);
  std::string witness;
  CHECK(is_diagonal(bar.resolution(), diag, &witness));
  CHECK(witness.empty());
}
