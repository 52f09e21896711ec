#include "doctest.h"
#include "oracle.hpp"

using namespace oracle;

TEST_CASE("oracle: Hochschild complexes square to zero and give known answers") {
  CHECK(hochschild_cohomology(named_algebra("qxq"), 3) == std::vector<std::size_t>{2, 0, 0, 0});
  CHECK(hochschild_homology(named_algebra("ut2"), 2) == std::vector<std::size_t>{2, 0, 0});
  // HH⁰ is the center
  CHECK(hochschild_cohomology(named_algebra("ut2"), 0) == std::vector<std::size_t>{1});
  for (const auto& name : algebra_names()) {
    Algebra a = named_algebra(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      Mat dd = multiply(hochschild_coboundary(a, n), hochschild_coboundary(a, n - 1));
      for (const auto& row : dd)
        for (const Q& x : row) CHECK(x == 0);
    }
  }
}

TEST_CASE("oracle: cup of a coboundary with a cocycle is a coboundary") {
  Algebra a = named_algebra("qeps");
  Mat d0 = hochschild_coboundary(a, 0);
  std::vector<Q> b(d0.size());
  for (std::size_t r = 0; r < d0.size(); ++r) b[r] = d0[r][1];  // δ(ε)
  auto z1 = null_space(hochschild_coboundary(a, 1), 4);
  Mat d1 = hochschild_coboundary(a, 1);
  for (const auto& z : z1) {
    std::vector<Q> p = hochschild_cup(a, 1, b, 1, z);
    Mat rows;
    for (std::size_t c = 0; c < 4; ++c) {
      std::vector<Q> col(d1.size());
      for (std::size_t r = 0; r < d1.size(); ++r) col[r] = d1[r][c];
      rows.push_back(col);
    }
    const std::size_t before = rank(rows);
    rows.push_back(p);
    CHECK(rank(rows) == before);
  }
}

TEST_CASE("oracle: abelian Lie cohomology is exterior") {
  for (std::string name : {"abelian1", "abelian2"}) {
    Lie g = named_lie(name);
    std::vector<std::size_t> want = g.dim == 1 ? std::vector<std::size_t>{1, 1} : std::vector<std::size_t>{1, 2, 1};
    CHECK(lie_cohomology(g, lie_module(g, "trivial")) == want);
  }
  CHECK(modular_character(named_lie("nonabelian2")) == std::vector<Q>{1, 0});
  CHECK(modular_character(named_lie("sl2")) == std::vector<Q>{0, 0, 0});
}

TEST_CASE("oracle: rank and null space") {
  Mat m{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(m) == 1);
  auto k = null_space(m, 3);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}
