#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "xah/homology.hpp"
#include "xah/instances.hpp"

using namespace xah;

namespace {

std::vector<oracle::Mat> oracle_matrices(const Representation& m, const PBWRing& u) {
  std::vector<oracle::Mat> out;
  for (std::size_t i = 0; i < u.lie().dim(); ++i) {
    Matrix a = m.act_basis(u.generator(i));
    oracle::Mat o = oracle::zeros(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) o[r][c] = a(r, c);
    out.push_back(o);
  }
  return out;
}

}  // namespace

TEST_CASE("Hochschild cohomology and homology match the brute-force oracle") {
  const std::vector<std::pair<std::string, std::string>> pairs{{"ae-qeps", "qeps"}, {"ae-qxq", "qxq"}, {"ae-ut2", "ut2"}};
  for (const auto& [id, name] : pairs) {
    CAPTURE(id);
    const Instance& in = instance(id);
    BarResolution bar(in.ring, 4);
    oracle::Algebra a = oracle::named_algebra(name);
    ExtGroups ext(bar.resolution(), instance_module(in, "trivial"), 3);
    TorGroups tor(instance_right_module(in, "trivial"), bar.resolution(), 3);
    CHECK(ext.dims() == oracle::hochschild_cohomology(a, 3));
    CHECK(tor.dims() == oracle::hochschild_homology(a, 3));
  }
}

TEST_CASE("Lie cohomology and homology match the classical CE oracle") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"lie-abelian1", "abelian1"}, {"lie-abelian2", "abelian2"}, {"lie-nonabelian2", "nonabelian2"}, {"lie-sl2", "sl2"}};
  for (const auto& [id, name] : pairs) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    oracle::Lie g = oracle::named_lie(name);
    for (const auto& m : in.modules) {
      CAPTURE(id);
      CAPTURE(m);
      ExtGroups ext(ce.resolution, instance_module(in, m), g.dim);
      TorGroups tor(instance_right_module(in, m), ce.resolution, g.dim);
      CHECK(ext.dims() == oracle::lie_cohomology(g, oracle::lie_module(g, m)));
      CHECK(tor.dims() == oracle::lie_homology(g, oracle_matrices(instance_right_module(in, m), *in.pbw)));
      // the catalog modules are the oracle's modules
      CHECK(oracle_matrices(instance_module(in, m), *in.pbw) == oracle::lie_module(g, m));
    }
  }
}

TEST_CASE("CE differential on trivial coefficients is the classical cochain differential") {
  const Instance& in = instance("lie-sl2");
  CEResolution ce = ce_resolution(in.pbw);
  oracle::Lie g = oracle::named_lie("sl2");
  ChainComplex h = hom_complex(ce.resolution, instance_module(in, "trivial"), 3);
  // the oracle enumerates subsets lexicographically
  auto lex = [&](std::size_t n, std::size_t s) {
    auto sorted = ce.subsets[n];
    std::sort(sorted.begin(), sorted.end());
    return std::size_t(std::lower_bound(sorted.begin(), sorted.end(), ce.subsets[n][s]) - sorted.begin());
  };
  for (std::size_t n = 0; n < 3; ++n) {
    oracle::Mat d = oracle::ce_coboundary(g, oracle::lie_module(g, "trivial"), n);
    Matrix e = h.d(-int(n)).dense();
    REQUIRE(e.rows() == d.size());
    for (std::size_t r = 0; r < e.rows(); ++r)
      for (std::size_t c = 0; c < e.cols(); ++c) CHECK(e(r, c) == d[lex(n + 1, r)][lex(n, c)]);
  }
}

TEST_CASE("group algebra cohomology is the invariants in degree 0") {
  const Instance& in = instance("qs3");
  BarResolution bar(in.ring, 4);
  const std::vector<std::pair<std::string, std::size_t>> invariants{
      {"trivial", 1}, {"regular", 1}, {"sign", 0}, {"standard", 0}};
  for (const auto& [m, inv] : invariants) {
    CAPTURE(m);
    ExtGroups ext(bar.resolution(), instance_module(in, m), 3);
    CHECK(ext.dims() == std::vector<std::size_t>{inv, 0, 0, 0});
  }
}

TEST_CASE("Sweedler's algebra: Ext(k, k) lives in even degrees") {
  // Ext over k[x]/(x²) is k[y] with |y| = 1, and g acts on y by −1
  const Instance& in = instance("sweedler");
  BarResolution bar(in.ring, 4);
  ExtGroups ext(bar.resolution(), instance_module(in, "trivial"), 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(ext.dim(n) == (n % 2 == 0 ? 1u : 0u));
}

TEST_CASE("weight-graded bar matches CE for abelian g") {
  for (std::string id : {"lie-abelian1", "lie-abelian2"}) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    std::vector<std::size_t> bar = weight_graded_bar_ext(*in.pbw, 3, 3);
    ExtGroups ext(ce.resolution, instance_module(in, "trivial"), 3);
    CHECK(bar == ext.dims());
  }
  CHECK_THROWS(weight_graded_bar_ext(*instance("lie-nonabelian2").pbw, 2, 2));
}

TEST_CASE("module Hom and tensor over a semisimple ring") {
  const Instance& in = instance("qs3");
  Representation st = instance_module(in, "standard"), tr = instance_module(in, "trivial");
  CHECK(module_hom(st, st).dim() == 1);
  CHECK(module_hom(tr, st).dim() == 0);
  CHECK(module_tensor(instance_right_module(in, "standard"), st).dim() == 1);
  CHECK(module_tensor(instance_right_module(in, "sign"), tr).dim() == 0);
}

TEST_CASE("Ext classes are coordinates of cocycles") {
  const Instance& in = instance("ae-qeps");
  BarResolution bar(in.ring, 3);
  ExtGroups ext(bar.resolution(), instance_module(in, "trivial"), 2);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t i = 0; i < ext.dim(n); ++i) {
      Vector rep = ext.representative(n, i);
      CHECK(ext.classify(n, rep) == unit_vector(ext.dim(n), i));
      CHECK(is_zero(ext.coboundary(n, rep)));
    }
}
