#include "xah/instances.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace xah {

namespace {

AlgebraPtr algebra_from(std::vector<std::string> labels, const std::function<Vector(std::size_t, std::size_t)>& product,
                        Vector unit) {
  const std::size_t n = labels.size();
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(product(i, j));
  return std::make_shared<const FinDimAlgebra>(std::move(labels), std::move(products), std::move(unit));
}

// A bialgebra over A = k from Δ on basis elements and ε.
BialgebroidPtr bialgebra(const AlgebraPtr& u, const std::vector<Vector>& delta, const std::vector<Scalar>& counit) {
  const std::size_t n = u->dim();
  Matrix eta(n, 1);
  eta.set_col(0, u->unit());
  Matrix lift = Matrix::from_columns(delta, n * n);
  std::vector<Matrix> eps;
  for (const Scalar& c : counit) {
    Matrix m(1, 1);
    m(0, 0) = c;
    eps.push_back(m);
  }
  return std::make_shared<const BialgebroidData>(u, ground_field(), eta, lift, eps);
}

Vector pure(const Vector& x, const Vector& y) {
  Vector v(x.size() * y.size(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i * y.size() + j] = x[i] * y[j];
  return v;
}

std::size_t compose(const std::vector<std::vector<std::size_t>>& elements, std::size_t p, std::size_t q) {
  std::vector<std::size_t> r(elements[p].size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = elements[p][elements[q][i]];
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == r) return k;
  throw AlgebraError("permutation group not closed under composition");
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

const std::vector<std::vector<std::size_t>> kS3 = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
const std::vector<std::string> kS3Labels = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
const std::vector<std::vector<std::size_t>> kZ2 = {{0, 1}, {1, 0}};
const std::vector<std::string> kZ2Labels = {"e", "g"};
const std::vector<std::vector<std::size_t>> kZ3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
const std::vector<std::string> kZ3Labels = {"e", "g", "g^2"};

const std::vector<std::vector<std::size_t>>& group_of(const std::string& id) {
  if (id == "qz2") return kZ2;
  if (id == "qz3") return kZ3;
  return kS3;
}

Matrix permutation_matrix(const std::vector<std::size_t>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

Representation group_module(const Instance& inst, const std::string& name) {
  const auto& elements = group_of(inst.id);
  std::map<std::size_t, Matrix> act;
  if (name == "sign") {
    for (std::size_t g = 0; g < elements.size(); ++g) {
      Matrix m(1, 1);
      m(0, 0) = permutation_sign(elements[g]);
      act.emplace(g, m);
    }
    return Representation(inst.ring, Side::Left, 1, std::move(act), "sign");
  }
  // the sum-zero part of the permutation representation
  const std::size_t n = elements.front().size();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector v = zero_vector(n);
    v[i] = 1;
    v[i + 1] = -1;
    basis.push_back(v);
  }
  Subspace s = Subspace::span(n, basis);
  for (std::size_t g = 0; g < elements.size(); ++g) act.emplace(g, *restrict_to(permutation_matrix(elements[g]), s));
  Representation rep(inst.ring, Side::Left, n - 1, std::move(act), "standard");
  inst.ring->validate(rep);
  return rep;
}

std::shared_ptr<Instance> finite_instance(std::string id, std::string description, BialgebroidPtr b,
                                          std::vector<std::string> modules) {
  auto inst = std::make_shared<Instance>();
  inst->id = id;
  inst->description = std::move(description);
  inst->kind = Instance::Kind::Finite;
  inst->bialgebroid = b;
  inst->hopf = std::make_shared<const HopfStructure>(galois_map(b));
  inst->ring = make_ring(*inst->hopf, id);
  inst->modules = std::move(modules);
  return inst;
}

std::shared_ptr<Instance> lie_instance(std::string id, std::string description, LiePtr g, std::size_t bound) {
  auto inst = std::make_shared<Instance>();
  inst->id = std::move(id);
  inst->description = std::move(description);
  inst->kind = Instance::Kind::Lie;
  inst->lie = g;
  inst->pbw = make_pbw(g, bound);
  inst->ring = inst->pbw;
  inst->modules = {"trivial", "adjoint", "coadjoint"};
  return inst;
}

std::shared_ptr<Instance> build(const std::string& id) {
  if (id == "qz2" || id == "qz3" || id == "qs3") {
    const auto& elements = group_of(id);
    const auto& labels = id == "qz2" ? kZ2Labels : id == "qz3" ? kZ3Labels : kS3Labels;
    std::vector<std::string> modules{"trivial", "regular"};
    if (id != "qz3") modules.push_back("sign");
    if (id == "qs3") modules.push_back("standard");
    std::string desc = id == "qz2" ? "group algebra of Z/2" : id == "qz3" ? "group algebra of Z/3" : "group algebra of S3";
    return finite_instance(id, desc, group_algebra(elements, labels), modules);
  }
  if (id == "sweedler") {
    // basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx
    auto u = algebra_from(
        {"1", "g", "x", "gx"},
        [](std::size_t i, std::size_t j) {
          static const int table[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                                             {{1, 1}, {0, 1}, {3, 1}, {2, 1}},
                                             {{2, 1}, {3, -1}, {0, 0}, {0, 0}},
                                             {{3, 1}, {2, -1}, {0, 0}, {0, 0}}};
          Vector v = zero_vector(4);
          v[table[i][j][0]] += table[i][j][1];
          return v;
        },
        unit_vector(4, 0));
    auto e = [](std::size_t i) { return unit_vector(4, i); };
    std::vector<Vector> delta{pure(e(0), e(0)), pure(e(1), e(1)), add(pure(e(2), e(0)), pure(e(1), e(2))),
                              add(pure(e(3), e(1)), pure(e(0), e(3)))};
    return finite_instance(id, "Sweedler's 4-dimensional Hopf algebra", bialgebra(u, delta, {1, 1, 0, 0}),
                           {"trivial", "regular"});
  }
  if (id == "ae-qeps")
    return finite_instance(id, "enveloping algebra of Q[e]/(e^2)", enveloping_bialgebroid(dual_numbers()),
                           {"trivial", "regular"});
  if (id == "ae-qxq")
    return finite_instance(id, "enveloping algebra of Q x Q", enveloping_bialgebroid(split_pair()),
                           {"trivial", "regular"});
  if (id == "ae-ut2")
    return finite_instance(id, "enveloping algebra of upper-triangular 2x2 matrices",
                           enveloping_bialgebroid(upper_triangular2()), {"trivial", "regular"});
  if (id == "lie-abelian1") return lie_instance(id, "U(g), g abelian of dimension 1", abelian_lie(1), 12);
  if (id == "lie-abelian2") return lie_instance(id, "U(g), g abelian of dimension 2", abelian_lie(2), 12);
  if (id == "lie-nonabelian2") return lie_instance(id, "U(g), g = <x,y | [x,y] = y>", nonabelian2_lie(), 12);
  if (id == "lie-sl2") return lie_instance(id, "U(sl2)", sl2_lie(), 8);
  if (id == "neg-monoid") {
    // k[{1, z}] with z² = z and both elements grouplike
    auto u = algebra_from(
        {"1", "z"}, [](std::size_t i, std::size_t j) { return unit_vector(2, (i == 1 || j == 1) ? 1 : 0); },
        unit_vector(2, 0));
    auto inst = std::make_shared<Instance>();
    inst->id = id;
    inst->description = "monoid bialgebra k[{1,z}], z^2 = z (no antipode, Galois map not invertible)";
    inst->kind = Instance::Kind::NonHopf;
    inst->bialgebroid =
        bialgebra(u, {pure(unit_vector(2, 0), unit_vector(2, 0)), pure(unit_vector(2, 1), unit_vector(2, 1))}, {1, 1});
    return inst;
  }
  throw UnknownInstance("unknown instance '" + id + "'");
}

}  // namespace

// -------------------------------------------------------------- algebras

AlgebraPtr dual_numbers() {
  return algebra_from(
      {"1", "e"}, [](std::size_t i, std::size_t j) { return i + j >= 2 ? zero_vector(2) : unit_vector(2, i + j); },
      unit_vector(2, 0));
}

AlgebraPtr split_pair() {
  return algebra_from(
      {"p", "q"}, [](std::size_t i, std::size_t j) { return i == j ? unit_vector(2, i) : zero_vector(2); },
      Vector{Scalar(1), Scalar(1)});
}

AlgebraPtr upper_triangular2() {
  // e11, e12, e22
  return algebra_from(
      {"e11", "e12", "e22"},
      [](std::size_t i, std::size_t j) {
        static const int rows[3] = {0, 0, 1}, cols[3] = {0, 1, 1};
        if (cols[i] != rows[j]) return zero_vector(3);
        int r = rows[i], c = cols[j];
        return unit_vector(3, r == 0 ? (c == 0 ? 0 : 1) : 2);
      },
      Vector{Scalar(1), Scalar(0), Scalar(1)});
}

BialgebroidPtr group_algebra(const std::vector<std::vector<std::size_t>>& elements,
                             const std::vector<std::string>& labels) {
  const std::size_t n = elements.size();
  auto u = algebra_from(
      labels, [&](std::size_t i, std::size_t j) { return unit_vector(n, compose(elements, i, j)); },
      unit_vector(n, 0));
  std::vector<Vector> delta;
  for (std::size_t g = 0; g < n; ++g) delta.push_back(pure(unit_vector(n, g), unit_vector(n, g)));
  return bialgebra(u, delta, std::vector<Scalar>(n, Scalar(1)));
}

BialgebroidPtr enveloping_bialgebroid(const AlgebraPtr& a) {
  const std::size_t na = a->dim(), nu = na * na;
  AlgebraPtr u = enveloping(*a);
  Matrix eta = Matrix::identity(nu);
  std::vector<Vector> delta;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      // (a_i ⊗ 1) ⊗_A (1 ⊗ a_j)
      Vector left = pure(unit_vector(na, i), a->unit()), right = pure(a->unit(), unit_vector(na, j));
      delta.push_back(pure(left, right));
    }
  std::vector<Matrix> eps;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) eps.push_back(a->left_mult(i) * a->right_mult(j));
  return std::make_shared<const BialgebroidData>(u, a, eta, Matrix::from_columns(delta, nu * nu), eps);
}

// ------------------------------------------------------------------ Lie

LiePtr abelian_lie(std::size_t dim) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(i < 4 ? names[i] : "x" + std::to_string(i));
  return std::make_shared<const LieAlgebraData>("abelian" + std::to_string(dim), labels,
                                                std::vector<Vector>(dim * dim, zero_vector(dim)));
}

LiePtr nonabelian2_lie() {
  std::vector<Vector> br(4, zero_vector(2));
  br[0 * 2 + 1] = Vector{Scalar(0), Scalar(1)};
  br[1 * 2 + 0] = Vector{Scalar(0), Scalar(-1)};
  return std::make_shared<const LieAlgebraData>("nonabelian2", std::vector<std::string>{"x", "y"}, br);
}

LiePtr sl2_lie() {
  // e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = −2f
  std::vector<Vector> br(9, zero_vector(3));
  auto set = [&](std::size_t i, std::size_t j, Vector v) {
    br[j * 3 + i] = scaled(v, -1);
    br[i * 3 + j] = std::move(v);
  };
  set(0, 1, Vector{Scalar(0), Scalar(0), Scalar(1)});
  set(2, 0, Vector{Scalar(2), Scalar(0), Scalar(0)});
  set(2, 1, Vector{Scalar(0), Scalar(-2), Scalar(0)});
  return std::make_shared<const LieAlgebraData>("sl2", std::vector<std::string>{"e", "f", "h"}, br);
}

// -------------------------------------------------------------- catalog

const std::vector<std::string>& instance_ids() {
  static const std::vector<std::string> ids{"qz2",          "qz3",          "qs3",           "sweedler",
                                            "ae-qeps",      "ae-qxq",       "ae-ut2",        "lie-abelian1",
                                            "lie-abelian2", "lie-nonabelian2", "lie-sl2",    "neg-monoid"};
  return ids;
}

const Instance& instance(const std::string& id) {
  static std::mutex lock;
  static std::map<std::string, std::shared_ptr<Instance>> built;
  std::lock_guard<std::mutex> g(lock);
  auto it = built.find(id);
  if (it != built.end()) return *it->second;
  auto inst = build(id);
  return *built.emplace(id, inst).first->second;
}

Representation instance_module(const Instance& inst, const std::string& name) {
  if (std::find(inst.modules.begin(), inst.modules.end(), name) == inst.modules.end())
    throw UnknownInstance("instance '" + inst.id + "' has no module '" + name + "'");
  if (name == "trivial") return base_module(inst.ring);
  if (inst.kind == Instance::Kind::Lie) {
    if (name == "adjoint") return adjoint_module(inst.pbw);
    return coadjoint_module(inst.pbw);
  }
  if (name == "regular") return regular_representation(inst.ring, Side::Left);
  return group_module(inst, name);
}

Representation instance_right_module(const Instance& inst, const std::string& name) {
  if (std::find(inst.modules.begin(), inst.modules.end(), name) == inst.modules.end())
    throw UnknownInstance("instance '" + inst.id + "' has no module '" + name + "'");
  if (inst.kind == Instance::Kind::Lie) {
    Representation left = instance_module(inst, name);
    std::map<std::size_t, Matrix> act;
    for (const auto& [g, m] : left.generator_action()) act.emplace(g, Scalar(-1) * m);
    return Representation(inst.ring, Side::Right, left.dim(), std::move(act), left.name() + "^op");
  }
  if (name != "trivial") return transpose_module(instance_module(inst, name));
  const BialgebroidData& d = *inst.bialgebroid;
  const FinDimAlgebra& a = d.A();
  std::map<std::size_t, Matrix> act;
  if (a.dim() == 1) {
    for (std::size_t b = 0; b < d.dim_u(); ++b) act.emplace(b, d.epsilon_hat()[b]);
  } else {
    // U = Aᵉ with b = i * dim A + j standing for a_i ⊗ a_j
    const std::size_t na = a.dim();
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) act.emplace(i * na + j, a.left_mult(j) * a.right_mult(i));
  }
  Representation rep(inst.ring, Side::Right, a.dim(), std::move(act), "A");
  inst.ring->validate(rep);
  return rep;
}

// ----------------------------------------------------------------- json

nlohmann::json algebra_json(const FinDimAlgebra& a) {
  nlohmann::json j;
  j["labels"] = a.labels();
  nlohmann::json unit = nlohmann::json::array();
  for (const Scalar& c : a.unit()) unit.push_back(to_string(c));
  j["unit"] = unit;
  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      nlohmann::json row = nlohmann::json::array();
      for (const Scalar& c : a.basis_product(i, k)) row.push_back(to_string(c));
      products.push_back(row);
    }
  j["products"] = products;
  return j;
}

namespace {
nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}
}  // namespace

nlohmann::json instance_json(const Instance& inst) {
  nlohmann::json j;
  j["id"] = inst.id;
  j["description"] = inst.description;
  j["modules"] = inst.modules;
  if (inst.kind == Instance::Kind::Lie) {
    j["kind"] = "lie";
    j["labels"] = inst.lie->labels();
    nlohmann::json br = nlohmann::json::array();
    for (std::size_t a = 0; a < inst.lie->dim(); ++a)
      for (std::size_t b = 0; b < inst.lie->dim(); ++b) {
        nlohmann::json v = nlohmann::json::array();
        for (const Scalar& c : inst.lie->bracket(a, b)) v.push_back(to_string(c));
        br.push_back(v);
      }
    j["brackets"] = br;
    j["pbw_degree_bound"] = inst.pbw->max_degree();
    return j;
  }
  const BialgebroidData& d = *inst.bialgebroid;
  j["kind"] = inst.kind == Instance::Kind::Finite ? "finite" : "non-hopf";
  j["U"] = algebra_json(d.U());
  j["A"] = algebra_json(d.A());
  j["eta"] = matrix_json(d.eta());
  j["delta_lift"] = matrix_json(d.delta_lift());
  nlohmann::json eps = nlohmann::json::array();
  for (const Matrix& m : d.epsilon_hat()) eps.push_back(matrix_json(m));
  j["epsilon_hat"] = eps;
  return j;
}

// ------------------------------------------------------------- U(g) checks

namespace {

using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void add_to(Tensor2& t, const Scalar& c, std::size_t l, std::size_t r) {
  Scalar& x = t[{l, r}];
  x += c;
  if (sgn(x) == 0) t.erase({l, r});
}

Tensor2 tensor_of(const std::vector<Term>& terms) {
  Tensor2 t;
  for (const Term& x : terms) add_to(t, x.coef, x.left, x.right);
  return t;
}

/// (a ⊗ b)(c ⊗ d) = ac ⊗ bd, or ac ⊗ db when op_right
Tensor2 multiply(const PBWRing& u, const Tensor2& x, const Tensor2& y, bool op_right) {
  Tensor2 out;
  for (const auto& [ab, s] : x)
    for (const auto& [cd, t] : y) {
      Elem l = u.multiply_basis(ab.first, cd.first);
      Elem r = op_right ? u.multiply_basis(cd.second, ab.second) : u.multiply_basis(ab.second, cd.second);
      for (const auto& [i, p] : l)
        for (const auto& [j, q] : r) add_to(out, s * t * p * q, i, j);
    }
  return out;
}

std::string show(const PBWRing& u, const Tensor2& t) {
  std::string s;
  for (const auto& [ij, c] : t) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + " " + u.label(ij.first) + "⊗" + u.label(ij.second);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

CheckReport check_pbw_hopf(const PBWRing& u, std::size_t max_degree) {
  CheckReport report;
  const std::size_t n = u.basis_size(max_degree);
  auto eps = [](std::size_t b) { return b == 0 ? Scalar(1) : Scalar(0); };
  auto check = [&](const std::string& name, std::size_t b, const Tensor2& lhs, const Tensor2& rhs) {
    if (lhs != rhs) report.add(name, false, u.label(b) + ": " + show(u, lhs) + " vs " + show(u, rhs));
  };
  const std::size_t before = report.items.size();
  for (std::size_t b = 0; b < n; ++b) {
    const std::vector<Term> delta = u.coproduct(b), trans = u.translation(b);
    const Tensor2 unit_right{{{b, 0}, Scalar(1)}};
    // counit on both sides
    Tensor2 left, right;
    for (const Term& t : delta) {
      if (t.left == 0) add_to(left, t.coef, t.right, 0);
      if (t.right == 0) add_to(right, t.coef, t.left, 0);
    }
    check("counit", b, left, unit_right);
    check("counit", b, right, unit_right);
    // coassociativity, flattened as (first, second ⊗ third) with the second pair encoded
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> lhs3, rhs3;
    for (const Term& t : delta) {
      for (const Term& s : u.coproduct(t.left)) lhs3[{s.left, s.right, t.right}] += t.coef * s.coef;
      for (const Term& s : u.coproduct(t.right)) rhs3[{t.left, s.left, s.right}] += t.coef * s.coef;
    }
    std::erase_if(lhs3, [](const auto& e) { return sgn(e.second) == 0; });
    std::erase_if(rhs3, [](const auto& e) { return sgn(e.second) == 0; });
    if (lhs3 != rhs3) report.add("coassociativity", false, u.label(b));
    // (Sch1) u₊₍₁₎ ⊗ u₊₍₂₎u₋ = u ⊗ 1
    Tensor2 s1, s2, s5;
    for (const Term& t : trans)
      for (const Term& d : u.coproduct(t.left))
        for (const auto& [j, c] : u.multiply_basis(d.right, t.right)) add_to(s1, t.coef * d.coef * c, d.left, j);
    check("Sch1", b, s1, unit_right);
    // (Sch2) u₍₁₎₊ ⊗ u₍₁₎₋u₍₂₎ = u ⊗ 1
    for (const Term& d : delta)
      for (const Term& t : u.translation(d.left))
        for (const auto& [j, c] : u.multiply_basis(t.right, d.right)) add_to(s2, d.coef * t.coef * c, t.left, j);
    check("Sch2", b, s2, unit_right);
    // (Sch5) u₊u₋ = ε(u)
    for (const Term& t : trans)
      for (const auto& [j, c] : u.multiply_basis(t.left, t.right)) add_to(s5, t.coef * c, j, 0);
    Tensor2 e;
    if (sgn(eps(b)) != 0) e[{0, 0}] = eps(b);
    check("Sch5", b, s5, e);
    // products with every c of degree ≤ max_degree − deg b
    for (std::size_t c = 0; c < n; ++c) {
      if (u.degree(b) + u.degree(c) > max_degree) continue;
      Elem bc = u.multiply_basis(b, c);
      Tensor2 delta_bc, trans_bc;
      for (const auto& [k, x] : bc) {
        for (const Term& t : u.coproduct(k)) add_to(delta_bc, x * t.coef, t.left, t.right);
        for (const Term& t : u.translation(k)) add_to(trans_bc, x * t.coef, t.left, t.right);
      }
      check("multiplicative", b, delta_bc, multiply(u, tensor_of(delta), tensor_of(u.coproduct(c)), false));
      // (Sch4) (uv)₊ ⊗ (uv)₋ = u₊v₊ ⊗ v₋u₋
      check("Sch4", b, trans_bc, multiply(u, tensor_of(trans), tensor_of(u.translation(c)), true));
    }
  }
  if (report.items.size() == before) report.add("U(" + u.lie().name() + ") Hopf identities through degree " +
                                                    std::to_string(max_degree), true);
  return report;
}

}  // namespace xah
