#include "xah/ring.hpp"

#include <utility>

namespace xah {

Elem basis_elem(std::size_t b, const Scalar& c) {
  Elem e;
  if (sgn(c) != 0) e[b] = c;
  return e;
}

void add_to(Elem& y, const Scalar& c, const Elem& x) {
  if (sgn(c) == 0) return;
  for (const auto& [b, v] : x) {
    auto it = y.find(b);
    if (it == y.end()) {
      y.emplace(b, c * v);
    } else {
      it->second += c * v;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

Elem scaled(const Elem& x, const Scalar& c) {
  Elem out;
  add_to(out, c, x);
  return out;
}

bool is_zero(const Elem& x) { return x.empty(); }

Elem to_elem(const Vector& v) {
  Elem e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) e[i] = v[i];
  return e;
}

Elem HopfRing::multiply(const Elem& x, const Elem& y) const {
  Elem out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_to(out, a * b, multiply_basis(i, j));
  return out;
}

std::size_t HopfRing::max_degree(const Elem& x) const {
  std::size_t d = 0;
  for (const auto& [b, c] : x) d = std::max(d, degree(b));
  return d;
}

// -------------------------------------------------------- Representation

Representation::Representation(RingPtr ring, Side side, std::size_t dim, std::map<std::size_t, Matrix> generator_action,
                               std::string name)
    : ring_(std::move(ring)), side_(side), dim_(dim), gens_(std::move(generator_action)), name_(std::move(name)) {
  for (std::size_t g : ring_->generators()) {
    auto it = gens_.find(g);
    if (it == gens_.end()) throw AlgebraError("representation: missing action of generator " + ring_->label(g));
    if (it->second.rows() != dim_ || it->second.cols() != dim_)
      throw AlgebraError("representation: generator matrix of wrong size");
  }
}

Matrix Representation::act_basis(std::size_t b) const {
  {
    std::lock_guard<std::mutex> guard(cache_->lock);
    auto it = cache_->basis.find(b);
    if (it != cache_->basis.end()) return it->second;
  }
  Matrix m = Matrix::identity(dim_);
  for (std::size_t g : ring_->factors(b)) {
    const Matrix& a = gens_.at(g);
    m = side_ == Side::Left ? m * a : a * m;
  }
  std::lock_guard<std::mutex> guard(cache_->lock);
  cache_->basis.emplace(b, m);
  return m;
}

Matrix Representation::act(const Elem& u) const {
  Matrix m(dim_, dim_);
  for (const auto& [b, c] : u) m = m + c * act_basis(b);
  return m;
}

Representation base_module(const RingPtr& ring) {
  std::map<std::size_t, Matrix> act;
  for (std::size_t g : ring->generators()) act.emplace(g, ring->base_action(g));
  return Representation(ring, Side::Left, ring->base_dim(), std::move(act), "A");
}

Representation transpose_module(const Representation& m) {
  std::map<std::size_t, Matrix> act;
  for (const auto& [g, a] : m.generator_action()) act.emplace(g, a.transpose());
  return Representation(m.ring(), m.side() == Side::Left ? Side::Right : Side::Left, m.dim(), std::move(act),
                         m.name().empty() ? std::string() : m.name() + "^t");
}

// ------------------------------------------------------ monoidal products

Vector TensorModule::pure(const Vector& m, const Vector& n) const {
  Vector v(left_dim * right_dim, Scalar(0));
  for (std::size_t i = 0; i < left_dim; ++i) {
    if (sgn(m[i]) == 0) continue;
    for (std::size_t j = 0; j < right_dim; ++j)
      if (sgn(n[j]) != 0) v[i * right_dim + j] = m[i] * n[j];
  }
  return space.project(v);
}

namespace {

TensorModule tensor_impl(const Representation& m, const Representation& n, Side side,
                         const std::function<Elem(const Vector&)>& on_n_elem,
                         const std::function<std::vector<Term>(std::size_t)>& terms, bool swap_terms) {
  const RingPtr& ring = m.ring();
  std::vector<Matrix> on_left, on_right;
  for (std::size_t a = 0; a < ring->base_dim(); ++a) {
    Vector ea = unit_vector(ring->base_dim(), a);
    on_left.push_back(m.act(ring->target(ea)));
    on_right.push_back(n.act(on_n_elem(ea)));
  }
  TensorOver q = balanced_tensor(m.dim(), n.dim(), on_left, on_right);
  std::map<std::size_t, Matrix> act;
  for (std::size_t g : ring->generators()) {
    Matrix amb(m.dim() * n.dim(), m.dim() * n.dim());
    for (const Term& t : terms(g)) {
      // Δ: b_left acts on M, b_right on N. Translation: b₋ (right) on M, b₊ (left) on P.
      std::size_t on_m = swap_terms ? t.right : t.left;
      std::size_t on_n = swap_terms ? t.left : t.right;
      amb = amb + t.coef * kron(m.act_basis(on_m), n.act_basis(on_n));
    }
    auto ind = induced_map(amb, q.space, q.space);
    if (!ind) throw NotWellDefined("action does not descend to the tensor product at " + ring->label(g));
    act.emplace(g, *ind);
  }
  std::string name = m.name().empty() || n.name().empty() ? std::string() : m.name() + "⊗" + n.name();
  Representation rep(ring, side, q.dim(), std::move(act), name);
  ring->validate(rep);
  return TensorModule{m.dim(), n.dim(), q.space, rep};
}

}  // namespace

TensorModule tensor_left(const Representation& m, const Representation& n) {
  if (m.side() != Side::Left || n.side() != Side::Left) throw AlgebraError("tensor_left: need left modules");
  const RingPtr& ring = m.ring();
  return tensor_impl(
      m, n, Side::Left, [&](const Vector& a) { return ring->source(a); },
      [&](std::size_t b) { return ring->coproduct(b); }, false);
}

TensorModule tensor_right(const Representation& m, const Representation& p) {
  if (m.side() != Side::Left || p.side() != Side::Right)
    throw AlgebraError("tensor_right: need a left module and a right module");
  const RingPtr& ring = m.ring();
  return tensor_impl(
      m, p, Side::Right, [&](const Vector& a) { return ring->target(a); },
      [&](std::size_t b) { return ring->translation(b); }, true);
}

Matrix left_unitor(const TensorModule& am, const Representation& m) {
  const RingPtr& ring = m.ring();
  const std::size_t na = ring->base_dim(), dm = m.dim();
  Matrix amb(dm, na * dm);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix s = m.act(ring->source(unit_vector(na, a)));
    for (std::size_t j = 0; j < dm; ++j) amb.set_col(a * dm + j, s.col(j));
  }
  auto ind = induced_map(amb, am.space, QuotientSpace(dm));
  if (!ind) throw NotWellDefined("left unitor does not descend");
  return *ind;
}

Matrix right_module_unitor(const TensorModule& ap, const Representation& p) {
  const RingPtr& ring = p.ring();
  const std::size_t na = ring->base_dim(), dp = p.dim();
  Matrix amb(dp, na * dp);
  for (std::size_t a = 0; a < na; ++a) {
    Matrix t = p.act(ring->target(unit_vector(na, a)));
    for (std::size_t j = 0; j < dp; ++j) amb.set_col(a * dp + j, t.col(j));
  }
  auto ind = induced_map(amb, ap.space, QuotientSpace(dp));
  if (!ind) throw NotWellDefined("right unitor does not descend");
  return *ind;
}

// --------------------------------------------------------- FinDimHopfRing

FinDimHopfRing::FinDimHopfRing(std::shared_ptr<const HopfStructure> h, std::string name)
    : h_(std::move(h)), name_(std::move(name)), dim_(h_->parent().dim_u()) {
  for (std::size_t i = 0; i < dim_; ++i) gens_.push_back(i);
}

std::string FinDimHopfRing::label(std::size_t b) const { return h_->parent().U().labels()[b]; }

Elem FinDimHopfRing::one() const { return to_elem(h_->parent().U().unit()); }

Elem FinDimHopfRing::multiply_basis(std::size_t i, std::size_t j) const {
  return to_elem(h_->parent().U().basis_product(i, j));
}

std::size_t FinDimHopfRing::base_dim() const { return h_->parent().dim_a(); }

Vector FinDimHopfRing::base_unit() const { return h_->parent().A().unit(); }

Matrix FinDimHopfRing::base_action(std::size_t g) const { return h_->parent().base_module().action(g); }

Elem FinDimHopfRing::source(const Vector& a) const { return to_elem(h_->parent().source(a)); }

Elem FinDimHopfRing::target(const Vector& a) const { return to_elem(h_->parent().target(a)); }

namespace {
std::vector<Term> terms_of(const Vector& lift, std::size_t n) {
  std::vector<Term> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (sgn(lift[p * n + q]) != 0) out.push_back({lift[p * n + q], p, q});
  return out;
}
}  // namespace

std::vector<Term> FinDimHopfRing::coproduct(std::size_t b) const {
  return terms_of(h_->parent().delta_lift().col(b), dim_);
}

std::vector<Term> FinDimHopfRing::translation(std::size_t b) const {
  return terms_of(h_->translation_lift().col(b), dim_);
}

void FinDimHopfRing::validate(const Representation& m) const { (void)to_module(m); }

std::shared_ptr<const FinDimHopfRing> make_ring(const HopfStructure& h, std::string name) {
  return std::make_shared<const FinDimHopfRing>(std::make_shared<const HopfStructure>(h), std::move(name));
}

Representation from_module(const RingPtr& ring, const ModuleRep& m, std::string name) {
  if (!ring->finite() || m.alg().dim() != ring->basis_size(0))
    throw AlgebraError("from_module: module is not over this ring");
  std::map<std::size_t, Matrix> act;
  for (std::size_t i = 0; i < m.alg().dim(); ++i) act.emplace(i, m.action(i));
  return Representation(ring, m.side(), m.dim(), std::move(act), std::move(name));
}

ModuleRep to_module(const Representation& m) {
  auto fin = std::dynamic_pointer_cast<const FinDimHopfRing>(m.ring());
  if (!fin) throw AlgebraError("to_module: ring is not finite-dimensional");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < fin->dim(); ++i) act.push_back(m.act_basis(i));
  return ModuleRep(fin->hopf().parent().U_ptr(), m.side(), std::move(act));
}

Representation regular_representation(const RingPtr& ring, Side side) {
  auto fin = std::dynamic_pointer_cast<const FinDimHopfRing>(ring);
  if (!fin) throw AlgebraError("regular_representation: ring is not finite-dimensional");
  return from_module(ring, regular_module(fin->hopf().parent().U_ptr(), side), side == Side::Left ? "U" : "U_r");
}

}  // namespace xah
