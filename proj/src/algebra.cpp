#include "xah/algebra.hpp"

#include <utility>

namespace xah {

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels, std::vector<Vector> products, Vector unit)
    : labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw AlgebraError("algebra of dimension zero");
  if (products_.size() != n * n) throw AlgebraError("structure constants: expected dim^2 products");
  for (const auto& p : products_)
    if (p.size() != n) throw AlgebraError("structure constants: product of wrong length");
  if (unit_.size() != n) throw AlgebraError("unit of wrong length");

  left_.assign(n, Matrix(n, n));
  right_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = products_[i * n + j][k];
        if (sgn(c) == 0) continue;
        left_[i](k, j) = c;   // b_i b_j
        right_[j](k, i) = c;  // b_i b_j read as right multiplication by b_j
      }

  // Associativity on all basis triples: L_i L_j = L_{b_i b_j}.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(left_[i] * left_[j] == left_mult(products_[i * n + j])))
        throw AlgebraError("structure constants are not associative at (" + labels_[i] + ", " +
                           labels_[j] + ")");
  Matrix id = Matrix::identity(n);
  if (!(left_mult(unit_) == id) || !(right_mult(unit_) == id))
    throw AlgebraError("unit is not a two-sided identity");
}

Vector FinDimAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar c = x[i] * y[j];
      axpy(out, c, products_[i * n + j]);
    }
  }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * left_[i];
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * right_[i];
  return m;
}

bool FinDimAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

AlgebraPtr ground_field() {
  static const AlgebraPtr k =
      std::make_shared<FinDimAlgebra>(std::vector<std::string>{"1"}, std::vector<Vector>{Vector{Scalar(1)}},
                                      Vector{Scalar(1)});
  return k;
}

AlgebraPtr opposite(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> products(n * n);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "^op");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = a.basis_product(j, i);
  return std::make_shared<FinDimAlgebra>(std::move(labels), std::move(products), a.unit());
}

AlgebraPtr enveloping(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t e = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(a.labels()[i] + "⊗" + a.labels()[j]);
  std::vector<Vector> products(e * e, Vector(e, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Vector& left = a.basis_product(i, k);
          const Vector& right = a.basis_product(l, j);
          Vector& out = products[(i * n + j) * e + (k * n + l)];
          for (std::size_t p = 0; p < n; ++p) {
            if (sgn(left[p]) == 0) continue;
            for (std::size_t q = 0; q < n; ++q)
              if (sgn(right[q]) != 0) out[p * n + q] += left[p] * right[q];
          }
        }
  Vector unit(e, Scalar(0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) unit[p * n + q] = a.unit()[p] * a.unit()[q];
  return std::make_shared<FinDimAlgebra>(std::move(labels), std::move(products), std::move(unit));
}

// ------------------------------------------------------------- ModuleRep

ModuleRep::ModuleRep(AlgebraPtr algebra, Side side, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), side_(side), action_(std::move(action)) {
  const FinDimAlgebra& a = *algebra_;
  if (action_.size() != a.dim()) throw AlgebraError("module: expected one action matrix per basis element");
  dim_ = action_.front().rows();
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw AlgebraError("module: action matrices must be square of equal size");
  if (!(act(a.unit()) == Matrix::identity(dim_))) throw AlgebraError("module: unit does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix lhs = side_ == Side::Left ? action_[i] * action_[j] : action_[j] * action_[i];
      if (!(lhs == act(a.basis_product(i, j))))
        throw AlgebraError("module: action is not multiplicative at (" + a.labels()[i] + ", " + a.labels()[j] +
                           ")");
    }
}

Matrix ModuleRep::act(const Vector& u) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0) m = m + u[i] * action_[i];
  return m;
}

ModuleRep regular_module(const AlgebraPtr& a, Side side) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(side == Side::Left ? a->left_mult(i) : a->right_mult(i));
  return ModuleRep(a, side, std::move(act));
}

BimoduleRep::BimoduleRep(ModuleRep l, ModuleRep r) : left(std::move(l)), right(std::move(r)) {
  if (left.side() != Side::Left || right.side() != Side::Right || left.dim() != right.dim())
    throw AlgebraError("bimodule: need a left and a right structure on one space");
  for (const auto& x : left.actions())
    for (const auto& y : right.actions())
      if (!(x * y == y * x)) throw AlgebraError("bimodule: left and right actions do not commute");
}

// ------------------------------------------------------------ tensor_over

Vector TensorOver::pure(const Vector& m, const Vector& n) const {
  Vector v(left_dim * right_dim, Scalar(0));
  for (std::size_t i = 0; i < left_dim; ++i) {
    if (sgn(m[i]) == 0) continue;
    for (std::size_t j = 0; j < right_dim; ++j)
      if (sgn(n[j]) != 0) v[i * right_dim + j] = m[i] * n[j];
  }
  return space.project(v);
}

std::optional<Matrix> TensorOver::descend(const Matrix& f, const Matrix& g, const TensorOver& target) const {
  return induced_map(kron(f, g), space, target.space);
}

TensorOver balanced_tensor(std::size_t left_dim, std::size_t right_dim, const std::vector<Matrix>& on_left,
                           const std::vector<Matrix>& on_right) {
  const std::size_t amb = left_dim * right_dim;
  std::vector<Vector> rels;
  for (std::size_t a = 0; a < on_left.size(); ++a) {
    const Matrix& l = on_left[a];
    const Matrix& r = on_right[a];
    for (std::size_t m = 0; m < left_dim; ++m)
      for (std::size_t n = 0; n < right_dim; ++n) {
        Vector v(amb, Scalar(0));
        for (std::size_t i = 0; i < left_dim; ++i)
          if (sgn(l(i, m)) != 0) v[i * right_dim + n] += l(i, m);
        for (std::size_t j = 0; j < right_dim; ++j)
          if (sgn(r(j, n)) != 0) v[m * right_dim + j] -= r(j, n);
        if (!is_zero(v)) rels.push_back(std::move(v));
      }
  }
  return TensorOver{left_dim, right_dim, QuotientSpace(amb, rels)};
}

TensorOver tensor_over(const ModuleRep& right, const ModuleRep& left) {
  if (right.side() != Side::Right || left.side() != Side::Left)
    throw AlgebraError("tensor_over: need a right module and a left module");
  if (right.alg().dim() != left.alg().dim()) throw AlgebraError("tensor_over: modules over different algebras");
  return balanced_tensor(right.dim(), left.dim(), right.actions(), left.actions());
}

// --------------------------------------------------------------- hom_over

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

Matrix HomSpace::element(std::size_t i) const { return unflatten(space.basis()[i], target_dim, source_dim); }

Matrix HomSpace::as_matrix(const Vector& coords) const {
  Vector v(target_dim * source_dim, Scalar(0));
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], space.basis()[i]);
  return unflatten(v, target_dim, source_dim);
}

std::optional<Vector> HomSpace::coordinates(const Matrix& f) const { return space.coordinates(flatten(f)); }

HomSpace hom_over(const ModuleRep& m, const ModuleRep& n) {
  if (m.side() != n.side()) throw AlgebraError("hom_over: modules must be on the same side");
  const std::size_t dm = m.dim(), dn = n.dim();
  const std::size_t unknowns = dm * dn;
  // Row-major vec(X A) = (I ⊗ A^T) vec(X), vec(A X) = (A ⊗ I) vec(X).
  std::vector<Vector> rows;
  Matrix idm = Matrix::identity(dm), idn = Matrix::identity(dn);
  for (std::size_t i = 0; i < m.alg().dim(); ++i) {
    Matrix c = kron(n.action(i), idm) - kron(idn, m.action(i).transpose());
    for (std::size_t r = 0; r < c.rows(); ++r) {
      Vector row = c.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  Matrix constraints = rows.empty() ? Matrix(1, unknowns) : Matrix::from_rows(rows, unknowns);
  return HomSpace{dm, dn, kernel(constraints)};
}

std::optional<Matrix> restrict_to(const Matrix& op, const Subspace& s) {
  Matrix out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto c = s.coordinates(op.apply(s.basis()[j]));
    if (!c) return std::nullopt;
    out.set_col(j, *c);
  }
  return out;
}

}  // namespace xah
