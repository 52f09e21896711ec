#include "xah/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace xah {

std::string to_string(const Scalar& x) {
  Scalar y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw LinalgError("zero denominator in rational '" + s + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw LinalgError("malformed rational '" + s + "'");
  }
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scaled(const Vector& a, const Scalar& s) {
  Vector r(a);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LinalgError("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw LinalgError("set_col: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw LinalgError("set_block: out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw LinalgError("apply: dimension mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw LinalgError("matrix product: dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LinalgError("matrix sum: shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LinalgError("matrix difference: shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out(a);
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix::SparseMatrix(const Matrix& m) : SparseMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) rows_[r].emplace_back(c, m(r, c));
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

namespace {

template <class V>
auto find_index(V& v, std::size_t c) {
  return std::lower_bound(v.begin(), v.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
}

}  // namespace

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = find_index(rows_.at(r), c);
  return it != rows_[r].end() && it->first == c ? it->second : Scalar(0);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& x) {
  if (r >= rows() || c >= cols_) throw LinalgError("SparseMatrix::add: index out of range");
  if (sgn(x) == 0) return;
  SparseVector& row = rows_[r];
  auto it = find_index(row, c);
  if (it == row.end() || it->first != c) {
    row.emplace(it, c, x);
  } else if (sgn(it->second += x) == 0) {
    row.erase(it);
  }
}

void SparseMatrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(b(i, j)) != 0) add(r0 + i, c0 + j, b(i, j));
}

Matrix SparseMatrix::dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : rows_[r]) m(r, c) = x;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : rows_[r]) t.rows_[c].emplace_back(r, x);
  return t;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw LinalgError("SparseMatrix::apply: vector of wrong length");
  Vector out(rows(), Scalar(0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : rows_[r])
      if (sgn(v[c]) != 0) out[r] += x * v[c];
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw LinalgError("SparseMatrix product: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::map<std::size_t, Scalar> acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    acc.clear();
    for (const auto& [k, x] : a.rows_[r])
      for (const auto& [c, y] : b.rows_[k]) acc[c] += x * y;
    for (auto& [c, x] : acc)
      if (sgn(x) != 0) out.rows_[r].emplace_back(c, std::move(x));
  }
  return out;
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
  SparseMatrix out(a.rows(), a.cols());
  if (sgn(s) == 0) return out;
  out.rows_ = a.rows_;
  for (auto& row : out.rows_)
    for (auto& [c, x] : row) x *= s;
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

// ------------------------------------------------------------------ rref

namespace {

// Row reduction on a list of rows in place. Returns pivot columns; the first
// pivots.size() rows hold the reduced basis afterwards.
using SparseRow = SparseVector;

SparseRow sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) r.emplace_back(k, v[k]);
  return r;
}

SparseRow sparse_row(const Matrix& m, std::size_t i) {
  SparseRow r;
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (sgn(m(i, k)) != 0) r.emplace_back(k, m(i, k));
  return r;
}

Vector dense(const SparseRow& r, std::size_t n) {
  Vector v(n);
  for (const auto& [k, x] : r) v[k] = x;
  return v;
}

// w −= f·row, in place
void sub_row(Vector& w, const Scalar& f, const SparseRow& row, Scalar& tmp) {
  for (const auto& [k, x] : row) {
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), x.get_mpq_t());
    mpq_sub(w[k].get_mpq_t(), w[k].get_mpq_t(), tmp.get_mpq_t());
  }
}

struct SparseRref {
  std::vector<std::size_t> pivots;
  std::vector<SparseRow> rows;  // one per pivot, in pivot order
};

// Canonical RREF. The result does not depend on the row order, so sparse rows
// go first to keep fill-in down.
SparseRref eliminate(std::vector<SparseRow> rows, std::size_t cols) {
  std::sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });
  std::vector<SparseRow> echelon(cols);
  std::vector<bool> has(cols, false);
  Vector w(cols);
  Scalar f, tmp;
  for (const SparseRow& in : rows) {
    if (in.empty()) continue;
    for (const auto& [k, x] : in) w[k] = x;
    std::size_t lead = cols;
    for (std::size_t k = in.front().first; k < cols; ++k) {
      if (sgn(w[k]) == 0) continue;
      if (!has[k]) {
        if (lead == cols) lead = k;
        continue;
      }
      f = w[k];
      sub_row(w, f, echelon[k], tmp);
    }
    if (lead == cols) continue;
    Scalar inv = 1 / w[lead];
    SparseRow r;
    for (std::size_t k = lead; k < cols; ++k)
      if (sgn(w[k]) != 0) {
        r.emplace_back(k, w[k] * inv);
        w[k] = 0;
      }
    echelon[lead] = std::move(r);
    has[lead] = true;
  }
  // back substitution, last pivot first
  for (std::size_t c = cols; c-- > 0;) {
    if (!has[c]) continue;
    SparseRow& r = echelon[c];
    bool dirty = false;
    for (std::size_t i = 1; i < r.size() && !dirty; ++i) dirty = has[r[i].first];
    if (!dirty) continue;
    for (auto& [k, x] : r) w[k] = x;
    for (std::size_t k = c + 1; k < cols; ++k)
      if (has[k] && sgn(w[k]) != 0) {
        f = w[k];
        sub_row(w, f, echelon[k], tmp);
      }
    r.clear();
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(w[k]) != 0) {
        r.emplace_back(k, w[k]);
        w[k] = 0;
      }
  }
  SparseRref out;
  for (std::size_t c = 0; c < cols; ++c)
    if (has[c]) {
      out.pivots.push_back(c);
      out.rows.push_back(std::move(echelon[c]));
    }
  return out;
}

SparseRref eliminate(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(sparse_row(m, i));
  return eliminate(std::move(rows), m.cols());
}

}  // namespace

Rref rref(const Matrix& m) {
  auto red = eliminate(m);
  Rref out{Matrix(m.rows(), m.cols()), red.pivots};
  for (std::size_t i = 0; i < red.rows.size(); ++i)
    for (const auto& [k, x] : red.rows[i]) out.reduced(i, k) = x;
  return out;
}

std::size_t rank(const Matrix& m) { return eliminate(m).pivots.size(); }

std::size_t rank(const SparseMatrix& m) {
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return eliminate(std::move(rows), m.cols()).pivots.size();
}

// -------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

namespace {

Subspace from_rref(std::size_t ambient_dim, const SparseRref& red) {
  std::vector<Vector> basis;
  for (const auto& r : red.rows) basis.push_back(dense(r, ambient_dim));
  return Subspace::from_echelon(ambient_dim, std::move(basis), red.pivots);
}

}  // namespace

Subspace Subspace::from_echelon(std::size_t ambient_dim, std::vector<Vector> basis, std::vector<std::size_t> pivots) {
  Subspace s(ambient_dim);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  std::vector<SparseRow> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw LinalgError("Subspace::span: generator of wrong length");
    rows.push_back(sparse(g));
  }
  return from_rref(ambient_dim, eliminate(std::move(rows), ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw LinalgError("Subspace: vector of wrong length");
  Vector r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return xah::is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  Vector c(basis_.size());
  Vector r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    c[i] = r[pivots_[i]];
    if (sgn(c[i]) != 0) axpy(r, -c[i], basis_[i]);
  }
  if (!xah::is_zero(r)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

namespace {

Subspace kernel_of(const SparseRref& red, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<SparseRow> gens(n);
  for (std::size_t f = 0; f < n; ++f)
    if (!is_pivot[f]) gens[f].emplace_back(f, Scalar(1));
  for (std::size_t i = 0; i < red.rows.size(); ++i)
    for (const auto& [f, x] : red.rows[i])
      if (!is_pivot[f]) gens[f].emplace_back(red.pivots[i], -x);
  for (auto& g : gens) std::sort(g.begin(), g.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return from_rref(n, eliminate(std::move(gens), n));
}

}  // namespace

Subspace kernel(const Matrix& m) { return kernel_of(eliminate(m), m.cols()); }

Subspace kernel(const SparseMatrix& m) {
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return kernel_of(eliminate(std::move(rows), m.cols()), m.cols());
}

Subspace image(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  std::vector<SparseRow> gens;
  for (std::size_t r = 0; r < t.rows(); ++r) gens.push_back(t.row(r));
  return from_rref(m.rows(), eliminate(std::move(gens), m.rows()));
}

Subspace image(const Matrix& m) {
  std::vector<SparseRow> gens(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) gens[c].emplace_back(r, m(r, c));
  return from_rref(m.rows(), eliminate(std::move(gens), m.rows()));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw LinalgError("solve: right-hand side of wrong length");
  const std::size_t n = m.cols();
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(sparse_row(m, r));
    if (sgn(b[r]) != 0) rows.back().emplace_back(n, b[r]);
  }
  auto red = eliminate(std::move(rows), n + 1);
  Vector x(n, Scalar(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == n) return std::nullopt;
    const auto& last = red.rows[i].back();
    if (last.first == n) x[red.pivots[i]] = last.second;
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw LinalgError("solve: right-hand side of wrong height");
  const std::size_t n = m.cols();
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(sparse_row(m, r));
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(b(r, j)) != 0) rows.back().emplace_back(n + j, b(r, j));
  }
  auto red = eliminate(std::move(rows), n + b.cols());
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] >= n) return std::nullopt;
    for (const auto& [k, v] : red.rows[i])
      if (k >= n) x(red.pivots[i], k - n) = v;
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

// --------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(std::size_t ambient_dim) : relations_(ambient_dim) { init_reps(); }

QuotientSpace::QuotientSpace(std::size_t ambient_dim, const std::vector<Vector>& relations)
    : relations_(Subspace::span(ambient_dim, relations)) {
  init_reps();
}

QuotientSpace::QuotientSpace(Subspace relations) : relations_(std::move(relations)) { init_reps(); }

void QuotientSpace::init_reps() {
  std::vector<bool> is_pivot(relations_.ambient_dim(), false);
  for (auto p : relations_.pivots()) is_pivot[p] = true;
  reps_.clear();
  for (std::size_t i = 0; i < is_pivot.size(); ++i)
    if (!is_pivot[i]) reps_.push_back(i);
}

Vector QuotientSpace::project(const Vector& v) const {
  Vector r = relations_.reduce(v);
  Vector out(reps_.size());
  for (std::size_t j = 0; j < reps_.size(); ++j) out[j] = r[reps_[j]];
  return out;
}

Vector QuotientSpace::lift(const Vector& coords) const {
  if (coords.size() != reps_.size()) throw LinalgError("QuotientSpace::lift: wrong length");
  Vector v(ambient_dim(), Scalar(0));
  for (std::size_t j = 0; j < reps_.size(); ++j) v[reps_[j]] = coords[j];
  return v;
}

Matrix QuotientSpace::projection_matrix() const {
  Matrix p(dim(), ambient_dim());
  for (std::size_t i = 0; i < ambient_dim(); ++i) p.set_col(i, project(unit_vector(ambient_dim(), i)));
  return p;
}

Matrix QuotientSpace::lift_matrix() const {
  Matrix l(ambient_dim(), dim());
  for (std::size_t j = 0; j < reps_.size(); ++j) l(reps_[j], j) = 1;
  return l;
}

std::optional<Matrix> induced_map(const Matrix& f, const QuotientSpace& source,
                                  const QuotientSpace& target) {
  if (f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim())
    throw LinalgError("induced_map: shape mismatch");
  for (const auto& rel : source.relations().basis())
    if (!target.relations().contains(f.apply(rel))) return std::nullopt;
  Matrix out(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j)
    out.set_col(j, target.project(f.col(source.representative_indices()[j])));
  return out;
}

}  // namespace xah
