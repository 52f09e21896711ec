#include "xah/complexes.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <mutex>
#include <tuple>

namespace xah {

// ----------------------------------------------------------- ChainComplex

namespace {

std::vector<SparseMatrix> to_sparse(const std::vector<Matrix>& ms) {
  std::vector<SparseMatrix> out;
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

}  // namespace

ChainComplex::ChainComplex(int lowest, std::vector<std::size_t> dims, const std::vector<Matrix>& differentials)
    : ChainComplex(lowest, std::move(dims), to_sparse(differentials)) {}

ChainComplex::ChainComplex(int lowest, std::vector<std::size_t> dims, std::vector<SparseMatrix> differentials)
    : lowest_(lowest), dims_(std::move(dims)) {
  if (dims_.empty()) throw LinalgError("chain complex without degrees");
  if (differentials.size() + 1 != dims_.size())
    throw LinalgError("chain complex: expected one differential between consecutive degrees");
  d_.push_back(SparseMatrix(0, dims_.front()));
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    SparseMatrix& m = differentials[k - 1];
    if (m.rows() != dims_[k - 1] || m.cols() != dims_[k])
      throw LinalgError("chain complex: differential at degree " + std::to_string(lowest_ + int(k)) +
                        " has the wrong shape");
    d_.push_back(std::move(m));
  }
  d_.push_back(SparseMatrix(dims_.back(), 0));
  for (std::size_t k = 2; k < dims_.size(); ++k)
    if (!(d_[k - 1] * d_[k]).is_zero())
      throw LinalgError("chain complex: d∘d ≠ 0 at degree " + std::to_string(lowest_ + int(k)));
}

std::size_t ChainComplex::dim(int n) const {
  if (n < lowest_ || n > highest()) return 0;
  return dims_[n - lowest_];
}

const SparseMatrix& ChainComplex::d(int n) const {
  if (n < lowest_ || n > highest() + 1) throw LinalgError("chain complex: no differential at this degree");
  return d_[n - lowest_];
}

Vector HomologyGroup::representative(std::size_t i) const {
  Vector coords = quotient.lift(unit_vector(dim(), i));
  Vector v(cycles.ambient_dim(), Scalar(0));
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) axpy(v, coords[k], cycles.basis()[k]);
  return v;
}

std::optional<Vector> HomologyGroup::classify(const Vector& v) const {
  auto c = cycles.coordinates(v);
  if (!c) return std::nullopt;
  return quotient.project(*c);
}

HomologyGroup homology(const ChainComplex& c, int n) {
  HomologyGroup h;
  h.degree = n;
  const std::size_t dn = c.dim(n);
  if (dn == 0) {
    h.cycles = Subspace(0);
    h.boundaries = Subspace(0);
    h.quotient = QuotientSpace(0);
    return h;
  }
  const SparseMatrix& out = c.d(n);
  h.cycles = out.rows() == 0 ? Subspace::full(dn) : kernel(out);
  const SparseMatrix& in = c.d(n + 1);
  h.boundaries = in.cols() == 0 ? Subspace(dn) : image(in);
  std::vector<Vector> rel;
  for (const auto& b : h.boundaries.basis()) {
    auto coords = h.cycles.coordinates(b);
    if (!coords) throw LinalgError("homology: boundary is not a cycle");
    rel.push_back(*coords);
  }
  h.quotient = QuotientSpace(h.cycles.dim(), rel);
  return h;
}

ChainComplex shift(const ChainComplex& c, int m) {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> ds;
  const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
  for (int n = c.lowest(); n <= c.highest(); ++n) {
    dims.push_back(c.dim(n));
    if (n > c.lowest()) ds.push_back(sign * c.d(n));
  }
  return ChainComplex(c.lowest() + m, std::move(dims), std::move(ds));
}

// ---------------------------------------------------------- DoubleComplex

std::size_t DoubleComplex::dim(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

Matrix DoubleComplex::h(Bidegree b) const {
  auto it = horizontal.find(b);
  if (it != horizontal.end()) return it->second;
  return Matrix(dim({b.first - 1, b.second}), dim(b));
}

Matrix DoubleComplex::v(Bidegree b) const {
  auto it = vertical.find(b);
  if (it != vertical.end()) return it->second;
  return Matrix(dim({b.first, b.second - 1}), dim(b));
}

void DoubleComplex::check() const {
  for (const auto& [b, n] : dims) {
    auto [i, j] = b;
    Matrix hh = h(b), vv = v(b);
    if (hh.rows() != dim({i - 1, j}) || hh.cols() != n || vv.rows() != dim({i, j - 1}) || vv.cols() != n)
      throw LinalgError("double complex: differential of the wrong shape");
    if (!(h({i - 1, j}) * hh).is_zero()) throw LinalgError("double complex: horizontal d² ≠ 0");
    if (!(v({i, j - 1}) * vv).is_zero()) throw LinalgError("double complex: vertical d² ≠ 0");
    if (!(h({i, j - 1}) * vv == v({i - 1, j}) * hh)) throw LinalgError("double complex: squares do not commute");
  }
}

TotalComplex totalize(const DoubleComplex& dc) {
  dc.check();
  TotalComplex t;
  if (dc.dims.empty()) {
    t.complex = ChainComplex(0, {0}, std::vector<SparseMatrix>{});
    return t;
  }
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [b, n] : dc.dims) {
    lo = std::min(lo, b.first + b.second);
    hi = std::max(hi, b.first + b.second);
  }
  std::map<int, std::vector<Bidegree>> blocks;
  for (const auto& [b, n] : dc.dims) blocks[b.first + b.second].push_back(b);  // map order: increasing i
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) {
    std::size_t off = 0;
    for (const Bidegree& b : blocks[n]) {
      t.offset[b] = off;
      off += dc.dim(b);
    }
    dims.push_back(off);
  }
  std::vector<Matrix> ds;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(dims[n - 1 - lo], dims[n - lo]);
    for (const Bidegree& b : blocks[n]) {
      auto [i, j] = b;
      Bidegree left{i - 1, j}, down{i, j - 1};
      if (dc.dim(left) > 0) d.set_block(t.offset[left], t.offset[b], dc.h(b));
      if (dc.dim(down) > 0) d.set_block(t.offset[down], t.offset[b], (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * dc.v(b));
    }
    ds.push_back(std::move(d));
  }
  t.complex = ChainComplex(lo, std::move(dims), std::move(ds));
  return t;
}

DoubleComplex transpose(const DoubleComplex& dc) {
  DoubleComplex out;
  for (const auto& [b, n] : dc.dims) out.dims[{b.second, b.first}] = n;
  for (const auto& [b, m] : dc.horizontal) out.vertical[{b.second, b.first}] = m;
  for (const auto& [b, m] : dc.vertical) out.horizontal[{b.second, b.first}] = m;
  return out;
}

// ------------------------------------------------------------ FreeComplex

std::vector<std::vector<std::pair<std::size_t, Elem>>> FreeComplex::rows(std::size_t n) const {
  std::vector<std::vector<std::pair<std::size_t, Elem>>> out(rank(n));
  if (n == 0 || n >= edges.size()) return out;
  for (const Edge& e : edges[n]) out[e.source].push_back({e.target, e.coef});
  return out;
}

void FreeComplex::check() const {
  if (edges.size() != ranks.size()) throw LinalgError("free complex: expected one edge list per degree");
  for (std::size_t n = 1; n < ranks.size(); ++n)
    for (const Edge& e : edges[n])
      if (e.source >= ranks[n] || e.target >= ranks[n - 1]) throw LinalgError("free complex: edge out of range");
  for (std::size_t n = 2; n < ranks.size(); ++n) {
    auto upper = rows(n);
    auto lower = rows(n - 1);
    for (std::size_t s = 0; s < upper.size(); ++s) {
      std::map<std::size_t, Elem> acc;
      for (const auto& [t, e] : upper[s])
        for (const auto& [u, f] : lower[t]) add_to(acc[u], 1, side == Side::Left ? ring->multiply(e, f) : ring->multiply(f, e));
      for (const auto& [u, x] : acc)
        if (!is_zero(x))
          throw LinalgError("free complex: d∘d ≠ 0 at degree " + std::to_string(n) + ", generator " +
                            std::to_string(s));
    }
  }
}

FreeComplex dual(const FreeComplex& c) {
  FreeComplex q;
  q.ring = c.ring;
  q.side = c.side == Side::Left ? Side::Right : Side::Left;
  const std::size_t top = c.top();
  for (std::size_t m = 0; m <= top; ++m) q.ranks.push_back(c.ranks[top - m]);
  q.edges.assign(top + 1, {});
  for (std::size_t m = 1; m <= top; ++m)
    for (const Edge& e : c.edges[top - m + 1]) q.edges[m].push_back({e.target, e.source, e.coef});
  for (auto& list : q.edges)
    std::stable_sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) {
      return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
  return q;
}

std::size_t coefficient_degree(const FreeComplex& c, std::size_t n) {
  std::size_t g = 0;
  if (n < c.edges.size())
    for (const Edge& e : c.edges[n]) g = std::max(g, c.ring->max_degree(e.coef));
  return g;
}

Matrix underlying_differential(const FreeComplex& c, std::size_t n, std::size_t source_bound,
                               std::size_t target_bound) {
  const HopfRing& ring = *c.ring;
  const std::size_t rs = c.rank(n), rt = c.rank(n - 1);
  const std::size_t ns = ring.basis_size(source_bound), nt = ring.basis_size(target_bound);
  Matrix m(nt * rt, ns * rs);
  if (n == 0 || n >= c.edges.size()) return m;
  for (const Edge& e : c.edges[n])
    for (std::size_t b = 0; b < ns; ++b) {
      Elem img = c.side == Side::Left ? ring.multiply(basis_elem(b), e.coef) : ring.multiply(e.coef, basis_elem(b));
      for (const auto& [w, x] : img) {
        if (w >= nt) throw LinalgError("underlying_differential: image leaves the target filtration");
        m(w * rt + e.target, b * rs + e.source) += x;
      }
    }
  return m;
}

// --------------------------------------------------------- FreeResolution

std::size_t FreeResolution::window() const {
  if (finite_length) return std::numeric_limits<std::size_t>::max();
  return complex.top() == 0 ? 0 : complex.top() - 1;
}

void FreeResolution::require(std::size_t n) const {
  if (n > window())
    throw WindowExceeded("degree " + std::to_string(n) + " is outside the certified window [0, " +
                         std::to_string(window()) + "] of resolution " + name);
}

void FreeResolution::check() const {
  if (complex.side != Side::Left) throw LinalgError("resolution: expected left modules");
  complex.check();
  if (augmentation.size() != complex.rank(0)) throw LinalgError("resolution: augmentation of wrong length");
  Representation a = base_module(complex.ring);
  for (const auto& row : complex.rows(1)) {
    Vector acc(a.dim(), Scalar(0));
    for (const auto& [t, e] : row) axpy(acc, 1, a.apply(e, augmentation[t]));
    if (!is_zero(acc)) throw LinalgError("resolution: ε∘d ≠ 0");
  }
}

// -------------------------------------------------------------------- bar

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::size_t>::max() / b) throw LinalgError("bar resolution: size overflow");
    r *= b;
  }
  return r;
}

}  // namespace

struct BarResolution::RowCache {
  std::mutex lock;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Elem>>> rows;
};

const FinDimHopfRing& BarResolution::fin() const { return static_cast<const FinDimHopfRing&>(*ring_); }

BarResolution::BarResolution(RingPtr ring, std::size_t depth) : ring_(std::move(ring)), depth_(depth) {
  if (!std::dynamic_pointer_cast<const FinDimHopfRing>(ring_))
    throw LinalgError("bar resolution: ring must be finite-dimensional");
  const BialgebroidData& d = fin().hopf().parent();
  const FinDimAlgebra& U = d.U();
  const std::size_t nu = d.dim_u(), na = d.dim_a();

  // A basis of U as a free left module over η(1⊗A), sources first.
  std::vector<Vector> candidates;
  for (std::size_t a = 0; a < na; ++a) candidates.push_back(d.source(d.A().basis_vector(a)));
  for (std::size_t i = 0; i < nu; ++i) candidates.push_back(U.basis_vector(i));
  Subspace covered(nu);
  std::vector<Vector> columns;
  for (const Vector& v : candidates) {
    if (covered.dim() == nu) break;
    std::vector<Vector> orbit;
    for (std::size_t a = 0; a < na; ++a) orbit.push_back(U.multiply(d.target(d.A().basis_vector(a)), v));
    Subspace bigger = covered.sum(Subspace::span(nu, orbit));
    if (bigger.dim() != covered.dim() + na) continue;
    covered = bigger;
    v_.push_back(v);
    for (auto& o : orbit) columns.push_back(std::move(o));
  }
  if (covered.dim() != nu)
    throw NotProjective("U is not free as a left module over η(1⊗A); the bar terms have no free basis");
  r_ = v_.size();
  auto inv = inverse(Matrix::from_columns(columns, nu));
  if (!inv) throw NotProjective("free basis over η(1⊗A) is not independent");
  decompose_ = *inv;

  rows_ = std::make_shared<RowCache>();

  res_.name = "bar";
  res_.complex.ring = ring_;
  res_.complex.side = Side::Left;
  for (std::size_t n = 0; n <= depth_; ++n) res_.complex.ranks.push_back(ipow(r_, n));
  res_.complex.edges.assign(depth_ + 1, {});
  for (std::size_t n = 1; n <= depth_; ++n)
    for (std::size_t g = 0; g < res_.complex.ranks[n]; ++g)
      for (auto& [t, e] : generator_row(n, g)) res_.complex.edges[n].push_back({g, t, std::move(e)});
  res_.augmentation = {d.A().unit()};
  res_.finite_length = false;
}

std::size_t BarResolution::dim(std::size_t n) const { return fin().dim() * ipow(r_, n); }

BarResolution::Sparse BarResolution::normalize(const std::vector<Vector>& factors) const {
  const BialgebroidData& d = fin().hopf().parent();
  const FinDimAlgebra& U = d.U();
  const std::size_t na = d.dim_a();
  const std::size_t n = factors.size() - 1;
  std::map<std::size_t, Vector> terms{{0, factors[n]}};
  std::size_t len = 0;
  for (std::size_t i = n; i >= 1; --i) {
    std::map<std::size_t, Vector> next;
    const std::size_t weight = ipow(r_, len);
    for (const auto& [suffix, cur] : terms) {
      if (is_zero(cur)) continue;
      Vector coords = decompose_.apply(cur);
      for (std::size_t g = 0; g < r_; ++g) {
        Vector a(coords.begin() + g * na, coords.begin() + (g + 1) * na);
        if (is_zero(a)) continue;
        Vector moved = U.multiply(factors[i - 1], d.target(a));
        auto [it, fresh] = next.emplace(g * weight + suffix, moved);
        if (!fresh) axpy(it->second, 1, moved);
      }
    }
    terms = std::move(next);
    ++len;
  }
  Sparse out;
  const std::size_t block = ipow(r_, n);
  for (const auto& [suffix, cur] : terms)
    for (std::size_t u = 0; u < cur.size(); ++u)
      if (sgn(cur[u]) != 0) add_to(out, cur[u], basis_elem(u * block + suffix));
  return out;
}

std::vector<std::pair<std::size_t, Elem>> BarResolution::generator_row(std::size_t n, std::size_t gamma) const {
  RowCache* cache = rows_.get();
  {
    std::lock_guard<std::mutex> g(cache->lock);
    auto it = cache->rows.find({n, gamma});
    if (it != cache->rows.end()) return it->second;
  }
  const BialgebroidData& d = fin().hopf().parent();
  const FinDimAlgebra& U = d.U();
  std::vector<Vector> u(n + 1);
  u[0] = U.unit();
  std::size_t rest = gamma;
  for (std::size_t i = n; i >= 1; --i) {
    u[i] = v_[rest % r_];
    rest /= r_;
  }
  Sparse acc;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> f;
    for (std::size_t k = 0; k < i; ++k) f.push_back(u[k]);
    f.push_back(U.multiply(u[i], u[i + 1]));
    for (std::size_t k = i + 2; k <= n; ++k) f.push_back(u[k]);
    add_to(acc, i % 2 == 0 ? 1 : -1, normalize(f));
  }
  {
    // (−1)ⁿ u_0 ⊗ … ⊗ ε(u_n) ▶ u_{n−1}
    std::vector<Vector> f(u.begin(), u.begin() + n);
    f.back() = U.multiply(f.back(), d.target(d.counit(u[n])));
    add_to(acc, n % 2 == 0 ? 1 : -1, normalize(f));
  }
  const std::size_t block = ipow(r_, n - 1);
  std::map<std::size_t, Elem> grouped;
  for (const auto& [key, c] : acc) grouped[key % block][key / block] = c;
  std::vector<std::pair<std::size_t, Elem>> row(grouped.begin(), grouped.end());
  std::lock_guard<std::mutex> g(cache->lock);
  cache->rows.emplace(std::make_pair(n, gamma), row);
  return row;
}

BarResolution::Sparse BarResolution::boundary(std::size_t n, const Sparse& x) const {
  if (n == 0) throw LinalgError("bar boundary: use augment in degree 0");
  const std::size_t block = ipow(r_, n), lower = ipow(r_, n - 1);
  Sparse out;
  for (const auto& [key, c] : x) {
    std::size_t u = key / block, g = key % block;
    for (const auto& [t, e] : generator_row(n, g)) {
      Elem prod = ring_->multiply(basis_elem(u), e);
      for (const auto& [w, y] : prod) add_to(out, c * y, basis_elem(w * lower + t));
    }
  }
  return out;
}

BarResolution::Sparse BarResolution::homotopy(std::size_t n, const Sparse& x) const {
  const BialgebroidData& d = fin().hopf().parent();
  const std::size_t na = d.dim_a(), nu = d.dim_u();
  const std::size_t block = ipow(r_, n), upper = ipow(r_, n + 1);
  Sparse out;
  for (const auto& [key, c] : x) {
    std::size_t u = key / block, g = key % block;
    Vector coords = decompose_.apply(unit_vector(nu, u));
    for (std::size_t dl = 0; dl < r_; ++dl) {
      Vector a(coords.begin() + dl * na, coords.begin() + (dl + 1) * na);
      if (is_zero(a)) continue;
      Vector t = d.target(a);
      for (std::size_t w = 0; w < nu; ++w)
        if (sgn(t[w]) != 0) add_to(out, c * t[w], basis_elem(w * upper + dl * block + g));
    }
  }
  return out;
}

Vector BarResolution::augment(const Sparse& x) const {
  const BialgebroidData& d = fin().hopf().parent();
  Vector out(d.dim_a(), Scalar(0));
  for (const auto& [u, c] : x) axpy(out, c, d.counit(d.U().basis_vector(u)));
  return out;
}

BarResolution::Sparse BarResolution::unit_section(const Vector& a) const {
  return to_elem(fin().hopf().parent().target(a));
}

BarResolution::Report BarResolution::check_contractible(std::size_t max_degree) const {
  Report rep;
  auto fail = [&](std::string msg) {
    if (rep.failures.size() < 10) rep.failures.push_back(std::move(msg));
  };
  const std::size_t na = fin().hopf().parent().dim_a();
  for (std::size_t a = 0; a < na; ++a) {
    Vector e = unit_vector(na, a);
    if (augment(unit_section(e)) != e) fail("ε s ≠ id on A");
    ++rep.checked;
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    for (std::size_t k = 0; k < dim(n); ++k) {
      Sparse x = basis_elem(k);
      Sparse lhs = boundary(n + 1, homotopy(n, x));
      if (n == 0)
        add_to(lhs, 1, unit_section(augment(x)));
      else
        add_to(lhs, 1, homotopy(n - 1, boundary(n, x)));
      if (lhs != x) fail("b′s + sb′ ≠ id in degree " + std::to_string(n) + " at basis element " + std::to_string(k));
      if (n == 1 && !is_zero(augment(boundary(1, x)))) fail("ε b′ ≠ 0 at basis element " + std::to_string(k));
      if (n >= 2 && !is_zero(boundary(n - 1, boundary(n, x))))
        fail("b′² ≠ 0 in degree " + std::to_string(n) + " at basis element " + std::to_string(k));
      ++rep.checked;
    }
  }
  return rep;
}

// ---------------------------------------------------------- ModuleComplex

void ModuleComplex::check() const {
  for (int n = complex.lowest() + 1; n <= complex.highest(); ++n) {
    auto src = modules.find(n), dst = modules.find(n - 1);
    if (src == modules.end() || dst == modules.end()) continue;
    const Matrix d = complex.d(n).dense();
    for (const auto& [g, a] : src->second.generator_action())
      if (!(d * a == dst->second.generator_action().at(g) * d))
        throw LinalgError("module complex: differential is not a module map at degree " + std::to_string(n));
  }
}

ModuleComplex evaluate(const FreeResolution& p, std::size_t max_degree) {
  const RingPtr& ring = p.ring();
  if (!ring->finite()) throw LinalgError("evaluate: ring must be finite-dimensional");
  if (max_degree > p.complex.top()) throw WindowExceeded("evaluate: resolution too short");
  const std::size_t nu = ring->basis_size(0);
  Representation a = base_module(ring);
  std::vector<std::size_t> dims{a.dim()};
  std::vector<Matrix> ds;
  ModuleComplex mc;
  mc.modules.emplace(-1, a);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t r = p.rank(n);
    dims.push_back(r * nu);
    std::map<std::size_t, Matrix> act;
    for (std::size_t g : ring->generators()) {
      Matrix m(r * nu, r * nu);
      for (std::size_t u = 0; u < nu; ++u)
        for (const auto& [w, c] : ring->multiply_basis(g, u))
          for (std::size_t s = 0; s < r; ++s) m(s * nu + w, s * nu + u) = c;
      act.emplace(g, std::move(m));
    }
    mc.modules.emplace(int(n), Representation(ring, Side::Left, r * nu, std::move(act), "P" + std::to_string(n)));
    if (n == 0) {
      Matrix eps(a.dim(), r * nu);
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t u = 0; u < nu; ++u) eps.set_col(s * nu + u, a.apply(basis_elem(u), p.augmentation[s]));
      ds.push_back(std::move(eps));
    } else {
      Matrix d(p.rank(n - 1) * nu, r * nu);
      auto rows = p.complex.rows(n);
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t u = 0; u < nu; ++u)
          for (const auto& [t, e] : rows[s])
            for (const auto& [w, c] : ring->multiply(basis_elem(u), e)) d(t * nu + w, s * nu + u) += c;
      ds.push_back(std::move(d));
    }
  }
  mc.complex = ChainComplex(-1, std::move(dims), std::move(ds));
  mc.check();
  return mc;
}

TensorResolution tensor_resolution(const ModuleComplex& p, std::size_t max_degree) {
  if (p.complex.highest() < int(max_degree)) throw WindowExceeded("tensor_resolution: input too short");
  const Representation& a = p.modules.at(-1);
  const RingPtr& ring = a.ring();
  TensorResolution out;
  std::vector<std::size_t> dims{a.dim()};
  std::vector<Matrix> ds;
  out.complex.modules.emplace(-1, a);
  for (int n = 0; n <= int(max_degree); ++n) {
    std::size_t off = 0;
    for (int i = 0; i <= n; ++i) {
      TensorModule tm = tensor_left(p.modules.at(i), p.modules.at(n - i));
      std::size_t dim = tm.dim();
      out.blocks[n].push_back({i, n - i, off, std::move(tm)});
      off += dim;
    }
    dims.push_back(off);
    std::map<std::size_t, Matrix> act;
    for (std::size_t g : ring->generators()) {
      Matrix m(off, off);
      for (const auto& b : out.blocks[n]) m.set_block(b.offset, b.offset, b.product.module.generator_action().at(g));
      act.emplace(g, std::move(m));
    }
    out.complex.modules.emplace(n, Representation(ring, Side::Left, off, std::move(act), "Tot" + std::to_string(n)));

    if (n == 0) {
      const auto& b = out.blocks[0].front();
      TensorModule aa = tensor_left(a, a);
      const Matrix eps = p.complex.d(0).dense();
      Matrix amb = left_unitor(aa, a) * aa.space.projection_matrix() * kron(eps, eps);
      auto ind = induced_map(amb, b.product.space, QuotientSpace(a.dim()));
      if (!ind) throw NotWellDefined("tensor_resolution: augmentation does not descend");
      ds.push_back(*ind);
      continue;
    }
    Matrix d(dims[n], off);
    for (const auto& b : out.blocks[n]) {
      const std::size_t li = p.modules.at(b.i).dim(), lj = p.modules.at(b.j).dim();
      for (const auto& c : out.blocks[n - 1]) {
        Matrix amb;
        if (c.i == b.i - 1 && c.j == b.j) {
          amb = kron(p.complex.d(b.i).dense(), Matrix::identity(lj));
        } else if (c.i == b.i && c.j == b.j - 1) {
          amb = (b.i % 2 == 0 ? Scalar(1) : Scalar(-1)) * kron(Matrix::identity(li), p.complex.d(b.j).dense());
        } else {
          continue;
        }
        auto ind = induced_map(amb, b.product.space, c.product.space);
        if (!ind) throw NotWellDefined("tensor_resolution: differential does not descend");
        d.set_block(c.offset, b.offset, *ind);
      }
    }
    ds.push_back(std::move(d));
  }
  out.complex.complex = ChainComplex(-1, std::move(dims), std::move(ds));
  out.complex.check();
  return out;
}

// ------------------------------------------------------------- chain maps

namespace {

using Key = std::pair<std::size_t, std::size_t>;  // (generator, basis)

std::optional<std::vector<std::pair<std::size_t, Elem>>> solve_free(
    const HopfRing& ring, std::size_t rank, std::size_t bound,
    const std::function<std::map<Key, Scalar>(std::size_t gen, std::size_t basis)>& column,
    const std::map<Key, Scalar>& rhs) {
  const std::size_t nb = ring.basis_size(bound);
  std::vector<std::map<Key, Scalar>> cols;
  std::map<Key, std::size_t> row_of;
  for (const auto& [k, c] : rhs) row_of.emplace(k, 0);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t t = 0; t < rank; ++t) {
      cols.push_back(column(t, b));
      for (const auto& [k, c] : cols.back()) row_of.emplace(k, 0);
    }
  std::size_t idx = 0;
  for (auto& [k, r] : row_of) r = idx++;
  Matrix m(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j]) m(row_of[k], j) += c;
  Vector b(row_of.size(), Scalar(0));
  for (const auto& [k, c] : rhs) b[row_of[k]] += c;
  auto x = solve(m, b);
  if (!x) return std::nullopt;
  std::map<std::size_t, Elem> per_gen;
  for (std::size_t bb = 0; bb < nb; ++bb)
    for (std::size_t t = 0; t < rank; ++t) {
      const Scalar& c = (*x)[bb * rank + t];
      if (sgn(c) != 0) per_gen[t][bb] = c;
    }
  return std::vector<std::pair<std::size_t, Elem>>(per_gen.begin(), per_gen.end());
}

}  // namespace

ChainLift lift_chain_map(const FreeResolution& p, const FreeResolution& q, std::size_t m,
                         const std::vector<Vector>& values, std::size_t depth) {
  const RingPtr& ring = p.ring();
  const HopfRing& R = *ring;
  if (values.size() != p.rank(m)) throw LinalgError("lift_chain_map: one value per generator expected");
  Representation a = base_module(ring);
  const Scalar sign = m % 2 == 0 ? Scalar(1) : Scalar(-1);
  ChainLift f;
  f.shift = m;
  for (std::size_t k = 0; k <= depth && m + k <= p.complex.top() && k <= q.complex.top(); ++k) {
    std::vector<std::vector<std::pair<std::size_t, Elem>>> imgs(p.rank(m + k));
    auto prow = p.complex.rows(m + k);
    auto qrow = q.complex.rows(k);
    for (std::size_t s = 0; s < p.rank(m + k); ++s) {
      std::map<Key, Scalar> rhs;
      std::size_t rhs_degree = 0;
      std::function<std::map<Key, Scalar>(std::size_t, std::size_t)> column;
      if (k == 0) {
        for (std::size_t i = 0; i < a.dim(); ++i)
          if (sgn(values[s][i]) != 0) rhs[{i, 0}] = values[s][i];
        column = [&](std::size_t t, std::size_t b) {
          std::map<Key, Scalar> col;
          Vector v = a.apply(basis_elem(b), q.augmentation[t]);
          for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) col[{i, 0}] = v[i];
          return col;
        };
      } else {
        for (const auto& [u, e] : prow[s])
          for (const auto& [t, g] : f.images[k - 1][u])
            for (const auto& [w, c] : R.multiply(e, g)) {
              Scalar& x = rhs[{t, w}];
              x += sign * c;
              rhs_degree = std::max(rhs_degree, R.degree(w));
            }
        for (auto it = rhs.begin(); it != rhs.end();) it = sgn(it->second) == 0 ? rhs.erase(it) : std::next(it);
        column = [&](std::size_t t, std::size_t b) {
          std::map<Key, Scalar> col;
          for (const auto& [v, e] : qrow[t])
            for (const auto& [w, c] : R.multiply(basis_elem(b), e)) col[{v, w}] += c;
          return col;
        };
      }
      std::optional<std::vector<std::pair<std::size_t, Elem>>> sol;
      const std::size_t last = R.finite() ? 0 : rhs_degree + 1;
      for (std::size_t bound = 0; bound <= last && !sol; ++bound)
        sol = solve_free(R, q.rank(k), bound, column, rhs);
      if (!sol)
        throw LiftFailed("no lift in degree " + std::to_string(k) + " for generator " + std::to_string(s) + " of " +
                         p.name + " into " + q.name);
      imgs[s] = std::move(*sol);
    }
    f.images.push_back(std::move(imgs));
  }
  return f;
}

std::vector<std::vector<Vector>> lift_to_module_complex(const FreeResolution& p, const ModuleComplex& q,
                                                        const Matrix& f, std::size_t max_degree) {
  std::vector<std::vector<Vector>> images;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Vector> imgs;
    auto rows = p.complex.rows(n);
    const Matrix dq = q.complex.d(int(n)).dense();
    for (std::size_t s = 0; s < p.rank(n); ++s) {
      Vector rhs;
      if (n == 0) {
        rhs = f.apply(p.augmentation[s]);
      } else {
        const Representation& below = q.modules.at(int(n) - 1);
        rhs = Vector(below.dim(), Scalar(0));
        for (const auto& [t, e] : rows[s]) axpy(rhs, 1, below.apply(e, images[n - 1][t]));
      }
      auto y = solve(dq, rhs);
      if (!y) throw LiftFailed("no lift into the module complex in degree " + std::to_string(n));
      imgs.push_back(std::move(*y));
    }
    images.push_back(std::move(imgs));
  }
  return images;
}

std::vector<Elem> apply_lift(const RingPtr& ring, const ChainLift& f, std::size_t k, const std::vector<Elem>& x) {
  std::size_t rank = 0;
  for (const auto& img : f.images[k])
    for (const auto& [t, e] : img) rank = std::max(rank, t + 1);
  std::vector<Elem> out(rank);
  for (std::size_t s = 0; s < x.size(); ++s)
    for (const auto& [t, e] : f.images[k][s]) add_to(out[t], 1, ring->multiply(x[s], e));
  return out;
}

// --------------------------------------------------------------- diagonal

Diagonal lift_diagonal(const FreeResolution& p, std::size_t max_degree) {
  ModuleComplex mc = evaluate(p, max_degree);
  TensorResolution tr = tensor_resolution(mc, max_degree);
  const std::size_t na = p.ring()->base_dim(), nu = p.ring()->basis_size(0);
  auto images = lift_to_module_complex(p, tr.complex, Matrix::identity(na), max_degree);
  Diagonal diag;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<std::vector<DiagonalTerm>> level(p.rank(n));
    for (std::size_t s = 0; s < p.rank(n); ++s)
      for (const auto& b : tr.blocks.at(int(n))) {
        Vector seg(images[n][s].begin() + b.offset, images[n][s].begin() + b.offset + b.product.dim());
        if (is_zero(seg)) continue;
        Vector amb = b.product.space.lift(seg);
        const std::size_t rd = b.product.right_dim;
        for (std::size_t k = 0; k < amb.size(); ++k) {
          if (sgn(amb[k]) == 0) continue;
          std::size_t l = k / rd, r = k % rd;
          level[s].push_back({amb[k], std::size_t(b.i), l / nu, l % nu, r / nu, r % nu});
        }
      }
    diag.terms.push_back(std::move(level));
  }
  return diag;
}

bool is_diagonal(const FreeResolution& p, const Diagonal& diag, std::string* witness) {
  const HopfRing& R = *p.ring();
  if (R.base_dim() != 1) throw LinalgError("is_diagonal: only for A = k");
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;
  auto report = [&](std::string msg) {
    if (witness) *witness = std::move(msg);
    return false;
  };
  auto add = [](std::map<Key, Scalar>& m, const Key& k, const Scalar& c) {
    Scalar& x = m[k];
    x += c;
    if (sgn(x) == 0) m.erase(k);
  };
  Representation a = base_module(p.ring());
  for (std::size_t s = 0; s < p.rank(0); ++s) {
    Scalar acc = 0;
    for (const DiagonalTerm& t : diag.terms[0][s])
      acc += t.coef * a.apply(basis_elem(t.left_basis), p.augmentation[t.left_gen])[0] *
             a.apply(basis_elem(t.right_basis), p.augmentation[t.right_gen])[0];
    if (acc != p.augmentation[s][0]) return report("(ε⊗ε)Δ ≠ ε on generator " + std::to_string(s));
  }
  for (std::size_t n = 1; n <= diag.depth() && n <= p.complex.top(); ++n) {
    auto rows = p.complex.rows(n);
    std::vector<std::vector<std::vector<std::pair<std::size_t, Elem>>>> lower;
    for (std::size_t i = 0; i <= n; ++i) lower.push_back(p.complex.rows(i));
    for (std::size_t s = 0; s < p.rank(n); ++s) {
      std::map<Key, Scalar> lhs, rhs;
      for (const DiagonalTerm& t : diag.terms[n][s]) {
        const std::size_t i = t.left_degree, j = n - i;
        if (i >= 1)
          for (const auto& [tg, e] : lower[i][t.left_gen])
            for (const auto& [w, c] : R.multiply(basis_elem(t.left_basis), e))
              add(lhs, {i - 1, tg, w, t.right_gen, t.right_basis}, t.coef * c);
        if (j >= 1)
          for (const auto& [tg, e] : lower[j][t.right_gen])
            for (const auto& [w, c] : R.multiply(basis_elem(t.right_basis), e))
              add(lhs, {i, t.left_gen, t.left_basis, tg, w}, (i % 2 == 0 ? 1 : -1) * t.coef * c);
      }
      for (const auto& [tg, e] : rows[s])
        for (const auto& [w, c] : e)
          for (const Term& cp : R.coproduct(w))
            for (const DiagonalTerm& t : diag.terms[n - 1][tg]) {
              Elem l = R.multiply_basis(cp.left, t.left_basis), r = R.multiply_basis(cp.right, t.right_basis);
              for (const auto& [lw, lc] : l)
                for (const auto& [rw, rc] : r)
                  add(rhs, {t.left_degree, t.left_gen, lw, t.right_gen, rw}, c * cp.coef * t.coef * lc * rc);
            }
      if (lhs != rhs) return report("dΔ ≠ Δd in degree " + std::to_string(n) + " on generator " + std::to_string(s));
    }
  }
  return true;
}

}  // namespace xah
