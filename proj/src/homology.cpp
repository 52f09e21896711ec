#include "xah/homology.hpp"

#include <functional>

namespace xah {

namespace {

std::size_t available_rank(const FreeResolution& p, std::size_t n) {
  if (n <= p.complex.top()) return p.rank(n);
  if (p.finite_length) return 0;
  throw WindowExceeded("resolution " + p.name + " has no term in degree " + std::to_string(n));
}

std::vector<std::vector<std::pair<std::size_t, Elem>>> rows_or_empty(const FreeResolution& p, std::size_t n) {
  if (n <= p.complex.top()) return p.complex.rows(n);
  return {};
}

}  // namespace

ChainComplex hom_complex(const FreeResolution& p, const Representation& m, std::size_t max_degree) {
  if (m.side() != p.complex.side) throw AlgebraError("hom_complex: module and resolution on different sides");
  p.require(max_degree);
  const std::size_t dm = m.dim();
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> ds;
  for (std::size_t k = 0; k <= max_degree + 1; ++k) dims.push_back(available_rank(p, max_degree + 1 - k) * dm);
  for (std::size_t k = 1; k <= max_degree + 1; ++k) {
    const std::size_t n = max_degree + 1 - k;  // δ : Hom(P_n) → Hom(P_{n+1})
    SparseMatrix d(dims[k - 1], dims[k]);
    auto rows = rows_or_empty(p, n + 1);
    for (std::size_t s = 0; s < rows.size(); ++s)
      for (const auto& [t, e] : rows[s]) d.add_block(s * dm, t * dm, m.act(e));
    ds.push_back(std::move(d));
  }
  return ChainComplex(-int(max_degree) - 1, std::move(dims), std::move(ds));
}

ChainComplex tensor_complex(const Representation& n, const FreeResolution& p, std::size_t max_degree) {
  if (n.side() == p.complex.side) throw AlgebraError("tensor_complex: module and resolution on the same side");
  p.require(max_degree);
  const std::size_t dn = n.dim();
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> ds;
  for (std::size_t k = 0; k <= max_degree + 1; ++k) dims.push_back(available_rank(p, k) * dn);
  for (std::size_t k = 1; k <= max_degree + 1; ++k) {
    SparseMatrix d(dims[k - 1], dims[k]);
    auto rows = rows_or_empty(p, k);
    for (std::size_t s = 0; s < rows.size(); ++s)
      for (const auto& [t, e] : rows[s]) d.add_block(t * dn, s * dn, n.act(e));
    ds.push_back(std::move(d));
  }
  return ChainComplex(0, std::move(dims), std::move(ds));
}

// ---------------------------------------------------------------- groups

ExtGroups::ExtGroups(const FreeResolution& p, Representation m, std::size_t max_degree)
    : p_(&p), m_(std::move(m)), complex_(hom_complex(p, m_, max_degree)) {
  for (std::size_t n = 0; n <= max_degree; ++n) groups_.push_back(homology(complex_, -int(n)));
}

const HomologyGroup& ExtGroups::group(std::size_t n) const {
  if (n >= groups_.size()) throw WindowExceeded("Ext degree " + std::to_string(n) + " was not computed");
  return groups_[n];
}

std::vector<std::size_t> ExtGroups::dims() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups_) out.push_back(g.dim());
  return out;
}

Vector ExtGroups::coboundary(std::size_t n, const Vector& cochain) const { return complex_.d(-int(n)).apply(cochain); }

TorGroups::TorGroups(Representation n, const FreeResolution& p, std::size_t max_degree)
    : p_(&p), n_(std::move(n)), complex_(tensor_complex(n_, p, max_degree)) {
  for (std::size_t k = 0; k <= max_degree; ++k) groups_.push_back(homology(complex_, int(k)));
}

const HomologyGroup& TorGroups::group(std::size_t k) const {
  if (k >= groups_.size()) throw WindowExceeded("Tor degree " + std::to_string(k) + " was not computed");
  return groups_[k];
}

std::vector<std::size_t> TorGroups::dims() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups_) out.push_back(g.dim());
  return out;
}

Vector TorGroups::boundary(std::size_t k, const Vector& chain) const { return complex_.d(int(k)).apply(chain); }

// ------------------------------------------------------------ degree zero

Subspace module_hom(const Representation& x, const Representation& y) {
  if (x.side() != y.side()) throw AlgebraError("module_hom: modules on different sides");
  const std::size_t dx = x.dim(), dy = y.dim();
  std::vector<Vector> eqs;
  for (const auto& [g, xg] : x.generator_action()) {
    const Matrix& yg = y.generator_action().at(g);
    // F X_g − Y_g F, one equation per entry
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t j = 0; j < dx; ++j) {
        Vector eq(dy * dx, Scalar(0));
        for (std::size_t k = 0; k < dx; ++k) eq[i * dx + k] += xg(k, j);
        for (std::size_t k = 0; k < dy; ++k) eq[k * dx + j] -= yg(i, k);
        if (!is_zero(eq)) eqs.push_back(std::move(eq));
      }
  }
  if (eqs.empty()) return Subspace::full(dy * dx);
  return kernel(Matrix::from_rows(eqs, dy * dx));
}

QuotientSpace module_tensor(const Representation& n, const Representation& m) {
  if (n.side() != Side::Right || m.side() != Side::Left) throw AlgebraError("module_tensor: need N right, M left");
  std::vector<Vector> rels;
  const Matrix in = Matrix::identity(n.dim()), im = Matrix::identity(m.dim());
  for (const auto& [g, ng] : n.generator_action()) {
    Matrix r = kron(ng, im) - kron(in, m.generator_action().at(g));
    for (std::size_t c = 0; c < r.cols(); ++c) {
      Vector v = r.col(c);
      if (!is_zero(v)) rels.push_back(std::move(v));
    }
  }
  return QuotientSpace(n.dim() * m.dim(), rels);
}

// ---------------------------------------------------------- comparisons

Matrix compare_ext(const ChainLift& comparison, const ExtGroups& ext_q, const ExtGroups& ext_p, std::size_t n) {
  const Representation& m = ext_p.module();
  const std::size_t dm = m.dim();
  const std::size_t rp = ext_p.group(n).cycles.ambient_dim() / std::max<std::size_t>(dm, 1);
  const std::size_t rq = ext_q.group(n).cycles.ambient_dim() / std::max<std::size_t>(dm, 1);
  Matrix pull(rp * dm, rq * dm);
  if (n < comparison.images.size())
    for (std::size_t s = 0; s < comparison.images[n].size(); ++s)
      for (const auto& [t, e] : comparison.images[n][s]) pull.set_block(s * dm, t * dm, m.act(e));
  Matrix out(ext_p.dim(n), ext_q.dim(n));
  for (std::size_t i = 0; i < ext_q.dim(n); ++i) {
    auto c = ext_p.classify(n, pull.apply(ext_q.representative(n, i)));
    if (!c) throw LiftFailed("comparison map does not send cocycles to cocycles");
    out.set_col(i, *c);
  }
  return out;
}

bool ResolutionComparison::pass() const {
  if (dims_p != dims_q) return false;
  for (bool b : bijective)
    if (!b) return false;
  for (bool b : round_trip_identity)
    if (!b) return false;
  return true;
}

ResolutionComparison resolution_independence(const FreeResolution& p, const FreeResolution& q, const Representation& m,
                                             std::size_t max_degree) {
  ChainLift f = lift_chain_map(p, q, 0, p.augmentation, max_degree);
  ChainLift g = lift_chain_map(q, p, 0, q.augmentation, max_degree);
  ExtGroups ext_p(p, m, max_degree), ext_q(q, m, max_degree);
  ResolutionComparison out;
  out.dims_p = ext_p.dims();
  out.dims_q = ext_q.dims();
  for (std::size_t n = 0; n <= max_degree; ++n) {
    Matrix a = compare_ext(f, ext_q, ext_p, n);  // Q classes → P classes
    Matrix b = compare_ext(g, ext_p, ext_q, n);
    const bool square = a.rows() == a.cols();
    out.bijective.push_back(square && a * b == Matrix::identity(a.rows()) && b * a == Matrix::identity(a.cols()));
    out.round_trip_identity.push_back(square && a * b == Matrix::identity(a.rows()));
  }
  return out;
}

// ------------------------------------------------------ weight-graded bar

std::vector<std::size_t> weight_graded_bar_ext(const PBWRing& ring, std::size_t max_degree, std::size_t max_weight) {
  if (!ring.lie().is_abelian()) throw AlgebraError("weight-graded bar: the PBW product is graded only for abelian g");
  std::vector<std::size_t> total(max_degree + 1, 0);
  for (std::size_t w = 0; w <= max_weight; ++w) {
    const std::size_t nb = ring.basis_size(w);
    // tuples[n]: length-n tuples of monomials of total weight w
    std::vector<std::vector<std::vector<std::size_t>>> tuples(max_degree + 2);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(max_degree + 2);
    for (std::size_t n = 0; n <= max_degree + 1; ++n) {
      std::vector<std::size_t> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (cur.size() == n) {
          if (left == 0) tuples[n].push_back(cur);
          return;
        }
        for (std::size_t b = 0; b < nb; ++b) {
          if (ring.degree(b) > left) continue;
          cur.push_back(b);
          rec(left - ring.degree(b));
          cur.pop_back();
        }
      };
      rec(w);
      for (std::size_t i = 0; i < tuples[n].size(); ++i) index[n][tuples[n][i]] = i;
    }
    // δ_n : C^n → C^{n+1}
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      Matrix d(tuples[n + 1].size(), tuples[n].size());
      for (std::size_t r = 0; r < tuples[n + 1].size(); ++r) {
        const auto& t = tuples[n + 1][r];
        if (t.front() == 0) d(r, index[n].at(std::vector<std::size_t>(t.begin() + 1, t.end()))) += 1;
        for (std::size_t i = 1; i <= n; ++i)
          for (const auto& [b, c] : ring.multiply_basis(t[i - 1], t[i])) {
            std::vector<std::size_t> merged(t.begin(), t.begin() + (i - 1));
            merged.push_back(b);
            merged.insert(merged.end(), t.begin() + i + 1, t.end());
            d(r, index[n].at(merged)) += i % 2 == 0 ? c : Scalar(-c);
          }
        if (t.back() == 0)
          d(r, index[n].at(std::vector<std::size_t>(t.begin(), t.end() - 1))) += (n + 1) % 2 == 0 ? 1 : -1;
      }
      ranks.push_back(d.rows() == 0 || d.cols() == 0 ? 0 : rank(d));
    }
    for (std::size_t n = 0; n <= max_degree; ++n)
      total[n] += tuples[n].size() - ranks[n] - (n == 0 ? 0 : ranks[n - 1]);
  }
  return total;
}

}  // namespace xah
