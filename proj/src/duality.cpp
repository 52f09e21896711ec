#include "xah/duality.hpp"

#include <algorithm>

namespace xah {

namespace {

Vector combine(const Subspace& s, const Vector& coords) {
  Vector v(s.ambient_dim(), Scalar(0));
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) axpy(v, coords[k], s.basis()[k]);
  return v;
}

Vector kron_vec(const Vector& x, const Vector& y) {
  Vector v(x.size() * y.size(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0)
      for (std::size_t j = 0; j < y.size(); ++j) v[i * y.size() + j] = x[i] * y[j];
  return v;
}

Vector coordinates_or_throw(const Subspace& s, const Vector& v, const char* what) {
  auto c = s.coordinates(v);
  if (!c) throw LinalgError(std::string(what) + ": vector outside the subspace");
  return *c;
}

LinearIso make_iso(Matrix forward, Matrix inverse) {
  LinearIso iso{std::move(forward), std::move(inverse), false};
  const std::size_t n = iso.forward.cols();
  iso.bijective = iso.forward.rows() == n && iso.inverse.rows() == n && iso.inverse.cols() == n &&
                  iso.forward * iso.inverse == Matrix::identity(n) && iso.inverse * iso.forward == Matrix::identity(n);
  return iso;
}

LinearIso iso_from_forward(Matrix forward) {
  LinearIso iso{std::move(forward), Matrix(), false};
  if (iso.forward.rows() == iso.forward.cols()) {
    auto inv = inverse(iso.forward);
    if (inv) {
      iso.inverse = *inv;
      iso.bijective = true;
    }
  }
  return iso;
}

}  // namespace

// ------------------------------------------------------------- dual bases

Vector DualBases::evaluate(const Vector& alpha, const Vector& x) const {
  const std::size_t nu = astar.ring()->basis_size(0);
  return unflatten(combine(hom, alpha), nu, a.dim()).apply(x);
}

DualBases dual_bases(const Representation& a, std::vector<Vector> generators) {
  const RingPtr& ring = a.ring();
  if (!ring->finite()) throw NotProjective("dual_bases: ring must be finite-dimensional");
  if (a.side() != Side::Left) throw AlgebraError("dual_bases: expected a left module");
  const std::size_t da = a.dim(), nu = ring->basis_size(0);
  if (generators.empty())
    for (std::size_t i = 0; i < da; ++i) generators.push_back(unit_vector(da, i));
  const std::size_t n = generators.size(), unknowns = n * nu * da;
  Representation ul = regular_representation(ring, Side::Left), ur = regular_representation(ring, Side::Right);

  // π : Uⁿ → A
  Matrix pi(da, n * nu);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < nu; ++u) pi.set_col(i * nu + u, a.act_basis(u).apply(generators[i]));

  // X = ι, unknown (i·nu + u, c) at (i·nu + u)·da + c
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t g : ring->generators()) {
    const Matrix lg = ul.act_basis(g), ag = a.act_basis(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t c = 0; c < da; ++c) {
          Vector eq(unknowns, Scalar(0));
          for (std::size_t w = 0; w < nu; ++w) eq[(i * nu + w) * da + c] += lg(u, w);
          for (std::size_t e = 0; e < da; ++e) eq[(i * nu + u) * da + e] -= ag(e, c);
          if (!is_zero(eq)) {
            rows.push_back(std::move(eq));
            rhs.push_back(0);
          }
        }
  }
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t c = 0; c < da; ++c) {
      Vector eq(unknowns, Scalar(0));
      for (std::size_t k = 0; k < n * nu; ++k) eq[k * da + c] = pi(r, k);
      rows.push_back(std::move(eq));
      rhs.push_back(r == c ? 1 : 0);
    }
  auto x = solve(Matrix::from_rows(rows, unknowns), rhs);
  if (!x) throw NotProjective("A is not projective over " + ring->name() + ": π has no U-linear splitting");

  DualBases db;
  db.a = a;
  db.generators = generators;
  db.splitting = unflatten(*x, n * nu, da);
  db.hom = module_hom(a, ul);
  std::map<std::size_t, Matrix> act;
  for (std::size_t g : ring->generators()) {
    Matrix m(db.hom.dim(), db.hom.dim());
    const Matrix rg = ur.act_basis(g);
    for (std::size_t k = 0; k < db.hom.dim(); ++k)
      m.set_col(k, coordinates_or_throw(db.hom, flatten(rg * unflatten(db.hom.basis()[k], nu, da)), "dual_bases"));
    act.emplace(g, std::move(m));
  }
  db.astar = Representation(ring, Side::Right, db.hom.dim(), std::move(act), "A*");
  for (std::size_t i = 0; i < n; ++i) {
    Matrix f(nu, da);
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t c = 0; c < da; ++c) f(u, c) = db.splitting(i * nu + u, c);
    db.duals.push_back(coordinates_or_throw(db.hom, flatten(f), "dual_bases"));
  }
  db.astar_tensor_a = module_tensor(db.astar, a);
  Vector w(db.astar.dim() * da, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) w = add(w, kron_vec(db.duals[i], generators[i]));
  db.omega = db.astar_tensor_a.project(w);
  return db;
}

bool check_dual_bases(const DualBases& db, std::string* witness) {
  auto fail = [&](std::string msg) {
    if (witness) *witness = std::move(msg);
    return false;
  };
  const std::size_t da = db.a.dim();
  for (std::size_t c = 0; c < da; ++c) {
    Vector acc(da, Scalar(0));
    for (std::size_t i = 0; i < db.generators.size(); ++i)
      axpy(acc, 1, db.a.apply(to_elem(db.evaluate(db.duals[i], unit_vector(da, c))), db.generators[i]));
    if (acc != unit_vector(da, c)) return fail("Σ eⁱ(a)eᵢ ≠ a for basis vector " + std::to_string(c));
  }
  for (std::size_t k = 0; k < db.astar.dim(); ++k) {
    const Vector alpha = unit_vector(db.astar.dim(), k);
    Vector acc(db.astar.dim(), Scalar(0));
    for (std::size_t i = 0; i < db.generators.size(); ++i)
      axpy(acc, 1, db.astar.apply(to_elem(db.evaluate(alpha, db.generators[i])), db.duals[i]));
    if (acc != alpha) return fail("Σ eⁱ α(eᵢ) ≠ α for basis vector " + std::to_string(k) + " of A*");
  }
  return true;
}

LinearIso delta_underived(const Representation& m, const DualBases& db) {
  if (m.side() != Side::Right) throw AlgebraError("delta_underived: expected a right module");
  const std::size_t dm = m.dim(), da = db.a.dim(), ds = db.astar.dim();
  QuotientSpace source = module_tensor(m, db.a);
  Subspace target = module_hom(db.astar, m);

  // m ⊗ a ↦ (α ↦ m α(a)) on M ⊗_k A
  Matrix amb(dm * ds, dm * da);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Matrix f(dm, ds);
      for (std::size_t k = 0; k < ds; ++k)
        f.set_col(k, m.apply(to_elem(db.evaluate(unit_vector(ds, k), unit_vector(da, j))), unit_vector(dm, i)));
      amb.set_col(i * da + j, flatten(f));
    }
  for (const Vector& rel : source.relations().basis())
    if (!is_zero(amb.apply(rel))) throw NotWellDefined("δ does not descend to M ⊗_U A");
  Matrix forward(target.dim(), source.dim());
  for (std::size_t r = 0; r < source.dim(); ++r)
    forward.set_col(r, coordinates_or_throw(target, amb.col(source.representative_indices()[r]), "δ"));

  Matrix back(source.dim(), target.dim());
  for (std::size_t h = 0; h < target.dim(); ++h) {
    Matrix f = unflatten(target.basis()[h], dm, ds);
    Vector v(dm * da, Scalar(0));
    for (std::size_t i = 0; i < db.generators.size(); ++i)
      v = add(v, kron_vec(f.apply(db.duals[i]), db.generators[i]));
    back.set_col(h, source.project(v));
  }
  return make_iso(std::move(forward), std::move(back));
}

LinearIso bullet_omega_underived(const Representation& m, const DualBases& db) {
  if (m.side() != Side::Left) throw AlgebraError("bullet_omega_underived: expected a left module");
  const std::size_t dm = m.dim(), da = db.a.dim(), ds = db.astar.dim();
  Subspace source = module_hom(db.a, m);
  QuotientSpace target = module_tensor(db.astar, m);
  Matrix forward(target.dim(), source.dim());
  for (std::size_t h = 0; h < source.dim(); ++h) {
    Matrix f = unflatten(source.basis()[h], dm, da);
    Vector v(ds * dm, Scalar(0));
    for (std::size_t i = 0; i < db.generators.size(); ++i)
      v = add(v, kron_vec(db.duals[i], f.apply(db.generators[i])));
    forward.set_col(h, target.project(v));
  }
  // α ⊗ x ↦ (a ↦ α(a)x)
  Matrix back(source.dim(), target.dim());
  for (std::size_t r = 0; r < target.dim(); ++r) {
    const std::size_t amb = target.representative_indices()[r];
    const std::size_t k = amb / dm, i = amb % dm;
    Matrix f(dm, da);
    for (std::size_t c = 0; c < da; ++c)
      f.set_col(c, m.apply(to_elem(db.evaluate(unit_vector(ds, k), unit_vector(da, c))), unit_vector(dm, i)));
    back.set_col(r, coordinates_or_throw(source, flatten(f), "·•ω₀ inverse"));
  }
  return make_iso(std::move(forward), std::move(back));
}

LinearIso cap_omega_underived(const Representation& m, const DualBases& db) {
  if (m.side() != Side::Left) throw AlgebraError("cap_omega_underived: expected a left module");
  const RingPtr& ring = m.ring();
  if (db.a.dim() != ring->base_dim()) throw AlgebraError("cap_omega_underived: A must be the base algebra");
  const std::size_t dm = m.dim(), da = db.a.dim();
  Subspace source = module_hom(db.a, m);
  TensorModule mastar = tensor_right(m, db.astar);
  QuotientSpace target = module_tensor(mastar.module, db.a);
  const Vector one = ring->base_unit();
  Matrix forward(target.dim(), source.dim());
  for (std::size_t h = 0; h < source.dim(); ++h) {
    Matrix f = unflatten(source.basis()[h], dm, da);
    Vector v(mastar.dim() * da, Scalar(0));
    for (std::size_t i = 0; i < db.generators.size(); ++i)
      v = add(v, kron_vec(mastar.pure(f.apply(db.generators[i]), db.duals[i]), one));
    forward.set_col(h, target.project(v));
  }
  return iso_from_forward(std::move(forward));
}

// ----------------------------------------------------------------- derived

DualComplexHomology dual_complex_homology(const FreeComplex& c, std::size_t bound) {
  DualComplexHomology h;
  h.dual = dual(c);
  const FreeComplex& d = h.dual;
  const HopfRing& ring = *d.ring;
  h.bound = ring.finite() ? 0 : bound;
  const std::size_t top = d.top(), K = h.bound;
  std::vector<std::size_t> coef(top + 2, 0);
  for (std::size_t j = 1; j <= top; ++j) coef[j] = coefficient_degree(d, j);

  h.dims.assign(top + 1, std::vector<std::size_t>(K + 1, 0));
  for (std::size_t j = 0; j <= top; ++j)
    for (std::size_t k = 0; k <= K; ++k) {
      std::size_t z = ring.basis_size(k) * d.rank(j);
      if (j >= 1) z -= rank(SparseMatrix(underlying_differential(d, j, k, k + coef[j])));
      std::size_t b = 0;
      if (j + 1 <= top && k >= coef[j + 1])
        b = rank(SparseMatrix(underlying_differential(d, j + 1, k - coef[j + 1], k)));
      h.dims[j][k] = z - b;
    }

  std::size_t settled = K;
  while (settled > 0 && h.dims[0][settled - 1] == h.dims[0][K]) --settled;
  h.settled = settled;
  std::size_t gen_degree = 0;
  for (std::size_t g : ring.generators()) gen_degree = std::max(gen_degree, ring.degree(g));
  if (!ring.finite() && settled + gen_degree > K)
    throw NotDuality("filtration bound " + std::to_string(K) + " too small to read off the module structure");

  // H_0 at the settled level and at the bound
  auto level = [&](std::size_t k) {
    const std::size_t ambient = ring.basis_size(k) * d.rank(0);
    std::vector<Vector> rels;
    if (top >= 1 && k >= coef[1]) {
      Matrix m = underlying_differential(d, 1, k - coef[1], k);
      for (std::size_t col = 0; col < m.cols(); ++col) rels.push_back(m.col(col));
    }
    return QuotientSpace(ambient, rels);
  };
  QuotientSpace low = level(settled), high = level(K);
  const std::size_t r = low.dim(), rank0 = d.rank(0), ambient_high = high.ambient_dim();
  auto embed = [&](const Vector& v) {
    Vector out(ambient_high, Scalar(0));
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  Matrix basis(high.dim(), r);
  for (std::size_t i = 0; i < r; ++i)
    basis.set_col(i, high.project(embed(low.lift(unit_vector(r, i)))));
  auto inv = inverse(basis);
  if (!inv) throw NotDuality("the top homology has not settled within the filtration bound");

  std::map<std::size_t, Matrix> act;
  for (std::size_t g : ring.generators()) {
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      Vector v = low.lift(unit_vector(r, i)), out(ambient_high, Scalar(0));
      for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (sgn(v[idx]) == 0) continue;
        const std::size_t b = idx / rank0, gen = idx % rank0;
        Elem prod = d.side == Side::Right ? ring.multiply_basis(b, g) : ring.multiply_basis(g, b);
        for (const auto& [w, x] : prod) {
          if (w >= ring.basis_size(K)) throw NotDuality("module action leaves the filtration bound");
          out[w * rank0 + gen] += v[idx] * x;
        }
      }
      m.set_col(i, inv->apply(high.project(out)));
    }
    act.emplace(g, std::move(m));
  }
  h.top = Representation(d.ring, d.side, r, std::move(act), c.side == Side::Left ? "A*" : "A**");
  for (std::size_t s = 0; s < rank0; ++s) {
    Vector out(ambient_high, Scalar(0));
    for (const auto& [w, x] : ring.one()) out[w * rank0 + s] += x;
    h.augmentation.push_back(inv->apply(high.project(out)));
  }
  return h;
}

DualityData detect_duality(const FreeResolution& p, std::size_t bound) {
  const RingPtr& ring = p.ring();
  DualityData dd;
  if (ring->finite() && !p.finite_length) {
    Representation a = base_module(ring);
    DualBases db;
    try {
      db = dual_bases(a);
    } catch (const NotProjective& e) {
      throw NotDuality(std::string("no finite free resolution given and ") + e.what());
    }
    const std::size_t top = std::min<std::size_t>(p.window(), 3);
    ExtGroups ext(p, regular_representation(ring, Side::Left), top);
    dd.ext_dims = ext.dims();
    for (std::size_t n = 1; n < dd.ext_dims.size(); ++n)
      if (dd.ext_dims[n] != 0) throw NotDuality("Ext^" + std::to_string(n) + "(A, U) ≠ 0 for projective A");
    dd.d = 0;
    dd.astar = db.astar;
    dd.omega = db.omega;
    dd.omega_class = db.omega;
    dd.underived = std::move(db);
    return dd;
  }
  if (!p.finite_length) throw NotDuality("resolution " + p.name + " is not of finite length");
  DualComplexHomology h = dual_complex_homology(p.complex, bound);
  const std::size_t top = p.complex.top();
  dd.bound = h.bound;
  std::string nonzero;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t j = top - n;
    dd.ext_dims.push_back(h.dims[j][h.bound]);
    if (j == 0) continue;
    for (std::size_t k = 0; k <= h.bound; ++k)
      if (h.dims[j][k] != 0) {
        nonzero += (nonzero.empty() ? "" : ", ") + std::to_string(n);
        break;
      }
  }
  if (!nonzero.empty()) throw NotDuality("Ext^n(A, U) ≠ 0 for n = " + nonzero);
  if (dd.ext_dims[top] == 0) throw NotDuality("Ext(A, U) vanishes in every degree");
  dd.d = top;
  dd.astar = h.top;
  dd.dual_resolution = FreeResolution{p.name + "*", h.dual, h.augmentation, true};

  const std::size_t da = dd.astar.dim();
  dd.omega.assign(p.rank(top) * da, Scalar(0));
  for (std::size_t s = 0; s < p.rank(top); ++s)
    for (std::size_t i = 0; i < da; ++i) dd.omega[s * da + i] = h.augmentation[s][i];
  TorGroups tor(dd.astar, p, top);
  auto c = tor.classify(top, dd.omega);
  if (!c) throw NotDuality("ω is not a cycle");
  dd.omega_class = *c;
  return dd;
}

bool DeltaCheck::pass() const { return std::all_of(commutes.begin(), commutes.end(), [](bool b) { return b; }); }

DeltaCheck check_delta(const DualityData& dd, const FreeResolution& p, const Representation& m) {
  DeltaCheck out;
  if (dd.underived) return out;
  ChainComplex t = tensor_complex(m, p, dd.d);
  ChainComplex h = hom_complex(dd.dual_resolution, m, dd.d);
  for (std::size_t i = 1; i <= dd.d; ++i) out.commutes.push_back(t.d(int(i)) == h.d(-int(dd.d - i)));
  return out;
}

bool isomorphic(const Representation& x, const Representation& y) {
  if (x.side() != y.side() || x.dim() != y.dim()) return false;
  if (x.dim() == 0) return true;
  Subspace hom = module_hom(x, y);
  std::vector<Vector> candidates = hom.basis();
  Vector sum(hom.ambient_dim(), Scalar(0)), weighted(hom.ambient_dim(), Scalar(0));
  for (std::size_t k = 0; k < hom.dim(); ++k) {
    axpy(sum, 1, hom.basis()[k]);
    axpy(weighted, Scalar(int(k) + 1), hom.basis()[k]);
  }
  candidates.push_back(sum);
  candidates.push_back(weighted);
  for (const Vector& v : candidates)
    if (rank(unflatten(v, y.dim(), x.dim())) == x.dim()) return true;
  return false;
}

bool check_double_dual(const DualityData& dd, const Representation& a, std::size_t bound) {
  if (dd.underived) {
    // A** = Hom_{Uᵒᵖ}(A*, U) computed from the transpose of A*
    DualBases back = dual_bases(transpose_module(dd.astar));
    return isomorphic(transpose_module(back.astar), a);
  }
  DualComplexHomology h = dual_complex_homology(dd.dual_resolution.complex, bound);
  for (std::size_t j = 1; j < h.dims.size(); ++j)
    for (std::size_t x : h.dims[j])
      if (x != 0) return false;
  return isomorphic(h.top, a);
}

std::vector<DualityRow> duality_table(const DualityData& dd, const CupPairing& pairing, const Representation& m) {
  std::vector<DualityRow> rows;
  if (dd.underived) {
    LinearIso iso = cap_omega_underived(m, *dd.underived);
    rows.push_back({0, iso.forward.cols(), iso.forward.rows(), iso.forward, iso.bijective});
    return rows;
  }
  const FreeResolution& p = pairing.resolution();
  ExtGroups ext(p, m, dd.d);
  TorGroups tor_astar(dd.astar, p, dd.d);
  TensorModule mn = tensor_right(m, dd.astar);
  TorGroups tor_mn(mn.module, p, dd.d);
  for (std::size_t deg = 0; deg <= dd.d; ++deg) {
    DualityRow row;
    row.m = deg;
    row.ext_dim = ext.dim(deg);
    row.tor_dim = tor_mn.dim(dd.d - deg);
    row.cap = Matrix(row.tor_dim, row.ext_dim);
    for (std::size_t i = 0; i < row.ext_dim; ++i)
      row.cap.set_col(i, cap(pairing, ext, deg, unit_vector(row.ext_dim, i), tor_astar, dd.d, dd.omega_class, mn, tor_mn));
    row.bijective = row.ext_dim == row.tor_dim && (row.ext_dim == 0 || rank(row.cap) == row.ext_dim);
    rows.push_back(std::move(row));
  }
  return rows;
}

DualityRow duality_isomorphism(const DualityData& dd, const CupPairing& pairing, const Representation& m,
                               std::size_t degree) {
  if (degree > dd.d) throw WindowExceeded("duality: degree exceeds d = " + std::to_string(dd.d));
  return duality_table(dd, pairing, m)[degree];
}

}  // namespace xah
