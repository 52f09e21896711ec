#include "xah/products.hpp"

namespace xah {

namespace {

Vector block(const Vector& v, std::size_t s, std::size_t width) {
  return Vector(v.begin() + s * width, v.begin() + (s + 1) * width);
}

void add_block(Vector& v, std::size_t s, const Scalar& c, const Vector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) v[s * x.size() + i] += c * x[i];
}

// Σ coords_i · representative(i)
Vector cycle_of(const HomologyGroup& h, const Vector& coords) {
  if (coords.size() != h.dim()) throw LinalgError("class coordinates of wrong length");
  Vector v(h.cycles.ambient_dim(), Scalar(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) axpy(v, coords[i], h.representative(i));
  return v;
}

Vector classify_or_throw(const HomologyGroup& h, const Vector& v, const char* what) {
  auto c = h.classify(v);
  if (!c) throw LiftFailed(std::string(what) + ": result is not a (co)cycle");
  return *c;
}

std::vector<Vector> values_of(const Vector& phi, std::size_t dim_a) {
  std::vector<Vector> out;
  for (std::size_t s = 0; s * dim_a < phi.size(); ++s) out.push_back(block(phi, s, dim_a));
  return out;
}

}  // namespace

// ------------------------------------------------------------ CupPairing

CupPairing::CupPairing(const FreeResolution& p, Diagonal diag) : p_(&p), diag_(std::move(diag)) {}

CupPairing CupPairing::lifted(const FreeResolution& p, std::size_t max_degree) {
  return CupPairing(p, lift_diagonal(p, max_degree));
}

Vector CupPairing::cup_cochain(const Representation& m, std::size_t deg_phi, const Vector& phi,
                               const Representation& n, std::size_t deg_psi, const Vector& psi,
                               const TensorModule& mn) const {
  const std::size_t total = deg_phi + deg_psi;
  if (p_->finite_length && total > p_->complex.top()) return {};
  if (total > depth()) throw WindowExceeded("cup: diagonal computed only up to degree " + std::to_string(depth()));
  const std::size_t dm = m.dim(), dn = n.dim(), dmn = mn.dim();
  Vector out(p_->rank(total) * dmn, Scalar(0));
  for (std::size_t s = 0; s < p_->rank(total); ++s)
    for (const DiagonalTerm& t : diag_.terms[total][s]) {
      if (t.left_degree != deg_phi) continue;
      Vector x = m.apply(basis_elem(t.left_basis), block(phi, t.left_gen, dm));
      Vector y = n.apply(basis_elem(t.right_basis), block(psi, t.right_gen, dn));
      add_block(out, s, t.coef, mn.pure(x, y));
    }
  return out;
}

Vector CupPairing::cap_chain(const Representation& m, std::size_t deg_phi, const Vector& phi,
                             const Representation& n, std::size_t deg_z, const Vector& z,
                             const TensorModule& mn) const {
  if (deg_phi > deg_z) throw WindowExceeded("cap: degree of the cochain exceeds that of the chain");
  if (deg_z > depth()) throw WindowExceeded("cap: diagonal computed only up to degree " + std::to_string(depth()));
  const std::size_t low = deg_z - deg_phi, dm = m.dim(), dn = n.dim();
  const Scalar sign = (deg_phi * low) % 2 == 0 ? 1 : -1;
  Vector out(p_->rank(low) * mn.dim(), Scalar(0));
  for (std::size_t s = 0; s < p_->rank(deg_z); ++s) {
    Vector ns = block(z, s, dn);
    if (is_zero(ns)) continue;
    for (const DiagonalTerm& t : diag_.terms[deg_z][s]) {
      if (t.left_degree != low) continue;
      Vector fy = m.apply(basis_elem(t.right_basis), block(phi, t.right_gen, dm));
      Vector v = mn.module.apply(basis_elem(t.left_basis), mn.pure(fy, ns));
      add_block(out, t.left_gen, sign * t.coef, v);
    }
  }
  return out;
}

Vector map_coefficients(const Matrix& f, const Vector& c) {
  if (f.cols() == 0) return {};
  const std::size_t blocks = c.size() / f.cols();
  Vector out(blocks * f.rows(), Scalar(0));
  for (std::size_t s = 0; s < blocks; ++s) add_block(out, s, 1, f.apply(block(c, s, f.cols())));
  return out;
}

Vector yoneda_cochain(const FreeResolution& p, std::size_t deg_phi, const Vector& phi, const Representation& m,
                      std::size_t deg_psi, const Vector& psi) {
  const std::size_t dm = m.dim();
  ChainLift f = lift_chain_map(p, p, deg_phi, values_of(phi, p.ring()->base_dim()), deg_psi);
  Vector out(p.rank(deg_phi + deg_psi) * dm, Scalar(0));
  if (deg_psi >= f.images.size()) return out;  // past the end of a finite resolution
  for (std::size_t s = 0; s < f.images[deg_psi].size(); ++s)
    for (const auto& [t, e] : f.images[deg_psi][s]) add_block(out, s, 1, m.apply(e, block(psi, t, dm)));
  return out;
}

Vector bullet_chain(const FreeResolution& p, std::size_t deg_phi, const Vector& phi, const Representation& n,
                    std::size_t deg_z, const Vector& z) {
  if (deg_phi > deg_z) throw WindowExceeded("bullet: degree of the cochain exceeds that of the chain");
  const std::size_t low = deg_z - deg_phi, dn = n.dim();
  ChainLift f = lift_chain_map(p, p, deg_phi, values_of(phi, p.ring()->base_dim()), low);
  Vector out(p.rank(low) * dn, Scalar(0));
  for (std::size_t s = 0; s < f.images[low].size(); ++s) {
    Vector ns = block(z, s, dn);
    if (is_zero(ns)) continue;
    for (const auto& [t, e] : f.images[low][s]) add_block(out, t, 1, n.apply(e, ns));
  }
  return out;
}

// ---------------------------------------------------------- ProductEngine

ProductEngine::ProductEngine(const CupPairing& pairing, std::size_t max_degree)
    : pairing_(pairing),
      a_(base_module(pairing.resolution().ring())),
      ext_(pairing.resolution(), a_, max_degree),
      aa_(tensor_left(a_, a_)),
      unitor_(left_unitor(aa_, a_)) {}

Vector ProductEngine::unit() const {
  Vector c;
  for (const Vector& e : resolution().augmentation) c.insert(c.end(), e.begin(), e.end());
  return classify_or_throw(ext_.group(0), c, "unit");
}

Vector ProductEngine::cup_cochains(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const {
  Vector c = pairing_.cup_cochain(a_, m, phi, a_, n, psi, aa_);
  return classify_or_throw(ext_.group(m + n), map_coefficients(unitor_, c), "cup");
}

Vector ProductEngine::cup(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const {
  return cup_cochains(m, cycle_of(ext_.group(m), phi), n, cycle_of(ext_.group(n), psi));
}

Vector ProductEngine::yoneda(std::size_t m, const Vector& phi, std::size_t n, const Vector& psi) const {
  Vector c = yoneda_cochain(resolution(), m, cycle_of(ext_.group(m), phi), a_, n, cycle_of(ext_.group(n), psi));
  return classify_or_throw(ext_.group(m + n), c, "yoneda");
}

Vector ProductEngine::bullet(std::size_t m, const Vector& phi, const TorGroups& tor, std::size_t k,
                             const Vector& z) const {
  Vector c = bullet_chain(resolution(), m, cycle_of(ext_.group(m), phi), tor.module(), k, cycle_of(tor.group(k), z));
  return classify_or_throw(tor.group(k - m), c, "bullet");
}

Vector ProductEngine::cap(std::size_t m, const Vector& phi, const TorGroups& tor, std::size_t k,
                          const Vector& z) const {
  TensorModule an = tensor_right(a_, tor.module());
  Vector c = pairing_.cap_chain(a_, m, cycle_of(ext_.group(m), phi), tor.module(), k, cycle_of(tor.group(k), z), an);
  return classify_or_throw(tor.group(k - m), map_coefficients(right_module_unitor(an, tor.module()), c), "cap");
}

std::vector<std::vector<Vector>> ProductEngine::cup_table(std::size_t m, std::size_t n) const {
  std::vector<std::vector<Vector>> out(ext_.dim(m));
  for (std::size_t i = 0; i < ext_.dim(m); ++i)
    for (std::size_t j = 0; j < ext_.dim(n); ++j)
      out[i].push_back(cup(m, unit_vector(ext_.dim(m), i), n, unit_vector(ext_.dim(n), j)));
  return out;
}

std::vector<std::vector<Vector>> ProductEngine::yoneda_table(std::size_t m, std::size_t n) const {
  std::vector<std::vector<Vector>> out(ext_.dim(m));
  for (std::size_t i = 0; i < ext_.dim(m); ++i)
    for (std::size_t j = 0; j < ext_.dim(n); ++j)
      out[i].push_back(yoneda(m, unit_vector(ext_.dim(m), i), n, unit_vector(ext_.dim(n), j)));
  return out;
}

// ------------------------------------------------------ general coefficients

Vector cap(const CupPairing& pairing, const ExtGroups& ext_m, std::size_t m, const Vector& phi, const TorGroups& tor_n,
           std::size_t k, const Vector& z, const TensorModule& mn, const TorGroups& tor_mn) {
  Vector c = pairing.cap_chain(ext_m.module(), m, cycle_of(ext_m.group(m), phi), tor_n.module(), k,
                               cycle_of(tor_n.group(k), z), mn);
  return classify_or_throw(tor_mn.group(k - m), c, "cap");
}

Vector cup(const CupPairing& pairing, const ExtGroups& ext_m, std::size_t m, const Vector& phi, const ExtGroups& ext_n,
           std::size_t n, const Vector& psi, const TensorModule& mn, const ExtGroups& ext_mn) {
  Vector c = pairing.cup_cochain(ext_m.module(), m, cycle_of(ext_m.group(m), phi), ext_n.module(), n,
                                 cycle_of(ext_n.group(n), psi), mn);
  return classify_or_throw(ext_mn.group(m + n), c, "cup");
}

// ---------------------------------------------------------------- checks

namespace {

std::string where(std::size_t m, std::size_t i, std::size_t n, std::size_t j) {
  return "(" + std::to_string(m) + "," + std::to_string(i) + ") x (" + std::to_string(n) + "," + std::to_string(j) +
         ")";
}

}  // namespace

ProductReport check_cup_yoneda(const ProductEngine& e, std::size_t max_total) {
  ProductReport r;
  const ExtGroups& ext = e.ext();
  for (std::size_t m = 0; m <= max_total; ++m)
    for (std::size_t n = 0; m + n <= max_total; ++n)
      for (std::size_t i = 0; i < ext.dim(m); ++i)
        for (std::size_t j = 0; j < ext.dim(n); ++j) {
          Vector phi = unit_vector(ext.dim(m), i), psi = unit_vector(ext.dim(n), j);
          Vector y = e.yoneda(m, phi, n, psi);
          Vector c = e.cup(m, phi, n, psi);
          Vector swapped = scaled(e.cup(n, psi, m, phi), (m * n) % 2 == 0 ? 1 : -1);
          ++r.checked;
          if (y != c) r.failures.push_back("yoneda ≠ cup on " + where(m, i, n, j));
          if (c != swapped) r.failures.push_back("cup not graded commutative on " + where(m, i, n, j));
        }
  return r;
}

ProductReport check_bullet_cap(const ProductEngine& e, const TorGroups& tor) {
  ProductReport r;
  const ExtGroups& ext = e.ext();
  const std::size_t top = std::min(tor.max_degree(), e.pairing().depth());
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t m = 0; m <= k && m <= ext.max_degree(); ++m)
      for (std::size_t i = 0; i < ext.dim(m); ++i)
        for (std::size_t j = 0; j < tor.dim(k); ++j) {
          Vector phi = unit_vector(ext.dim(m), i), z = unit_vector(tor.dim(k), j);
          ++r.checked;
          if (e.bullet(m, phi, tor, k, z) != e.cap(m, phi, tor, k, z))
            r.failures.push_back("bullet ≠ cap on " + where(m, i, k, j));
        }
  return r;
}

ProductReport check_cup_algebra(const ProductEngine& e, std::size_t max_total) {
  ProductReport r;
  const ExtGroups& ext = e.ext();
  const Vector one = e.unit();
  auto basis = [&](std::size_t n, std::size_t i) { return unit_vector(ext.dim(n), i); };
  for (std::size_t n = 0; n <= max_total; ++n)
    for (std::size_t i = 0; i < ext.dim(n); ++i) {
      ++r.checked;
      if (e.cup(0, one, n, basis(n, i)) != basis(n, i) || e.cup(n, basis(n, i), 0, one) != basis(n, i))
        r.failures.push_back("unit fails on class (" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
  for (std::size_t a = 0; a <= max_total; ++a)
    for (std::size_t b = 0; a + b <= max_total; ++b)
      for (std::size_t c = 0; a + b + c <= max_total; ++c)
        for (std::size_t i = 0; i < ext.dim(a); ++i)
          for (std::size_t j = 0; j < ext.dim(b); ++j)
            for (std::size_t k = 0; k < ext.dim(c); ++k) {
              ++r.checked;
              Vector left = e.cup(a + b, e.cup(a, basis(a, i), b, basis(b, j)), c, basis(c, k));
              Vector right = e.cup(a, basis(a, i), b + c, e.cup(b, basis(b, j), c, basis(c, k)));
              if (left != right) r.failures.push_back("associativity fails on " + where(a, i, b, j));
            }
  // perturb representatives by coboundaries of a fixed cochain
  for (std::size_t m = 0; m <= max_total; ++m)
    for (std::size_t n = 0; m + n <= max_total; ++n)
      for (std::size_t i = 0; i < ext.dim(m); ++i)
        for (std::size_t j = 0; j < ext.dim(n); ++j) {
          Vector phi = ext.representative(m, i), psi = ext.representative(n, j);
          auto perturb = [&](Vector& c, std::size_t deg) {
            if (deg == 0) return;
            const std::size_t len = ext.group(deg - 1).cycles.ambient_dim();
            Vector w(len);
            for (std::size_t t = 0; t < len; ++t) w[t] = Scalar(int(t % 3) - 1, int(t % 2) + 1);
            c = add(c, ext.coboundary(deg - 1, w));
          };
          perturb(phi, m);
          perturb(psi, n);
          ++r.checked;
          if (e.cup_cochains(m, phi, n, psi) != e.cup(m, basis(m, i), n, basis(n, j)))
            r.failures.push_back("cup depends on representatives on " + where(m, i, n, j));
        }
  return r;
}

}  // namespace xah
