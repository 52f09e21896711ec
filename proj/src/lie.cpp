#include "xah/lie.hpp"

#include <algorithm>

namespace xah {

namespace {

Scalar binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

// all c with 0 ≤ c ≤ a componentwise
void sub_exponents(const std::vector<unsigned>& a, std::size_t i, std::vector<unsigned>& c,
                   const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (i == a.size()) {
    visit(c);
    return;
  }
  for (unsigned k = 0; k <= a[i]; ++k) {
    c[i] = k;
    sub_exponents(a, i + 1, c, visit);
  }
}

void compositions(std::size_t vars, unsigned total, std::size_t i, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (i + 1 == vars) {
    cur[i] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned k = total + 1; k-- > 0;) {
    cur[i] = k;
    compositions(vars, total - k, i + 1, cur, out);
  }
}

}  // namespace

// --------------------------------------------------------- LieAlgebraData

LieAlgebraData::LieAlgebraData(std::string name, std::vector<std::string> labels, std::vector<Vector> brackets)
    : name_(std::move(name)), labels_(std::move(labels)), brackets_(std::move(brackets)) {
  const std::size_t d = dim();
  if (brackets_.size() != d * d) throw AlgebraError("lie algebra: expected dim² brackets");
  for (const auto& b : brackets_)
    if (b.size() != d) throw AlgebraError("lie algebra: bracket of wrong length");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (add(bracket(i, j), bracket(j, i)) != zero_vector(d))
        throw AlgebraError("lie algebra: bracket not antisymmetric at " + labels_[i] + ", " + labels_[j]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector s = bracket(unit_vector(d, i), bracket(j, k));
        s = add(s, bracket(unit_vector(d, j), bracket(k, i)));
        s = add(s, bracket(unit_vector(d, k), bracket(i, j)));
        if (!is_zero(s))
          throw AlgebraError("lie algebra: Jacobi fails at " + labels_[i] + ", " + labels_[j] + ", " + labels_[k]);
      }
}

Vector LieAlgebraData::bracket(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], bracket(i, j));
  }
  return out;
}

Matrix LieAlgebraData::ad(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(i, j));
  return m;
}

bool LieAlgebraData::is_abelian() const {
  return std::all_of(brackets_.begin(), brackets_.end(), [](const Vector& v) { return is_zero(v); });
}

// ---------------------------------------------------------------- PBWRing

PBWRing::PBWRing(LiePtr lie, std::size_t max_degree) : lie_(std::move(lie)), max_degree_(max_degree) {
  const std::size_t d = lie_->dim();
  for (std::size_t deg = 0; deg <= max_degree_; ++deg) {
    if (d == 0) {
      if (deg == 0) monomials_.push_back({});
    } else {
      std::vector<unsigned> cur(d, 0);
      compositions(d, unsigned(deg), 0, cur, monomials_);
    }
    prefix_.push_back(monomials_.size());
  }
  for (std::size_t b = 0; b < monomials_.size(); ++b) {
    std::size_t deg = 0;
    for (unsigned e : monomials_[b]) deg += e;
    degree_.push_back(deg);
    index_.emplace(monomials_[b], b);
  }
  if (max_degree_ >= 1)
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<unsigned> e(d, 0);
      e[i] = 1;
      gens_.push_back(index_.at(e));
    }
}

std::size_t PBWRing::basis_size(std::size_t max_degree) const {
  if (max_degree > max_degree_)
    throw DegreeOverflow("PBW basis requested up to degree " + std::to_string(max_degree) + ", bound is " +
                         std::to_string(max_degree_));
  return prefix_[max_degree];
}

std::string PBWRing::label(std::size_t b) const {
  std::string out;
  const auto& e = monomials_[b];
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += lie_->labels()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t PBWRing::index_of(const std::vector<unsigned>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) throw DegreeOverflow("PBW monomial beyond the degree bound");
  return it->second;
}

std::vector<std::size_t> PBWRing::factors(std::size_t b) const {
  std::vector<std::size_t> out;
  const auto& e = monomials_[b];
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) out.push_back(gens_[i]);
  return out;
}

Elem PBWRing::times_generator(std::size_t b, std::size_t k) const {
  {
    std::lock_guard<std::mutex> g(memo_->lock);
    auto it = memo_->by_generator.find({b, k});
    if (it != memo_->by_generator.end()) return it->second;
  }
  if (degree_[b] + 1 > max_degree_)
    throw DegreeOverflow("PBW product exceeds the degree bound " + std::to_string(max_degree_));
  std::vector<unsigned> m = monomials_[b];
  std::size_t last = m.size();
  for (std::size_t i = m.size(); i-- > 0;)
    if (m[i] > 0) {
      last = i;
      break;
    }
  Elem out;
  if (last == m.size() || k >= last) {
    ++m[k];
    out = basis_elem(index_.at(m));
  } else {
    // m' x_l x_k = (m' x_k) x_l + m' [x_l, x_k]
    --m[last];
    std::size_t rest = index_.at(m);
    for (const auto& [w, c] : times_generator(rest, k)) add_to(out, c, times_generator(w, last));
    const Vector& br = lie_->bracket(last, k);
    for (std::size_t c = 0; c < br.size(); ++c)
      if (sgn(br[c]) != 0) add_to(out, br[c], times_generator(rest, c));
  }
  std::lock_guard<std::mutex> g(memo_->lock);
  memo_->by_generator.emplace(std::make_pair(b, k), out);
  return out;
}

Elem PBWRing::multiply_basis(std::size_t i, std::size_t j) const {
  {
    std::lock_guard<std::mutex> g(memo_->lock);
    auto it = memo_->products.find({i, j});
    if (it != memo_->products.end()) return it->second;
  }
  if (degree_[i] + degree_[j] > max_degree_)
    throw DegreeOverflow("PBW product of degree " + std::to_string(degree_[i] + degree_[j]) +
                         " exceeds the bound " + std::to_string(max_degree_));
  Elem out = basis_elem(i);
  const auto& e = monomials_[j];
  for (std::size_t k = 0; k < e.size(); ++k)
    for (unsigned r = 0; r < e[k]; ++r) {
      Elem next;
      for (const auto& [w, c] : out) add_to(next, c, times_generator(w, k));
      out = std::move(next);
    }
  std::lock_guard<std::mutex> g(memo_->lock);
  memo_->products.emplace(std::make_pair(i, j), out);
  return out;
}

Elem PBWRing::word(const std::vector<std::size_t>& letters) const {
  Elem out = one();
  for (std::size_t k : letters) {
    Elem next;
    for (const auto& [w, c] : out) add_to(next, c, times_generator(w, k));
    out = std::move(next);
  }
  return out;
}

Elem PBWRing::lie_element(const Vector& x) const {
  Elem out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out[gens_[i]] = x[i];
  return out;
}

std::vector<Term> PBWRing::coproduct(std::size_t b) const {
  std::vector<Term> out;
  const auto& a = monomials_[b];
  std::vector<unsigned> c(a.size(), 0);
  sub_exponents(a, 0, c, [&](const std::vector<unsigned>& cc) {
    Scalar coef = 1;
    std::vector<unsigned> rest(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      coef *= binomial(a[i], cc[i]);
      rest[i] = a[i] - cc[i];
    }
    out.push_back({coef, index_.at(cc), index_.at(rest)});
  });
  return out;
}

std::vector<Term> PBWRing::translation(std::size_t b) const {
  std::vector<Term> out;
  const auto& a = monomials_[b];
  std::vector<unsigned> c(a.size(), 0);
  sub_exponents(a, 0, c, [&](const std::vector<unsigned>& cc) {
    Scalar coef = 1;
    std::size_t minus_degree = 0;
    std::vector<std::size_t> reversed;
    for (std::size_t i = 0; i < a.size(); ++i) coef *= binomial(a[i], cc[i]);
    for (std::size_t i = a.size(); i-- > 0;)
      for (unsigned r = cc[i]; r < a[i]; ++r) {
        reversed.push_back(i);
        ++minus_degree;
      }
    if (minus_degree % 2 == 1) coef = -coef;
    for (const auto& [w, x] : word(reversed)) out.push_back({coef * x, index_.at(cc), w});
  });
  return out;
}

void PBWRing::validate(const Representation& m) const {
  const std::size_t d = lie_->dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix& ri = m.generator_action().at(gens_[i]);
      const Matrix& rj = m.generator_action().at(gens_[j]);
      Matrix lhs = m.side() == Side::Left ? ri * rj - rj * ri : rj * ri - ri * rj;
      Matrix rhs(m.dim(), m.dim());
      const Vector& br = lie_->bracket(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(br[k]) != 0) rhs = rhs + br[k] * m.generator_action().at(gens_[k]);
      if (!(lhs == rhs))
        throw AlgebraError("not a g-module: bracket relation fails at " + lie_->labels()[i] + ", " +
                           lie_->labels()[j]);
    }
}

PBWPtr make_pbw(LiePtr lie, std::size_t max_degree) { return std::make_shared<const PBWRing>(std::move(lie), max_degree); }

// ---------------------------------------------------------------- modules

Representation lie_module(const PBWPtr& ring, const std::vector<Matrix>& action, std::string name) {
  if (action.size() != ring->lie().dim()) throw AlgebraError("lie module: one matrix per basis element expected");
  std::map<std::size_t, Matrix> act;
  for (std::size_t i = 0; i < action.size(); ++i) act.emplace(ring->generator(i), action[i]);
  Representation rep(ring, Side::Left, action.empty() ? 0 : action[0].rows(), std::move(act), std::move(name));
  ring->validate(rep);
  return rep;
}

Representation trivial_lie_module(const PBWPtr& ring) {
  return lie_module(ring, std::vector<Matrix>(ring->lie().dim(), Matrix(1, 1)), "k");
}

Representation adjoint_module(const PBWPtr& ring) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < ring->lie().dim(); ++i) act.push_back(ring->lie().ad(i));
  return lie_module(ring, act, "ad");
}

Representation coadjoint_module(const PBWPtr& ring) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < ring->lie().dim(); ++i) act.push_back(Scalar(-1) * ring->lie().ad(i).transpose());
  return lie_module(ring, act, "coad");
}

// ------------------------------------------------------------ CE resolution

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CEResolution ce_resolution(const PBWPtr& ring) {
  const LieAlgebraData& g = ring->lie();
  const std::size_t d = g.dim();
  CEResolution ce;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    std::vector<std::size_t> cur;
    std::vector<std::vector<std::size_t>> subs;
    combinations(d, n, 0, cur, subs);
    for (std::size_t s = 0; s < subs.size(); ++s) index[n][subs[s]] = s;
    ce.subsets.push_back(std::move(subs));
  }
  FreeComplex& c = ce.resolution.complex;
  c.ring = ring;
  c.side = Side::Left;
  for (std::size_t n = 0; n <= d; ++n) c.ranks.push_back(ce.subsets[n].size());
  c.edges.assign(d + 1, {});
  for (std::size_t n = 1; n <= d; ++n)
    for (std::size_t s = 0; s < ce.subsets[n].size(); ++s) {
      const auto& S = ce.subsets[n][s];
      std::map<std::size_t, Elem> row;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rest = S;
        rest.erase(rest.begin() + i);
        add_to(row[index[n - 1].at(rest)], i % 2 == 0 ? 1 : -1, basis_elem(ring->generator(S[i])));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Scalar sign = (i + j) % 2 == 0 ? 1 : -1;
          std::vector<std::size_t> rest;
          for (std::size_t k = 0; k < n; ++k)
            if (k != i && k != j) rest.push_back(S[k]);
          const Vector& br = g.bracket(S[i], S[j]);
          for (std::size_t k = 0; k < d; ++k) {
            if (sgn(br[k]) == 0 || std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
            std::size_t before = std::count_if(rest.begin(), rest.end(), [&](std::size_t r) { return r < k; });
            std::vector<std::size_t> t = rest;
            t.insert(t.begin() + before, k);
            add_to(row[index[n - 1].at(t)], Scalar(before % 2 == 0 ? sign : -sign) * br[k], ring->one());
          }
        }
      for (auto& [t, e] : row)
        if (!is_zero(e)) c.edges[n].push_back({s, t, std::move(e)});
    }
  ce.resolution.name = "ce";
  ce.resolution.augmentation = {Vector{Scalar(1)}};
  ce.resolution.finite_length = true;
  ce.resolution.check();
  return ce;
}

Diagonal ce_diagonal(const CEResolution& ce) {
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(ce.subsets.size());
  for (std::size_t n = 0; n < ce.subsets.size(); ++n)
    for (std::size_t s = 0; s < ce.subsets[n].size(); ++s) index[n][ce.subsets[n][s]] = s;
  Diagonal diag;
  for (std::size_t n = 0; n < ce.subsets.size(); ++n) {
    std::vector<std::vector<DiagonalTerm>> level;
    for (const auto& S : ce.subsets[n]) {
      std::vector<DiagonalTerm> terms;
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> I, J;
        std::size_t inversions = 0;
        for (std::size_t k = 0; k < n; ++k) (mask >> k & 1 ? I : J).push_back(S[k]);
        for (std::size_t p : I)
          for (std::size_t q : J)
            if (p > q) ++inversions;
        terms.push_back({inversions % 2 == 0 ? Scalar(1) : Scalar(-1), I.size(), index[I.size()].at(I), 0,
                         index[J.size()].at(J), 0});
      }
      std::stable_sort(terms.begin(), terms.end(),
                       [](const DiagonalTerm& a, const DiagonalTerm& b) { return a.left_degree < b.left_degree; });
      level.push_back(std::move(terms));
    }
    diag.terms.push_back(std::move(level));
  }
  return diag;
}

std::vector<std::vector<Term>> translation_map_ug(const PBWRing& ring) {
  std::vector<std::vector<Term>> out;
  for (std::size_t i = 0; i < ring.lie().dim(); ++i) out.push_back(ring.translation(ring.generator(i)));
  return out;
}

}  // namespace xah
