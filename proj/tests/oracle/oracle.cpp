#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, std::vector<Q>(cols, Q(0))); }

namespace {

// Gaussian elimination in place; returns pivot columns.
std::vector<std::size_t> echelon(Mat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t x = 1;
  while (e--) x *= b;
  return x;
}

std::vector<std::size_t> digits(std::size_t t, std::size_t base, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = t % base;
    t /= base;
  }
  return d;
}

std::size_t number(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t t = 0;
  for (std::size_t x : d) t = t * base + x;
  return t;
}

void require_square_zero(const Mat& later, const Mat& earlier, const std::string& what) {
  if (later.empty() || earlier.empty() || earlier[0].empty()) return;
  for (const auto& row : multiply(later, earlier))
    for (const Q& x : row)
      if (x != 0) throw std::logic_error(what + ": d² ≠ 0");
}

}  // namespace

std::size_t rank(Mat m) {
  if (m.empty()) return 0;
  return echelon(m, m[0].size()).size();
}

std::vector<std::vector<Q>> null_space(Mat m, std::size_t cols) {
  std::vector<std::size_t> pivots = echelon(m, cols);
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Mat c = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// ------------------------------------------------------------ Hochschild

Algebra named_algebra(const std::string& name) {
  Algebra a;
  a.name = name;
  a.dim = name == "ut2" ? 3 : 2;
  a.mult.assign(a.dim * a.dim * a.dim, Q(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.mult[(i * a.dim + j) * a.dim + k] = 1; };
  if (name == "qeps") {
    // 1, ε
    set(0, 0, 0), set(0, 1, 1), set(1, 0, 1);
    a.unit = {1, 0};
  } else if (name == "qxq") {
    // idempotents e, f
    set(0, 0, 0), set(1, 1, 1);
    a.unit = {1, 1};
  } else if (name == "ut2") {
    // E11, E12, E22
    set(0, 0, 0), set(0, 1, 1), set(1, 2, 1), set(2, 2, 2);
    a.unit = {1, 0, 1};
  } else {
    throw std::invalid_argument("unknown oracle algebra " + name);
  }
  return a;
}

const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names{"qeps", "qxq", "ut2"};
  return names;
}

Mat hochschild_coboundary(const Algebra& a, std::size_t n) {
  const std::size_t N = a.dim, src = power(N, n), tgt = power(N, n + 1);
  Mat d = zeros(tgt * N, src * N);
  for (std::size_t t = 0; t < tgt; ++t) {
    std::vector<std::size_t> x = digits(t, N, n + 1);
    for (std::size_t k = 0; k < N; ++k) {
      const std::size_t row = t * N + k;
      // x_1 f(x_2, …)
      std::size_t tail = number(std::vector<std::size_t>(x.begin() + 1, x.end()), N);
      for (std::size_t kp = 0; kp < N; ++kp) d[row][tail * N + kp] += a.c(x[0], kp, k);
      // (−1)^i f(…, x_i x_{i+1}, …)
      for (std::size_t i = 0; i < n; ++i) {
        const Q sign = (i + 1) % 2 ? -1 : 1;
        for (std::size_t m = 0; m < N; ++m) {
          Q c = a.c(x[i], x[i + 1], m);
          if (c == 0) continue;
          std::vector<std::size_t> y(x.begin(), x.begin() + i);
          y.push_back(m);
          y.insert(y.end(), x.begin() + i + 2, x.end());
          d[row][number(y, N) * N + k] += sign * c;
        }
      }
      // (−1)^{n+1} f(x_1, …, x_n) x_{n+1}
      const Q sign = (n + 1) % 2 ? -1 : 1;
      std::size_t head = number(std::vector<std::size_t>(x.begin(), x.end() - 1), N);
      for (std::size_t kp = 0; kp < N; ++kp) d[row][head * N + kp] += sign * a.c(kp, x[n], k);
    }
  }
  return d;
}

Mat hochschild_boundary(const Algebra& a, std::size_t n) {
  const std::size_t N = a.dim, src = power(N, n + 1), tgt = power(N, n);
  Mat b = zeros(tgt, src);
  for (std::size_t s = 0; s < src; ++s) {
    std::vector<std::size_t> x = digits(s, N, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Q sign = i % 2 ? -1 : 1;
      for (std::size_t m = 0; m < N; ++m) {
        Q c = a.c(x[i], x[i + 1], m);
        if (c == 0) continue;
        std::vector<std::size_t> y(x.begin(), x.begin() + i);
        y.push_back(m);
        y.insert(y.end(), x.begin() + i + 2, x.end());
        b[number(y, N)][s] += sign * c;
      }
    }
    const Q sign = n % 2 ? -1 : 1;
    for (std::size_t m = 0; m < N; ++m) {
      Q c = a.c(x[n], x[0], m);
      if (c == 0) continue;
      std::vector<std::size_t> y{m};
      y.insert(y.end(), x.begin() + 1, x.end() - 1);
      b[number(y, N)][s] += sign * c;
    }
  }
  return b;
}

std::vector<std::size_t> hochschild_cohomology(const Algebra& a, std::size_t max_degree) {
  std::vector<Mat> d;
  for (std::size_t n = 0; n <= max_degree; ++n) d.push_back(hochschild_coboundary(a, n));
  for (std::size_t n = 1; n <= max_degree; ++n) require_square_zero(d[n], d[n - 1], "Hochschild cochains");
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::size_t z = power(a.dim, n + 1) - rank(d[n]);
    dims.push_back(z - (n == 0 ? 0 : rank(d[n - 1])));
  }
  return dims;
}

std::vector<std::size_t> hochschild_homology(const Algebra& a, std::size_t max_degree) {
  std::vector<Mat> b(max_degree + 2);
  for (std::size_t n = 1; n <= max_degree + 1; ++n) b[n] = hochschild_boundary(a, n);
  for (std::size_t n = 2; n <= max_degree + 1; ++n) require_square_zero(b[n - 1], b[n], "Hochschild chains");
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::size_t z = power(a.dim, n + 1) - (n == 0 ? 0 : rank(b[n]));
    dims.push_back(z - rank(b[n + 1]));
  }
  return dims;
}

std::vector<Q> hochschild_cup(const Algebra& a, std::size_t p, const std::vector<Q>& f, std::size_t q,
                              const std::vector<Q>& g) {
  const std::size_t N = a.dim, tp = power(N, p), tq = power(N, q);
  std::vector<Q> out(tp * tq * N, Q(0));
  for (std::size_t s = 0; s < tp; ++s)
    for (std::size_t t = 0; t < tq; ++t)
      for (std::size_t i = 0; i < N; ++i) {
        if (f[s * N + i] == 0) continue;
        for (std::size_t j = 0; j < N; ++j) {
          if (g[t * N + j] == 0) continue;
          for (std::size_t k = 0; k < N; ++k) out[(s * tq + t) * N + k] += f[s * N + i] * g[t * N + j] * a.c(i, j, k);
        }
      }
  return out;
}

std::size_t hochschild_cup_rank(const Algebra& a, std::size_t p, std::size_t q) {
  const std::size_t cols_p = power(a.dim, p + 1), cols_q = power(a.dim, q + 1);
  auto zp = null_space(hochschild_coboundary(a, p), cols_p);
  auto zq = null_space(hochschild_coboundary(a, q), cols_q);
  Mat rows;
  if (p + q >= 1) {
    Mat d = hochschild_coboundary(a, p + q - 1);
    for (std::size_t c = 0; c < d[0].size(); ++c) {
      std::vector<Q> col(d.size());
      for (std::size_t r = 0; r < d.size(); ++r) col[r] = d[r][c];
      rows.push_back(std::move(col));
    }
  }
  const std::size_t boundaries = rank(rows);
  for (const auto& f : zp)
    for (const auto& g : zq) rows.push_back(hochschild_cup(a, p, f, q, g));
  return rank(rows) - boundaries;
}

// ------------------------------------------------------ Chevalley–Eilenberg

Lie named_lie(const std::string& name) {
  Lie g;
  g.name = name;
  g.dim = name == "abelian1" ? 1 : name == "sl2" ? 3 : 2;
  g.bracket.assign(g.dim * g.dim * g.dim, Q(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) {
    g.bracket[(i * g.dim + j) * g.dim + k] = c;
    g.bracket[(j * g.dim + i) * g.dim + k] = -c;
  };
  if (name == "nonabelian2") {
    set(0, 1, 1, 1);
  } else if (name == "sl2") {
    // e, f, h
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
  } else if (name != "abelian1" && name != "abelian2") {
    throw std::invalid_argument("unknown oracle Lie algebra " + name);
  }
  return g;
}

namespace {

Mat ad(const Lie& g, std::size_t i) {
  Mat m = zeros(g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j)
    for (std::size_t k = 0; k < g.dim; ++k) m[k][j] = g.c(i, j, k);
  return m;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (s.size() == n) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t index_of(const std::vector<std::vector<std::size_t>>& list, const std::vector<std::size_t>& s) {
  return std::lower_bound(list.begin(), list.end(), s) - list.begin();
}

std::vector<std::size_t> without(const std::vector<std::size_t>& s, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != i && k != j) out.push_back(s[k]);
  return out;
}

// x_l ∧ rest as ±(sorted subset), sign 0 when l ∈ rest
int wedge_front(std::size_t l, const std::vector<std::size_t>& rest, std::vector<std::size_t>& out) {
  if (std::find(rest.begin(), rest.end(), l) != rest.end()) return 0;
  std::size_t before = 0;
  for (std::size_t r : rest) before += r < l;
  out = rest;
  out.insert(out.begin() + before, l);
  return before % 2 ? -1 : 1;
}

std::size_t binomial(std::size_t n, std::size_t k) { return k > n ? 0 : subsets(n, k).size(); }

}  // namespace

std::vector<Mat> lie_module(const Lie& g, const std::string& name) {
  std::vector<Mat> rho;
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (name == "trivial") {
      rho.push_back(zeros(1, 1));
    } else if (name == "adjoint") {
      rho.push_back(ad(g, i));
    } else if (name == "coadjoint") {
      Mat a = ad(g, i), t = zeros(g.dim, g.dim);
      for (std::size_t r = 0; r < g.dim; ++r)
        for (std::size_t c = 0; c < g.dim; ++c) t[r][c] = -a[c][r];
      rho.push_back(t);
    } else {
      throw std::invalid_argument("unknown oracle module " + name);
    }
  }
  return rho;
}

std::vector<Q> modular_character(const Lie& g) {
  std::vector<Q> chi(g.dim, Q(0));
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) chi[i] += g.c(i, j, j);
  return chi;
}

Mat ce_coboundary(const Lie& g, const std::vector<Mat>& rho, std::size_t n) {
  const std::size_t dm = rho.empty() ? 0 : rho[0].size();
  auto src = subsets(g.dim, n), tgt = subsets(g.dim, n + 1);
  Mat d = zeros(tgt.size() * dm, src.size() * dm);
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    const auto& s = tgt[t];
    for (std::size_t i = 0; i <= n; ++i) {
      const Q sign = i % 2 ? -1 : 1;
      const std::size_t col = index_of(src, without(s, i));
      for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t c = 0; c < dm; ++c) d[t * dm + r][col * dm + c] += sign * rho[s[i]][r][c];
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Q sign = (i + j) % 2 ? -1 : 1;
        std::vector<std::size_t> rest = without(s, i, j), w;
        for (std::size_t l = 0; l < g.dim; ++l) {
          Q c = g.c(s[i], s[j], l);
          if (c == 0) continue;
          int e = wedge_front(l, rest, w);
          if (e == 0) continue;
          const std::size_t col = index_of(src, w);
          for (std::size_t r = 0; r < dm; ++r) d[t * dm + r][col * dm + r] += sign * c * e;
        }
      }
  }
  return d;
}

Mat ce_boundary(const Lie& g, const std::vector<Mat>& r, std::size_t n) {
  const std::size_t dn = r.empty() ? 0 : r[0].size();
  auto src = subsets(g.dim, n), tgt = subsets(g.dim, n - 1);
  Mat d = zeros(tgt.size() * dn, src.size() * dn);
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& set = src[s];
    for (std::size_t i = 0; i < n; ++i) {
      const Q sign = i % 2 ? -1 : 1;
      const std::size_t row = index_of(tgt, without(set, i));
      for (std::size_t a = 0; a < dn; ++a)
        for (std::size_t b = 0; b < dn; ++b) d[row * dn + a][s * dn + b] += sign * r[set[i]][a][b];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Q sign = (i + j) % 2 ? -1 : 1;
        std::vector<std::size_t> rest = without(set, i, j), w;
        for (std::size_t l = 0; l < g.dim; ++l) {
          Q c = g.c(set[i], set[j], l);
          if (c == 0) continue;
          int e = wedge_front(l, rest, w);
          if (e == 0) continue;
          const std::size_t row = index_of(tgt, w);
          for (std::size_t a = 0; a < dn; ++a) d[row * dn + a][s * dn + a] += sign * c * e;
        }
      }
  }
  return d;
}

std::vector<std::size_t> lie_cohomology(const Lie& g, const std::vector<Mat>& rho) {
  const std::size_t dm = rho.empty() ? 0 : rho[0].size();
  std::vector<Mat> d;
  for (std::size_t n = 0; n < g.dim; ++n) d.push_back(ce_coboundary(g, rho, n));
  for (std::size_t n = 1; n < g.dim; ++n) require_square_zero(d[n], d[n - 1], "CE cochains");
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= g.dim; ++n) {
    std::size_t z = binomial(g.dim, n) * dm - (n < g.dim ? rank(d[n]) : 0);
    dims.push_back(z - (n == 0 ? 0 : rank(d[n - 1])));
  }
  return dims;
}

std::vector<std::size_t> lie_homology(const Lie& g, const std::vector<Mat>& r) {
  const std::size_t dn = r.empty() ? 0 : r[0].size();
  std::vector<Mat> d(g.dim + 1);
  for (std::size_t n = 1; n <= g.dim; ++n) d[n] = ce_boundary(g, r, n);
  for (std::size_t n = 2; n <= g.dim; ++n) require_square_zero(d[n - 1], d[n], "CE chains");
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= g.dim; ++n) {
    std::size_t z = binomial(g.dim, n) * dn - (n == 0 ? 0 : rank(d[n]));
    dims.push_back(z - (n < g.dim ? rank(d[n + 1]) : 0));
  }
  return dims;
}

std::vector<Mat> twisted_right(const Lie& g, const std::vector<Mat>& rho) {
  std::vector<Q> chi = modular_character(g);
  std::vector<Mat> r;
  for (std::size_t i = 0; i < g.dim; ++i) {
    Mat m = rho[i];
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) m[a][b] = -m[a][b] + (a == b ? chi[i] : Q(0));
    r.push_back(std::move(m));
  }
  return r;
}

DualityProfile lie_duality(const Lie& g, const std::vector<Mat>& rho) {
  DualityProfile p;
  p.ext = lie_cohomology(g, rho);
  std::vector<std::size_t> h = lie_homology(g, twisted_right(g, rho));
  for (std::size_t m = 0; m <= g.dim; ++m) p.tor.push_back(h[g.dim - m]);
  return p;
}

}  // namespace oracle
