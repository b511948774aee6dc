// Dense brute-force reference computations. Deliberately naive and shares no
// linear algebra with the library: plain row reduction over GF(p) on dense
// arrays, modules as k-vector spaces with one action matrix per variable.
#ifndef HOMOLAB_TESTS_ORACLE_HPP
#define HOMOLAB_TESTS_ORACLE_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "homolab/session.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // list of columns

inline u64 inv_mod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Reduced row echelon form of a set of vectors (rows), pivots recorded.
struct Rref {
  u64 p;
  std::size_t n;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  std::size_t pivot_limit;  // pivots are searched in [0, pivot_limit)

  Rref(u64 p_, std::size_t n_, std::size_t limit = 0) : p(p_), n(n_), pivot_limit(limit ? limit : n_) {}

  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      u64 c = v[pivots[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + (p - c) * rows[k][j]) % p;
    }
    return v;
  }

  bool add(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < pivot_limit && !v[piv]) ++piv;
    if (piv == pivot_limit) return false;
    u64 s = inv_mod(v[piv], p);
    for (auto& x : v) x = x * s % p;
    for (auto& r : rows) {
      u64 c = r[piv];
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] = (r[j] + (p - c) * v[j]) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows.size(); }
};

inline std::size_t rank(const Mat& cols, std::size_t nrows, u64 p) {
  Rref r(p, nrows);
  for (const auto& c : cols) r.add(c);
  return r.rank();
}

/// Kernel of the linear map whose columns are given (vectors of length cols.size()).
inline Mat kernel(const Mat& cols, std::size_t nrows, u64 p) {
  const std::size_t m = cols.size();
  // Row-reduce [cols^T | I]; rows whose left part vanishes span the kernel.
  std::vector<Vec> aug(m, Vec(nrows + m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) aug[j][i] = cols[j][i];
    aug[j][nrows + j] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < nrows && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && !aug[piv][c]) ++piv;
    if (piv == m) continue;
    std::swap(aug[piv], aug[r]);
    u64 s = inv_mod(aug[r][c], p);
    for (auto& x : aug[r]) x = x * s % p;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == r || !aug[k][c]) continue;
      u64 f = aug[k][c];
      for (std::size_t j = 0; j < nrows + m; ++j) aug[k][j] = (aug[k][j] + (p - f) * aug[r][j]) % p;
    }
    ++r;
  }
  Mat out;
  for (std::size_t k = r; k < m; ++k) out.emplace_back(aug[k].begin() + nrows, aug[k].end());
  return out;
}

/// A finite-length module: basis of size dim, x_v acts by act[v] (columns).
struct Module {
  u64 p = 0;
  std::size_t dim = 0;
  std::vector<Mat> act;

  Vec apply(std::size_t v, const Vec& w) const {
    Vec out(dim, 0);
    for (std::size_t j = 0; j < dim; ++j)
      if (w[j])
        for (std::size_t i = 0; i < dim; ++i) out[i] = (out[i] + w[j] * act[v][j][i]) % p;
    return out;
  }

  /// Action of a monomial x^e.
  Vec apply_monomial(const homolab::Monomial& m, Vec w) const {
    for (std::size_t v = 0; v < act.size(); ++v)
      for (int k = 0; k < m[v]; ++k) w = apply(v, w);
    return w;
  }
};

/// Everything about A that the oracle needs, read off monomial normal forms.
struct Ring {
  homolab::AlgebraPtr a;
  u64 p;
  std::size_t n, nvars;

  explicit Ring(homolab::AlgebraPtr alg)
      : a(std::move(alg)), p(a->field().characteristic()), n(a->dim()), nvars(a->nvars()) {}

  Vec to_dense(const homolab::AlgElem& e) const {
    Vec v(n, 0);
    for (const auto& t : e) v[t.index] = t.value;
    return v;
  }

  /// x_v * basis monomial i, computed from polynomial normal form.
  Vec times_variable(std::size_t v, std::size_t i) const {
    auto m = a->basis_monomial(static_cast<std::uint32_t>(i)) * homolab::Monomial::variable(nvars, v);
    auto poly = homolab::Polynomial::monomial(a->ring_ptr(), m);
    auto nf = homolab::normal_form(poly, a->groebner_basis());
    Vec out(n, 0);
    for (const auto& [mono, c] : nf.terms()) out[*a->index_of(mono)] = c;
    return out;
  }

  /// A^r with the regular action; coordinates (gen, monomial) -> gen*n + monomial.
  Module free_module(std::size_t r) const {
    Module f{p, r * n, std::vector<Mat>(nvars)};
    for (std::size_t v = 0; v < nvars; ++v) {
      f.act[v].assign(f.dim, Vec(f.dim, 0));
      for (std::size_t i = 0; i < n; ++i) {
        auto col = times_variable(v, i);
        for (std::size_t g = 0; g < r; ++g)
          for (std::size_t k = 0; k < n; ++k) f.act[v][g * n + i][g * n + k] = col[k];
      }
    }
    return f;
  }
};

/// Submodule given by a basis (columns in ambient coordinates) as a module.
/// Coordinates come from reducing [b | e_j] rows, so the tail records the
/// combination of basis vectors used.
inline Module restrict(const Module& amb, const Mat& basis) {
  const std::size_t d = amb.dim, r = basis.size();
  Rref ext(amb.p, d + r, d);
  for (std::size_t j = 0; j < r; ++j) {
    Vec row(d + r, 0);
    std::copy(basis[j].begin(), basis[j].end(), row.begin());
    row[d + j] = 1;
    ext.add(row);
  }
  Module s{amb.p, r, std::vector<Mat>(amb.act.size())};
  for (std::size_t v = 0; v < amb.act.size(); ++v)
    for (const auto& b : basis) {
      Vec y(d + r, 0);
      auto img = amb.apply(v, b);
      std::copy(img.begin(), img.end(), y.begin());
      y = ext.reduce(y);
      Vec x(r);
      for (std::size_t j = 0; j < r; ++j) x[j] = (amb.p - y[d + j]) % amb.p;
      s.act[v].push_back(x);
    }
  return s;
}

/// Quotient amb / span(sub). The quotient basis is the set of non-pivot
/// coordinates of the reduced subspace.
struct Quotient {
  Module module;
  Rref sub;
  std::vector<std::size_t> keep;

  Vec project(const Vec& w) const {
    auto r = sub.reduce(w);
    Vec out(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) out[k] = r[keep[k]];
    return out;
  }
};

inline Quotient quotient(const Module& amb, const Mat& gens_of_sub) {
  Quotient q{Module{amb.p, 0, {}}, Rref(amb.p, amb.dim), {}};
  // Close the span under the action.
  std::vector<Vec> queue(gens_of_sub.begin(), gens_of_sub.end());
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    if (!q.sub.add(v)) continue;
    for (std::size_t x = 0; x < amb.act.size(); ++x) queue.push_back(amb.apply(x, v));
  }
  std::vector<bool> piv(amb.dim, false);
  for (auto c : q.sub.pivots) piv[c] = true;
  for (std::size_t i = 0; i < amb.dim; ++i)
    if (!piv[i]) q.keep.push_back(i);
  q.module = Module{amb.p, q.keep.size(), std::vector<Mat>(amb.act.size())};
  for (std::size_t x = 0; x < amb.act.size(); ++x)
    for (auto i : q.keep) {
      Vec e(amb.dim, 0);
      e[i] = 1;
      q.module.act[x].push_back(q.project(amb.apply(x, e)));
    }
  return q;
}

/// coker(A^r <- relations), relation columns as vectors of algebra elements.
inline Module presented(const Ring& R, std::size_t r, const std::vector<std::vector<homolab::AlgElem>>& cols) {
  auto f = R.free_module(r);
  Mat sub;
  for (const auto& col : cols) {
    Vec w(f.dim, 0);
    for (std::size_t g = 0; g < r; ++g)
      for (const auto& t : col[g]) w[g * R.n + t.index] = t.value;
    sub.push_back(w);
  }
  return quotient(f, sub).module;
}

inline Module from_graded(const Ring& R, const homolab::GradedModule& m) {
  std::vector<std::vector<homolab::AlgElem>> cols;
  for (std::size_t j = 0; j < m.relations().size(); ++j) cols.push_back(m.relation_column(j));
  return presented(R, m.gen_degrees().size(), cols);
}

/// Minimal generators of M: a complement of mM.
inline Mat minimal_generators(const Module& m) {
  Rref mm(m.p, m.dim);
  for (std::size_t x = 0; x < m.act.size(); ++x)
    for (const auto& c : m.act[x]) mm.add(c);
  Mat gens;
  Rref span = mm;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Vec e(m.dim, 0);
    e[i] = 1;
    if (span.add(e)) gens.push_back(e);
  }
  return gens;
}

/// Minimal free resolution by repeated kernels. diffs[i] (i >= 1) lists, for
/// each generator of F_i, its image in F_{i-1} coordinates.
struct Resolution {
  std::vector<std::size_t> betti;
  std::vector<Mat> diffs;
};

inline Resolution resolve(const Ring& R, Module m, int steps) {
  Resolution res;
  res.diffs.push_back({});
  for (int i = 0; i <= steps; ++i) {
    auto gens = minimal_generators(m);
    res.betti.push_back(gens.size());
    if (i == steps || gens.empty()) break;
    // Cover A^b -> m, e_g * mono -> mono . gens[g].
    const std::size_t b = gens.size();
    Mat phi;
    for (std::size_t g = 0; g < b; ++g)
      for (std::size_t k = 0; k < R.n; ++k) phi.push_back(m.apply_monomial(R.a->basis_monomial(k), gens[g]));
    auto ker = kernel(phi, m.dim, m.p);
    auto f = R.free_module(b);
    auto next = restrict(f, ker);
    // Record the generators of the kernel in F_i coordinates for d_{i+1}.
    auto kg = minimal_generators(next);
    Mat img;
    for (const auto& c : kg) {
      Vec w(f.dim, 0);
      for (std::size_t j = 0; j < ker.size(); ++j)
        if (c[j])
          for (std::size_t t = 0; t < f.dim; ++t) w[t] = (w[t] + c[j] * ker[j][t]) % m.p;
      img.push_back(w);
    }
    res.diffs.push_back(img);
    m = next;
  }
  while (res.betti.size() < static_cast<std::size_t>(steps) + 1) res.betti.push_back(0);
  return res;
}

/// dim Tor_i(M, N) for 0 <= i < steps, from the oracle resolution of M.
inline std::vector<std::size_t> tor(const Ring& R, const Resolution& r, const Module& n, int steps) {
  std::vector<std::size_t> out;
  // rank of d_i (x) N, one column per (generator of F_i, basis vector of N)
  auto rank_of = [&](std::size_t i) -> std::size_t {
    if (i == 0 || i >= r.diffs.size() || r.betti[i] == 0) return 0;
    const std::size_t src = r.betti[i - 1];
    Mat cols;
    for (const auto& img : r.diffs[i])
      for (std::size_t t = 0; t < n.dim; ++t) {
        Vec e(n.dim, 0);
        e[t] = 1;
        Vec col(src * n.dim, 0);
        for (std::size_t h = 0; h < src; ++h)
          for (std::size_t k = 0; k < R.n; ++k) {
            u64 c = img[h * R.n + k];
            if (!c) continue;
            auto w = n.apply_monomial(R.a->basis_monomial(k), e);
            for (std::size_t s = 0; s < n.dim; ++s) col[h * n.dim + s] = (col[h * n.dim + s] + c * w[s]) % R.p;
          }
        cols.push_back(col);
      }
    return rank(cols, src * n.dim, R.p);
  };
  for (int i = 0; i < steps; ++i) {
    const std::size_t chain = r.betti[i] * n.dim;
    out.push_back(chain - rank_of(i) - rank_of(i + 1));
  }
  return out;
}

/// dim Ext^i(M, N) for 0 <= i < steps: cohomology of Hom(F, N) = N^{b_i}.
inline std::vector<std::size_t> ext(const Ring& R, const Resolution& r, const Module& n, int steps) {
  // rank of delta^i : Hom(F_{i-1}, N) -> Hom(F_i, N), columns indexed by (h, t)
  auto rank_of = [&](std::size_t i) -> std::size_t {
    if (i == 0 || i >= r.diffs.size() || r.betti[i] == 0) return 0;
    const std::size_t src = r.betti[i - 1], tgt = r.betti[i];
    Mat cols;
    for (std::size_t h = 0; h < src; ++h)
      for (std::size_t t = 0; t < n.dim; ++t) {
        Vec e(n.dim, 0);
        e[t] = 1;
        Vec col(tgt * n.dim, 0);
        for (std::size_t j = 0; j < tgt; ++j)
          for (std::size_t k = 0; k < R.n; ++k) {
            u64 c = r.diffs[i][j][h * R.n + k];
            if (!c) continue;
            auto w = n.apply_monomial(R.a->basis_monomial(k), e);
            for (std::size_t s = 0; s < n.dim; ++s) col[j * n.dim + s] = (col[j * n.dim + s] + c * w[s]) % R.p;
          }
        cols.push_back(col);
      }
    return rank(cols, tgt * n.dim, R.p);
  };
  std::vector<std::size_t> out;
  for (int i = 0; i < steps; ++i) out.push_back(r.betti[i] * n.dim - rank_of(i) - rank_of(i + 1));
  return out;
}

/// Socle dimension straight from the definition.
inline std::size_t socle_dim(const Module& m) {
  // x in socle iff every action kills it: kernel of the stacked map.
  std::vector<Vec> cols(m.dim, Vec(m.dim * m.act.size(), 0));
  for (std::size_t x = 0; x < m.act.size(); ++x)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t i = 0; i < m.dim; ++i) cols[j][x * m.dim + i] = m.act[x][j][i];
  return kernel(cols, m.dim * m.act.size(), m.p).size();
}

}  // namespace oracle

namespace testutil {

inline std::string fixture_path(const std::string& name) { return std::string(HOMOLAB_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  homolab::SessionInput session;
  homolab::AlgebraPtr algebra;
  homolab::GradedModule module(const std::string& name) const {
    return homolab::build_module(session, algebra, name);
  }
};

inline Loaded load(const std::string& name) {
  Loaded l;
  l.session = homolab::parse_input(read_fixture(name));
  l.algebra = homolab::build_algebra(l.session);
  return l;
}

inline const std::vector<std::string>& ring_fixtures() {
  static const std::vector<std::string> names = {"ci2.alg", "ci3.alg", "cubic.alg", "pfaffian.alg", "sw.alg", "sw_lex.alg"};
  return names;
}

}  // namespace testutil

#endif  // HOMOLAB_TESTS_ORACLE_HPP
