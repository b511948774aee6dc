#ifndef HOMOLAB_INVARIANTS_HPP
#define HOMOLAB_INVARIANTS_HPP

#include <map>
#include <vector>

#include "homolab/algebra.hpp"

namespace homolab {

struct RingInvariants {
  std::uint64_t e = 0;
  std::uint64_t c = 0;
  std::uint64_t ell = 0;
  std::uint64_t tau = 0;
  std::vector<std::uint64_t> h_vector;
  std::uint64_t mu_I = 0;
  std::uint64_t mu_m2 = 0;

  bool gorenstein = false;
  bool complete_intersection = false;
  bool hypersurface = false;
  bool stretched = false;
  bool m4_zero = false;

  /// Fills the derived flags from the numeric fields.
  void derive_flags() {
    gorenstein = tau == 1;
    complete_intersection = mu_I == c;
    hypersurface = c <= 1 || mu_I <= 1;
    stretched = e + 1 == c + ell;
    m4_zero = ell <= 4;
  }
};

/// Basis of the socle (0 :_A m), as elements of A; degree by degree.
inline std::vector<AlgElem> socle_basis(const QuotientAlgebra& a) {
  std::vector<AlgElem> out;
  const auto n = a.nvars();
  for (int d = 0; d <= a.socle_degree(); ++d) {
    Echelon ech(a.field(), static_cast<std::uint32_t>(n * a.dim()));
    for (auto i = a.degree_begin(d); i < a.degree_end(d); ++i) {
      SparseVec image;
      for (std::size_t v = 0; v < n; ++v)
        for (const auto& t : a.times_variable(v, i))
          image.push_back({static_cast<std::uint32_t>(v * a.dim() + t.index), t.value});
      if (auto rel = ech.insert(std::move(image), unit_vector(i))) out.push_back(std::move(*rel));
    }
  }
  return out;
}

namespace detail {

inline void monomials_of_degree(std::size_t n, int d, std::size_t v, std::vector<int>& exps,
                                std::vector<Monomial>& out) {
  if (v + 1 == n) {
    exps[v] = d;
    out.emplace_back(exps);
    return;
  }
  for (int k = d; k >= 0; --k) {
    exps[v] = k;
    monomials_of_degree(n, d - k, v + 1, exps, out);
  }
}

}  // namespace detail

inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial(0)} : out;
  std::vector<int> exps(n, 0);
  detail::monomials_of_degree(n, d, 0, exps, out);
  return out;
}

/// Number of minimal generators of I in each degree: dim I_d - dim (m I)_d,
/// for d = 2 .. s+1 (no minimal generator lives above s+1).
inline std::map<int, std::uint64_t> ideal_generator_degrees(const QuotientAlgebra& a) {
  std::map<int, std::uint64_t> out;
  const auto n = a.nvars();
  const auto& ring = a.ring_ptr();
  // I_{d-1} spanned by m - NF(m), m running over non-standard monomials
  std::vector<Polynomial> prev;
  for (int d = 1; d <= a.socle_degree() + 1; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::map<std::vector<int>, std::uint32_t> index;
    for (const auto& m : monos) index.emplace(m.exponents(), static_cast<std::uint32_t>(index.size()));
    auto coords = [&](const Polynomial& p) {
      SparseAccumulator acc(a.field());
      for (const auto& [m, c] : p.terms()) acc.add(index.at(m.exponents()), c);
      return acc.finish();
    };
    Echelon mi(a.field(), static_cast<std::uint32_t>(monos.size()));
    for (const auto& g : prev)
      for (std::size_t v = 0; v < n; ++v) mi.insert(coords(g * Polynomial::monomial(ring, Monomial::variable(n, v))));
    const std::uint64_t dim_i = monos.size() - a.dim(d);
    if (dim_i > mi.rank()) out[d] = dim_i - mi.rank();
    prev.clear();
    for (const auto& m : monos)
      if (!a.index_of(m)) {
        auto p = Polynomial::monomial(ring, m);
        prev.push_back(p - normal_form(p, a.groebner_basis()));
      }
  }
  return out;
}

inline RingInvariants ring_invariants(const QuotientAlgebra& a) {
  RingInvariants inv;
  for (auto h : a.hilbert_function()) inv.h_vector.push_back(h);
  inv.e = a.dim();
  inv.c = a.nvars();
  inv.ell = static_cast<std::uint64_t>(a.socle_degree()) + 1;
  inv.tau = socle_basis(a).size();
  for (const auto& [d, k] : ideal_generator_degrees(a)) inv.mu_I += k;
  inv.mu_m2 = a.dim(2);
  inv.derive_flags();
  return inv;
}

}  // namespace homolab

#endif  // HOMOLAB_INVARIANTS_HPP
