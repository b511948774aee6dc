#ifndef HOMOLAB_GROEBNER_HPP
#define HOMOLAB_GROEBNER_HPP

#include <algorithm>
#include <vector>

#include "homolab/polynomial.hpp"

namespace homolab {

using GroebnerBasis = std::vector<Polynomial>;

/// Full reduction of p by the given basis: no term of the result is divisible
/// by a leading monomial of the basis.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  const auto& f = p.ring().field;
  Polynomial remainder(p.ring_ptr());
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const Scalar lc = rest.leading_coefficient();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      remainder.add_term(lm, lc);
      rest.add_term(lm, f.neg(lc));
      continue;
    }
    Scalar factor = f.neg(f.mul(lc, f.inv(divisor->leading_coefficient())));
    rest = rest + divisor->scaled(factor, lm / divisor->leading_monomial());
  }
  return remainder;
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.ring().field;
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  auto sa = a.scaled(f.inv(a.leading_coefficient()), l / a.leading_monomial());
  auto sb = b.scaled(f.inv(b.leading_coefficient()), l / b.leading_monomial());
  return sa - sb;
}

/// Interreduces a Gröbner basis to the unique reduced one (monic, sorted by
/// leading monomial, ascending).
inline GroebnerBasis reduce_basis(GroebnerBasis g) {
  std::erase_if(g, [](const Polynomial& p) { return p.is_zero(); });
  GroebnerBasis minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  GroebnerBasis reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& lead = minimal[i].leading_monomial();
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].ring_ptr(), lead);
    reduced.push_back(Polynomial::monomial(minimal[i].ring_ptr(), lead) + normal_form(tail, others));
  }
  MonomialCompare less{minimal.empty() ? MonomialOrder::DegRevLex : minimal.front().ring().order};
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

/// Buchberger completion with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-term criterion. Returns the reduced basis.
inline GroebnerBasis groebner(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw Error(ErrorCode::Precondition, "groebner: no generators");
  const auto ring = generators.front().ring_ptr();
  for (const auto& g : generators)
    if (!(g.ring() == *ring)) throw Error(ErrorCode::CharacteristicMismatch, "generators from different rings");
  MonomialCompare less{ring->order};

  GroebnerBasis basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(g.monic());

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, basis[i].leading_monomial().lcm(basis[k].leading_monomial())});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return less(a.lcm, b.lcm);
    });
    Pair pr = *best;
    pairs.erase(best);
    const auto& a = basis[pr.i];
    const auto& b = basis[pr.j];
    if (a.leading_monomial().coprime(b.leading_monomial())) continue;
    auto r = normal_form(s_polynomial(a, b), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return reduce_basis(std::move(basis));
}

}  // namespace homolab

#endif  // HOMOLAB_GROEBNER_HPP
