#ifndef HOMOLAB_ALGEBRA_HPP
#define HOMOLAB_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homolab/echelon.hpp"
#include "homolab/groebner.hpp"

namespace homolab {

/// Element of an algebra or of a finite k-space: coordinates on a basis.
using AlgElem = SparseVec;

/// An Artinian standard graded algebra A = k[x_1..x_n]/I materialized as
/// standard monomials per degree plus full multiplication tables.
///
/// Basis elements are numbered degree by degree (and, inside a degree,
/// descending in the monomial order), so index 0 is the unit and indices
/// 1..n are the variables in some order.
class QuotientAlgebra {
 public:
  /// Validates the ideal and builds the algebra. Throws NonHomogeneousIdeal,
  /// LinearFormsPresent, NotArtinian.
  static std::shared_ptr<const QuotientAlgebra> from_ideal(std::shared_ptr<const PolyRing> ring,
                                                           std::vector<Polynomial> generators) {
    for (const auto& g : generators)
      if (!g.is_homogeneous())
        throw Error(ErrorCode::NonHomogeneousIdeal, "generator " + format_polynomial(g) + " is not homogeneous");
    std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
    for (const auto& g : generators)
      if (g.degree() <= 1)
        throw Error(ErrorCode::LinearFormsPresent,
                    "generator " + format_polynomial(g) + " has degree " + std::to_string(g.degree()));
    GroebnerBasis gb;
    if (!generators.empty()) gb = groebner(generators);
    return quotient_structure(ring, std::move(generators), std::move(gb));
  }

  /// Builds the algebra from an already reduced Gröbner basis.
  static std::shared_ptr<const QuotientAlgebra> quotient_structure(std::shared_ptr<const PolyRing> ring,
                                                                   std::vector<Polynomial> generators,
                                                                   GroebnerBasis gb) {
    return std::shared_ptr<const QuotientAlgebra>(
        new QuotientAlgebra(std::move(ring), std::move(generators), std::move(gb)));
  }

  const PolyRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const PolyRing>& ring_ptr() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Polynomial>& ideal_generators() const noexcept { return generators_; }
  const GroebnerBasis& groebner_basis() const noexcept { return gb_; }

  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(basis_.size()); }
  int socle_degree() const noexcept { return static_cast<int>(degree_start_.size()) - 2; }
  /// dim A_d (zero outside [0, s]).
  std::uint32_t dim(int d) const {
    if (d < 0 || d > socle_degree()) return 0;
    return degree_start_[d + 1] - degree_start_[d];
  }
  std::uint32_t degree_begin(int d) const { return degree_start_[std::clamp(d, 0, socle_degree() + 1)]; }
  std::uint32_t degree_end(int d) const { return degree_begin(d + 1); }
  std::vector<std::uint32_t> hilbert_function() const {
    std::vector<std::uint32_t> h;
    for (int d = 0; d <= socle_degree(); ++d) h.push_back(dim(d));
    return h;
  }

  const Monomial& basis_monomial(std::uint32_t i) const { return basis_[i]; }
  int degree_of(std::uint32_t i) const { return degree_[i]; }
  std::vector<Monomial> basis_in_degree(int d) const {
    return {basis_.begin() + degree_begin(d), basis_.begin() + degree_end(d)};
  }
  /// For i > 0: a variable v and basis index j with basis(i) = x_v * basis(j).
  std::pair<std::size_t, std::uint32_t> parent(std::uint32_t i) const { return parent_[i]; }
  std::uint32_t variable_index(std::size_t v) const { return variable_index_[v]; }
  std::optional<std::uint32_t> index_of(const Monomial& m) const {
    auto it = index_.find(m.exponents());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Structure constants: basis(i) * basis(j) in coordinates.
  const AlgElem& product(std::uint32_t i, std::uint32_t j) const { return mul_[std::size_t{i} * dim() + j]; }
  const AlgElem& times_variable(std::size_t v, std::uint32_t i) const { return product(variable_index_[v], i); }

  AlgElem multiply(const AlgElem& a, const AlgElem& b) const {
    SparseAccumulator acc(field());
    for (const auto& x : a)
      for (const auto& y : b) acc.add(product(x.index, y.index), field().mul(x.value, y.value));
    return acc.finish();
  }

  /// Coordinates of the class of p.
  AlgElem element(const Polynomial& p) const {
    require_same_field(p.ring().field, field());
    auto nf = gb_.empty() ? p : normal_form(p, gb_);
    SparseAccumulator acc(field());
    for (const auto& [m, c] : nf.terms()) {
      auto idx = index_of(m);
      if (idx) acc.add(*idx, c);
    }
    return acc.finish();
  }

  Polynomial to_polynomial(const AlgElem& a) const {
    Polynomial p(ring_);
    for (const auto& e : a) p.add_term(basis_[e.index], e.value);
    return p;
  }

  std::string format(const AlgElem& a) const { return format_polynomial(to_polynomial(a)); }

  /// Homogeneous degree of a nonzero element, or nullopt if mixed.
  std::optional<int> homogeneous_degree(const AlgElem& a) const {
    if (a.empty()) return std::nullopt;
    int d = degree_[a.front().index];
    for (const auto& e : a)
      if (degree_[e.index] != d) return std::nullopt;
    return d;
  }

 private:
  QuotientAlgebra(std::shared_ptr<const PolyRing> ring, std::vector<Polynomial> generators, GroebnerBasis gb)
      : ring_(std::move(ring)), generators_(std::move(generators)), gb_(std::move(gb)) {
    const auto n = ring_->nvars();
    for (const auto& g : gb_) {
      if (!g.is_homogeneous())
        throw Error(ErrorCode::NonHomogeneousIdeal, "basis element " + format_polynomial(g));
      if (g.degree() <= 1)
        throw Error(ErrorCode::LinearFormsPresent, "ideal contains " + format_polynomial(g));
    }
    std::vector<bool> has_power(n, false);
    for (const auto& g : gb_)
      if (auto v = g.leading_monomial().pure_power_variable()) has_power[*v] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (!has_power[v])
        throw Error(ErrorCode::NotArtinian, "no power of " + ring_->var_names[v] + " lies in the ideal");

    auto is_standard = [&](const Monomial& m) {
      for (const auto& g : gb_)
        if (g.leading_monomial().divides(m)) return false;
      return true;
    };
    MonomialCompare less{ring_->order};
    std::vector<Monomial> layer{Monomial(n)};
    degree_start_.push_back(0);
    while (!layer.empty()) {
      std::sort(layer.begin(), layer.end(), [&](const Monomial& a, const Monomial& b) { return less(b, a); });
      for (auto& m : layer) {
        index_.emplace(m.exponents(), static_cast<std::uint32_t>(basis_.size()));
        degree_.push_back(m.degree());
        basis_.push_back(m);
      }
      degree_start_.push_back(static_cast<std::uint32_t>(basis_.size()));
      std::map<std::vector<int>, Monomial> next;
      for (const auto& m : layer)
        for (std::size_t v = 0; v < n; ++v) {
          auto up = m * Monomial::variable(n, v);
          if (is_standard(up)) next.emplace(up.exponents(), up);
        }
      layer.clear();
      for (auto& [k, m] : next) layer.push_back(m);
    }

    parent_.assign(basis_.size(), {0, 0});
    for (std::uint32_t i = 1; i < basis_.size(); ++i) {
      const auto& m = basis_[i];
      std::size_t v = 0;
      while (m[v] == 0) ++v;
      parent_[i] = {v, *index_of(m / Monomial::variable(n, v))};
    }
    variable_index_.resize(n);
    for (std::size_t v = 0; v < n; ++v) variable_index_[v] = *index_of(Monomial::variable(n, v));

    const auto d = dim();
    mul_.resize(std::size_t{d} * d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = i; j < d; ++j) {
        auto prod = basis_[i] * basis_[j];
        AlgElem e;
        if (auto idx = index_of(prod)) {
          e = unit_vector(*idx);
        } else if (prod.degree() <= socle_degree()) {
          e = element(Polynomial::monomial(ring_, prod));
        }
        mul_[std::size_t{i} * d + j] = e;
        mul_[std::size_t{j} * d + i] = std::move(e);
      }
  }

  std::shared_ptr<const PolyRing> ring_;
  std::vector<Polynomial> generators_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::vector<int> degree_;
  std::vector<std::uint32_t> degree_start_;
  std::map<std::vector<int>, std::uint32_t> index_;
  std::vector<std::pair<std::size_t, std::uint32_t>> parent_;
  std::vector<std::uint32_t> variable_index_;
  std::vector<AlgElem> mul_;
};

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// Convenience: parse generators in the given ring and build the algebra.
inline AlgebraPtr make_algebra(Scalar characteristic, std::vector<std::string> vars,
                               const std::vector<std::string>& ideal,
                               MonomialOrder order = MonomialOrder::DegRevLex) {
  auto ring = std::make_shared<const PolyRing>(PolyRing{PrimeField(characteristic), std::move(vars), order});
  std::vector<Polynomial> gens;
  for (const auto& s : ideal) gens.push_back(parse_polynomial(s, ring));
  return QuotientAlgebra::from_ideal(ring, std::move(gens));
}

}  // namespace homolab

#endif  // HOMOLAB_ALGEBRA_HPP
