#ifndef HOMOLAB_KOSZUL_HPP
#define HOMOLAB_KOSZUL_HPP

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "homolab/invariants.hpp"

namespace homolab {

/// Koszul homology H(x_1..x_n; A) with its algebra structure, reduced to
/// representatives.
struct KoszulHomology {
  std::vector<std::uint64_t> dims;
  /// rank of H_1 * H_1 inside H_2
  std::uint64_t d11 = 0;
  /// rank of H_1 * H_2 inside H_3
  std::uint64_t d12 = 0;
  /// rank of H_1 -> Hom(H_2, H_3)
  std::uint64_t r_g = 0;
  /// rank of H_2 -> Hom(H_1, H_3)
  std::uint64_t r_21 = 0;

  std::uint64_t dim(std::size_t i) const { return i < dims.size() ? dims[i] : 0; }
};

/// The Koszul complex K = (exterior algebra on n generators) (x) A, with
/// k-basis (subset S, monomial b) in each homological degree.
class KoszulComplex {
 public:
  explicit KoszulComplex(AlgebraPtr a) : a_(std::move(a)) {
    const auto n = a_->nvars();
    subsets_.resize(n + 1);
    position_.assign(std::size_t{1} << n, 0);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      auto k = std::popcount(s);
      position_[s] = static_cast<std::uint32_t>(subsets_[k].size());
      subsets_[k].push_back(s);
    }
  }

  const QuotientAlgebra& algebra() const { return *a_; }
  std::size_t length() const { return a_->nvars(); }
  std::uint32_t dim(std::size_t i) const {
    return i < subsets_.size() ? static_cast<std::uint32_t>(subsets_[i].size()) * a_->dim() : 0;
  }
  std::uint32_t index(std::uint32_t subset, std::uint32_t mono) const {
    return position_[subset] * a_->dim() + mono;
  }
  std::uint32_t subset_of(std::size_t i, std::uint32_t idx) const { return subsets_[i][idx / a_->dim()]; }
  std::uint32_t mono_of(std::uint32_t idx) const { return idx % a_->dim(); }

  /// d(e_S (x) b) = sum_{j in S} (-1)^{#{l in S : l < j}} e_{S - j} (x) x_j b
  SparseVec boundary(std::size_t i, const SparseVec& w) const {
    const auto& f = a_->field();
    SparseAccumulator acc(f);
    for (const auto& e : w) {
      auto s = subset_of(i, e.index);
      auto b = mono_of(e.index);
      for (std::size_t j = 0; j < length(); ++j) {
        if (!(s >> j & 1u)) continue;
        bool negative = std::popcount(s & ((1u << j) - 1)) % 2 == 1;
        auto rest = s & ~(1u << j);
        Scalar c = negative ? f.neg(e.value) : e.value;
        for (const auto& t : a_->times_variable(j, b)) acc.add(index(rest, t.index), f.mul(c, t.value));
      }
    }
    return acc.finish();
  }

  /// Exterior-algebra product e_S a * e_T b = sign(S,T) e_{S u T} ab.
  SparseVec multiply(std::size_t i, const SparseVec& u, std::size_t j, const SparseVec& w) const {
    const auto& f = a_->field();
    SparseAccumulator acc(f);
    for (const auto& x : u) {
      auto s = subset_of(i, x.index);
      for (const auto& y : w) {
        auto t = subset_of(j, y.index);
        if (s & t) continue;
        int inversions = 0;
        for (std::size_t k = 0; k < length(); ++k)
          if (t >> k & 1u) inversions += std::popcount(s >> (k + 1));
        Scalar c = f.mul(x.value, y.value);
        if (inversions % 2) c = f.neg(c);
        for (const auto& p : a_->product(mono_of(x.index), mono_of(y.index)))
          acc.add(index(s | t, p.index), f.mul(c, p.value));
      }
    }
    return acc.finish();
  }

 private:
  AlgebraPtr a_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::vector<std::uint32_t> position_;
};

/// Homology of one spot of the Koszul complex: representatives of a basis of
/// Z_i / B_i and a reducer expressing cycles in that basis.
class KoszulSpot {
 public:
  KoszulSpot(const KoszulComplex& k, std::size_t i) : ech_(k.algebra().field(), k.dim(i)) {
    for (std::uint32_t idx = 0; idx < k.dim(i + 1); ++idx) ech_.insert(k.boundary(i + 1, unit_vector(idx)));
    Echelon cycles(k.algebra().field(), i == 0 ? 1 : k.dim(i - 1));
    for (std::uint32_t idx = 0; idx < k.dim(i); ++idx) {
      auto z = i == 0 ? std::optional<SparseVec>(unit_vector(idx))
                      : cycles.insert(k.boundary(i, unit_vector(idx)), unit_vector(idx));
      if (!z) continue;
      if (ech_.insert(*z, unit_vector(static_cast<std::uint32_t>(reps_.size())))) continue;
      reps_.push_back(std::move(*z));
    }
  }

  const std::vector<SparseVec>& representatives() const { return reps_; }
  std::size_t dim() const { return reps_.size(); }
  /// Coordinates of the class of a cycle.
  SparseVec coordinates(const SparseVec& cycle) const {
    SparseVec coords;
    auto rest = ech_.reduce(cycle, &coords);
    if (!rest.empty()) throw Error(ErrorCode::Precondition, "element is not a cycle");
    return coords;
  }

 private:
  Echelon ech_;
  std::vector<SparseVec> reps_;
};

/// Koszul homology dims and the low-degree product ranks.
inline KoszulHomology koszul_homology(const AlgebraPtr& a) {
  KoszulComplex k(a);
  KoszulHomology out;
  std::vector<KoszulSpot> spots;
  for (std::size_t i = 0; i <= k.length(); ++i) {
    spots.emplace_back(k, i);
    out.dims.push_back(spots.back().dim());
  }
  if (k.length() < 2) return out;
  const auto& f = a->field();
  const auto& h1 = spots[1];
  const auto& h2 = spots[2];
  {
    std::vector<SparseVec> prods;
    for (const auto& u : h1.representatives())
      for (const auto& w : h1.representatives()) prods.push_back(h2.coordinates(k.multiply(1, u, 1, w)));
    out.d11 = sparse_rank(f, static_cast<std::uint32_t>(std::max<std::size_t>(h2.dim(), 1)), prods);
  }
  if (k.length() < 3) return out;
  const auto& h3 = spots[3];
  const auto n1 = h1.dim(), n2 = h2.dim(), n3 = std::max<std::size_t>(h3.dim(), 1);
  // table[a][b] = coordinates of h1_a * h2_b in H_3
  std::vector<std::vector<SparseVec>> table(n1, std::vector<SparseVec>(n2));
  std::vector<SparseVec> all;
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) {
      table[x][y] = h3.coordinates(k.multiply(1, h1.representatives()[x], 2, h2.representatives()[y]));
      all.push_back(table[x][y]);
    }
  out.d12 = sparse_rank(f, static_cast<std::uint32_t>(n3), all);
  std::vector<SparseVec> rows_g, rows_21;
  for (std::size_t x = 0; x < n1; ++x) {
    SparseVec v;
    for (std::size_t y = 0; y < n2; ++y)
      for (const auto& e : table[x][y]) v.push_back({static_cast<std::uint32_t>(y * n3 + e.index), e.value});
    rows_g.push_back(std::move(v));
  }
  for (std::size_t y = 0; y < n2; ++y) {
    SparseVec v;
    for (std::size_t x = 0; x < n1; ++x)
      for (const auto& e : table[x][y]) v.push_back({static_cast<std::uint32_t>(x * n3 + e.index), e.value});
    rows_21.push_back(std::move(v));
  }
  out.r_g = sparse_rank(f, static_cast<std::uint32_t>(n2 * n3 + 1), rows_g);
  out.r_21 = sparse_rank(f, static_cast<std::uint32_t>(n1 * n3 + 1), rows_21);
  return out;
}

enum class TorClassTag { CI, TE, B, G, H, Unknown };

struct TorAlgebraClass {
  TorClassTag tag = TorClassTag::Unknown;
  /// G(r): r in p; H(p,q): p, q
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  KoszulHomology evidence;

  std::string name() const {
    switch (tag) {
      case TorClassTag::CI: return "CI";
      case TorClassTag::TE: return "TE";
      case TorClassTag::B: return "B";
      case TorClassTag::G: return "G(" + std::to_string(p) + ")";
      case TorClassTag::H: return "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case TorClassTag::Unknown: break;
    }
    return "UNKNOWN";
  }
  friend bool operator==(const TorAlgebraClass& x, const TorAlgebraClass& y) {
    return x.tag == y.tag && x.p == y.p && x.q == y.q;
  }
};

/// Codimension-three class from (mu_I, tau) and the ranks
/// p = rank H1*H1, q = rank H1*H2, r = rank H2 -> Hom(H1, H3).
inline TorAlgebraClass classify_codim3(const AlgebraPtr& a) {
  if (a->nvars() != 3)
    throw Error(ErrorCode::CodimNotThree, "classification needs codimension 3, got " + std::to_string(a->nvars()));
  TorAlgebraClass cls;
  cls.evidence = koszul_homology(a);
  const auto& kh = cls.evidence;
  const auto mu = kh.dim(1), tau = kh.dim(3);
  const auto p = kh.d11, q = kh.d12, r = kh.r_21;
  if (mu == 3) {
    if (p == 3 && q == 1 && r == 3) cls.tag = TorClassTag::CI;
  } else if (p == 3 && q == 0 && r == 0) {
    cls.tag = TorClassTag::TE;
  } else if (p == 1 && q == 1 && r == 2) {
    cls.tag = TorClassTag::B;
  } else if (p == 0 && q == 1 && r >= 2 && tau == 1) {
    cls.tag = TorClassTag::G;
    cls.p = r;
  } else if (r == q) {
    cls.tag = TorClassTag::H;
    cls.p = p;
    cls.q = q;
  }
  return cls;
}

enum class TriState { Yes, No, Unknown };

inline std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "Yes";
    case TriState::No: return "No";
    case TriState::Unknown: return "Unknown";
  }
  return "?";
}

/// Whether A is known to have (Yes) or not to have (No) an embedded deformation.
inline TriState detect_embedded_deformation(const RingInvariants& inv, const std::optional<TorAlgebraClass>& cls) {
  if (inv.complete_intersection) return TriState::Yes;
  if (inv.c == 2) return TriState::No;
  if (inv.c == 3 && cls) {
    if (cls->tag == TorClassTag::Unknown) return TriState::Unknown;
    if (cls->tag == TorClassTag::H && inv.mu_I >= 4 && cls->p == inv.mu_I - 1 && cls->q == inv.mu_I - 2)
      return TriState::Yes;
    return TriState::No;
  }
  return TriState::Unknown;
}

}  // namespace homolab

#endif  // HOMOLAB_KOSZUL_HPP
