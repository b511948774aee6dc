#ifndef HOMOLAB_HOMOLOGY_HPP
#define HOMOLAB_HOMOLOGY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "homolab/resolution.hpp"

namespace homolab {

/// dim_k of Tor_i or Ext^i for i in [lo, hi].
struct HomologyProfile {
  int lo = 0;
  int hi = 0;
  std::vector<std::uint64_t> dims;

  std::uint64_t at(int i) const { return dims.at(i - lo); }
  /// Maximal interval of zeros ending at hi, if dims[hi] = 0.
  std::optional<std::pair<int, int>> vanishing_window() const {
    if (dims.empty() || dims.back() != 0) return std::nullopt;
    int start = hi;
    while (start > lo && at(start - 1) == 0) --start;
    return std::make_pair(start, hi);
  }
  /// All of [from, hi] vanish.
  bool vanishes_from(int from) const {
    for (int i = std::max(from, lo); i <= hi; ++i)
      if (at(i) != 0) return false;
    return true;
  }
};

using TorProfile = HomologyProfile;
using ExtProfile = HomologyProfile;

namespace detail {

inline void check_range(int lo, int hi) {
  if (lo < 0 || hi < lo) throw Error(ErrorCode::Precondition, "homological range must satisfy 0 <= lo <= hi");
}

/// Rank of d_i (x) N : F_i (x) N -> F_{i-1} (x) N, with k-bases (gen, basis of N).
inline std::size_t tensor_rank(const Resolution& r, int i, const ModuleData& n,
                               const std::vector<std::vector<SparseVec>>& table) {
  if (i < 1 || i > r.steps() || n.dim() == 0) return 0;
  const auto& tgt = r.modules[i - 1];
  const auto dn = n.dim();
  Echelon ech(r.algebra->field(), static_cast<std::uint32_t>(tgt.rank() * dn));
  for (const auto& col : r.differentials[i])
    for (std::uint32_t j = 0; j < dn; ++j) {
      SparseAccumulator acc(r.algebra->field());
      for (const auto& e : col) {
        auto h = tgt.gen_of(e.index);
        for (const auto& t : table[tgt.mono_of(e.index)][j]) acc.add(h * dn + t.index, r.algebra->field().mul(e.value, t.value));
      }
      ech.insert(acc.finish());
    }
  return ech.rank();
}

/// Rank of Hom(d_i, N) : Hom(F_{i-1}, N) -> Hom(F_i, N), with k-bases
/// (gen, basis of N) via phi(e_h) = n_j.
inline std::size_t hom_rank(const Resolution& r, int i, const ModuleData& n,
                            const std::vector<std::vector<SparseVec>>& table) {
  if (i < 1 || i > r.steps() || n.dim() == 0) return 0;
  const auto& tgt = r.modules[i - 1];
  const auto dn = n.dim();
  const auto& f = r.algebra->field();
  // images[h][j] accumulates sum_g e_g^* (x) a_{hg} n_j
  std::vector<std::vector<std::vector<Entry>>> images(tgt.rank(), std::vector<std::vector<Entry>>(dn));
  for (std::uint32_t g = 0; g < r.differentials[i].size(); ++g)
    for (const auto& e : r.differentials[i][g]) {
      auto h = tgt.gen_of(e.index);
      for (std::uint32_t j = 0; j < dn; ++j)
        for (const auto& t : table[tgt.mono_of(e.index)][j])
          images[h][j].push_back({g * dn + t.index, f.mul(e.value, t.value)});
    }
  Echelon ech(f, static_cast<std::uint32_t>(r.modules[i].rank() * dn));
  for (auto& per_gen : images)
    for (auto& raw : per_gen) {
      SparseAccumulator acc(f);
      for (const auto& e : raw) acc.add(e.index, e.value);
      raw.clear();
      ech.insert(acc.finish());
    }
  return ech.rank();
}

}  // namespace detail

/// dim Tor_i(M, N) for i in [lo, hi], as the homology of F_M (x)_A N. The
/// resolution must reach step hi + 1.
inline TorProfile tor(const Resolution& rm, const GradedModule& n, int lo, int hi) {
  detail::check_range(lo, hi);
  if (rm.steps() < hi + 1) throw Error(ErrorCode::Precondition, "resolution too short for Tor range");
  if (rm.algebra != n.algebra()) throw Error(ErrorCode::ValidationError, "modules over different algebras");
  const auto table = n.data().monomial_action_table();
  TorProfile p{lo, hi, {}};
  std::size_t rank_in = detail::tensor_rank(rm, lo, n.data(), table);
  for (int i = lo; i <= hi; ++i) {
    std::size_t rank_out = detail::tensor_rank(rm, i + 1, n.data(), table);
    p.dims.push_back(rm.betti(i) * n.length() - rank_in - rank_out);
    rank_in = rank_out;
  }
  return p;
}

inline TorProfile tor(const GradedModule& m, const GradedModule& n, int lo, int hi, ResolveOptions opts = {}) {
  detail::check_range(lo, hi);
  require_same_algebra(m, n);
  opts.steps = hi + 1;
  return tor(resolve(m, opts), n, lo, hi);
}

/// dim Ext^i(M, N) for i in [lo, hi], as the cohomology of Hom_A(F_M, N).
inline ExtProfile ext(const Resolution& rm, const GradedModule& n, int lo, int hi) {
  detail::check_range(lo, hi);
  if (rm.steps() < hi + 1) throw Error(ErrorCode::Precondition, "resolution too short for Ext range");
  if (rm.algebra != n.algebra()) throw Error(ErrorCode::ValidationError, "modules over different algebras");
  const auto table = n.data().monomial_action_table();
  ExtProfile p{lo, hi, {}};
  std::size_t rank_in = detail::hom_rank(rm, lo, n.data(), table);
  for (int i = lo; i <= hi; ++i) {
    std::size_t rank_out = detail::hom_rank(rm, i + 1, n.data(), table);
    p.dims.push_back(rm.betti(i) * n.length() - rank_in - rank_out);
    rank_in = rank_out;
  }
  return p;
}

inline ExtProfile ext(const GradedModule& m, const GradedModule& n, int lo, int hi, ResolveOptions opts = {}) {
  detail::check_range(lo, hi);
  require_same_algebra(m, n);
  opts.steps = hi + 1;
  return ext(resolve(m, opts), n, lo, hi);
}

/// Bass numbers mu^i(N) = dim Ext^i(k, N), i = 0..hi.
inline std::vector<std::uint64_t> bass_numbers(const GradedModule& n, int hi, ResolveOptions opts = {}) {
  return ext(GradedModule::residue_field(n.algebra()), n, 0, hi, opts).dims;
}

/// Graded k-dual: (M^v)_{-d} = Hom_k(M_d, k), with x acting by the transpose.
inline ModuleData dual_data(const ModuleData& m) {
  std::vector<std::uint32_t> dims;
  for (int d = m.hi_degree(); d >= m.lo_degree(); --d) dims.push_back(m.dim(d));
  if (m.dim() == 0) return ModuleData(m.algebra(), 0, {});
  ModuleData out(m.algebra(), -m.hi_degree(), dims);
  auto dual_index = [&](std::uint32_t i) {
    int d = m.degree_of(i);
    return out.degree_begin(-d) + (i - m.degree_begin(d));
  };
  for (std::size_t v = 0; v < m.algebra()->nvars(); ++v) {
    std::vector<std::vector<Entry>> act(m.dim());
    for (std::uint32_t j = 0; j < m.dim(); ++j)
      for (const auto& e : m.action(v, j)) act[dual_index(e.index)].push_back({dual_index(j), e.value});
    for (std::uint32_t k = 0; k < m.dim(); ++k) {
      auto& a = act[k];
      std::sort(a.begin(), a.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
      out.set_action(v, k, std::move(a));
    }
  }
  return out;
}

inline GradedModule matlis_dual(const GradedModule& m) { return present(dual_data(m.data())); }

/// The canonical module: the graded dual of A, generated in degree >= -s.
inline GradedModule canonical_module(const AlgebraPtr& a) { return matlis_dual(GradedModule::free(a, {0})); }

/// lambda(M) / mu(M).
inline Rational ulrich_index(const GradedModule& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "Ulrich index of the zero module");
  return Rational(BigInt(m.length()), BigInt(m.num_generators()));
}

}  // namespace homolab

#endif  // HOMOLAB_HOMOLOGY_HPP
