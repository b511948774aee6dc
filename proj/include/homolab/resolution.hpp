#ifndef HOMOLAB_RESOLUTION_HPP
#define HOMOLAB_RESOLUTION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homolab/module.hpp"

namespace homolab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultSteps = 12;

/// Minimal graded free resolution F_N -> ... -> F_1 -> F_0 -> M.
struct Resolution {
  AlgebraPtr algebra;
  /// F_0 .. F_N
  std::vector<FreeModule> modules;
  /// differentials[i] (i >= 1): images of the generators of F_i in F_{i-1}.
  /// differentials[0] is empty.
  std::vector<std::vector<SparseVec>> differentials;

  int steps() const { return static_cast<int>(modules.size()) - 1; }
  std::uint64_t betti(int i) const { return i <= steps() ? modules[i].rank() : 0; }
};

struct ResolveOptions {
  int steps = kDefaultSteps;
  /// Upper bound on the k-dimension of any free module in the resolution.
  std::uint32_t max_free_dim = 4'000'000;
};

/// Computes the minimal resolution through F_steps by iterated degreewise
/// kernels; F_{i+1} is generated by a minimal generating set of ker(d_i).
inline Resolution resolve(const GradedModule& m, const ResolveOptions& opts = {}) {
  if (opts.steps < 0) throw Error(ErrorCode::Precondition, "steps must be nonnegative");
  auto mm = minimize_presentation(m);
  Resolution r;
  r.algebra = mm.algebra();
  r.modules.emplace_back(mm.algebra(), mm.gen_degrees());
  r.differentials.emplace_back();
  if (opts.steps == 0) return r;
  r.modules.emplace_back(mm.algebra(), mm.rel_degrees());
  r.differentials.push_back(mm.relations());
  for (int i = 1; i < opts.steps; ++i) {
    std::vector<int> degs;
    auto next = kernel_generators(r.modules[i], r.differentials[i], r.modules[i - 1], degs, opts.max_free_dim);
    FreeModule f(r.algebra, degs);
    if (f.dim() > opts.max_free_dim)
      throw Error(ErrorCode::ResourceLimit, "free module F_" + std::to_string(i + 1) + " of k-dimension " +
                                                std::to_string(f.dim()));
    r.modules.push_back(std::move(f));
    r.differentials.push_back(std::move(next));
  }
  return r;
}

/// Applies d_i : F_i -> F_{i-1} to an element of F_i.
inline SparseVec apply_differential(const Resolution& r, int i, const SparseVec& w) {
  const auto& src = r.modules[i];
  const auto& tgt = r.modules[i - 1];
  SparseAccumulator acc(r.algebra->field());
  for (const auto& e : w) {
    AlgElem coeff{{src.mono_of(e.index), e.value}};
    acc.add(tgt.apply_algebra(coeff, r.differentials[i][src.gen_of(e.index)]), 1);
  }
  return acc.finish();
}

/// Structural checks: d_{i} o d_{i+1} = 0 and every differential entry lies
/// in the maximal ideal. Returns a description of the first failure.
inline std::optional<std::string> check_resolution(const Resolution& r) {
  for (int i = 1; i <= r.steps(); ++i) {
    const auto& tgt = r.modules[i - 1];
    if (r.differentials[i].size() != r.modules[i].rank()) return "differential " + std::to_string(i) + " size";
    for (std::size_t g = 0; g < r.differentials[i].size(); ++g) {
      const auto& col = r.differentials[i][g];
      for (const auto& e : col) {
        if (e.index >= tgt.dim()) return "entry out of range in d_" + std::to_string(i);
        if (tgt.mono_of(e.index) == 0) return "unit entry in d_" + std::to_string(i);
      }
      auto deg = tgt.homogeneous_degree(col);
      if (!deg || *deg != r.modules[i].gen_degrees()[g]) return "degree mismatch in d_" + std::to_string(i);
      if (i >= 2 && !apply_differential(r, i - 1, col).empty())
        return "d_" + std::to_string(i - 1) + " o d_" + std::to_string(i) + " != 0";
    }
  }
  return std::nullopt;
}

struct BettiTable {
  int steps = 0;
  /// graded[i][j] = beta_{i,j}
  std::vector<std::map<int, std::uint64_t>> graded;
  std::vector<std::uint64_t> totals;

  std::uint64_t total(int i) const { return i >= 0 && i < static_cast<int>(totals.size()) ? totals[i] : 0; }
  /// Coefficients of the truncated Poincaré series sum_{i<=N} beta_i t^i.
  const std::vector<std::uint64_t>& poincare_truncation() const { return totals; }
};

inline BettiTable betti_table(const Resolution& r) {
  BettiTable b;
  b.steps = r.steps();
  for (const auto& f : r.modules) {
    std::map<int, std::uint64_t> row;
    for (int d : f.gen_degrees()) ++row[d];
    b.graded.push_back(std::move(row));
    b.totals.push_back(f.rank());
  }
  return b;
}

inline BettiTable betti_table_from_totals(std::vector<std::uint64_t> totals) {
  BettiTable b;
  b.steps = static_cast<int>(totals.size()) - 1;
  b.graded.resize(totals.size());
  b.totals = std::move(totals);
  return b;
}

enum class GrowthClass { EventuallyZero, Bounded, PolynomialLike, ExponentialLike };

inline std::string_view to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::EventuallyZero: return "eventually-zero";
    case GrowthClass::Bounded: return "bounded";
    case GrowthClass::PolynomialLike: return "polynomial-like";
    case GrowthClass::ExponentialLike: return "exponential-like";
  }
  return "?";
}

/// Heuristic, non-certifying growth summary of a truncated Betti sequence.
struct GrowthDiagnostics {
  /// (i, beta_{i+1}/beta_i) for the trailing window
  std::vector<std::pair<int, Rational>> ratio_window;
  std::optional<Rational> lr_estimate;
  GrowthClass growth_class = GrowthClass::EventuallyZero;
};

/// Ratios beta_{i+1}/beta_i over the last `window` indices.
///
/// Classification: eventually-zero if some beta_i vanishes within the bound;
/// bounded if all trailing ratios equal 1; exponential-like if all trailing
/// ratios are >= 1 + 1/N and either the ratios are non-decreasing or the
/// polynomial-degree estimate k_i = (r_i - 1) * i rises by at least
/// (window span)/8 across the window; polynomial-like otherwise.
inline GrowthDiagnostics limit_ratio(const BettiTable& b, int window) {
  GrowthDiagnostics g;
  const int n = static_cast<int>(b.totals.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (b.totals[i] == 0) return g;
  if (window < 1 || n < window) return g;
  for (int i = n - window; i < n; ++i)
    g.ratio_window.emplace_back(i, Rational(BigInt(b.totals[i + 1]), BigInt(b.totals[i])));
  Rational best = g.ratio_window.front().second;
  for (const auto& [i, r] : g.ratio_window) best = std::max(best, r);
  g.lr_estimate = best;

  bool all_one = true, all_big = true, nondecreasing = true;
  const Rational threshold = 1 + Rational(1, n);
  for (std::size_t k = 0; k < g.ratio_window.size(); ++k) {
    const auto& r = g.ratio_window[k].second;
    all_one = all_one && r == 1;
    all_big = all_big && r >= threshold;
    if (k > 0 && r < g.ratio_window[k - 1].second) nondecreasing = false;
  }
  if (all_one) {
    g.growth_class = GrowthClass::Bounded;
  } else if (all_big) {
    const auto& [i0, r0] = g.ratio_window.front();
    const auto& [i1, r1] = g.ratio_window.back();
    Rational k0 = (r0 - 1) * i0, k1 = (r1 - 1) * i1;
    bool superpolynomial = (k1 - k0) * 8 >= Rational(i1 - i0);
    g.growth_class =
        nondecreasing || superpolynomial ? GrowthClass::ExponentialLike : GrowthClass::PolynomialLike;
  } else {
    g.growth_class = GrowthClass::PolynomialLike;
  }
  return g;
}

/// A linear recurrence beta_i = sum_j a_j beta_{i-j}, i.e. a denominator
/// 1 - a_1 t - ... - a_d t^d, valid for valid_from <= i <= N.
struct RationalFit {
  /// Denominator coefficients q_0 = 1, q_1, ..., q_d.
  std::vector<Rational> denominator;
  int valid_from = 0;
};

namespace detail {

/// Solves the (possibly overdetermined) system rows * a = rhs exactly;
/// nullopt if inconsistent or underdetermined.
inline std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> rows,
                                                           std::vector<Rational> rhs, std::size_t unknowns) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) return std::nullopt;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < unknowns; ++j) rows[i][j] -= factor * rows[r][j];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < unknowns) return std::nullopt;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> a(unknowns);
  for (std::size_t i = 0; i < r; ++i) a[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
  return a;
}

}  // namespace detail

/// Looks for the smallest-degree recurrence (degree <= max_degree) that fits
/// the computed Betti totals, first over the whole sequence, then over the
/// second half (allowing a numerator). Diagnostic only.
inline std::optional<RationalFit> rational_fit_diagnostic(const BettiTable& b, int max_degree) {
  const int n = static_cast<int>(b.totals.size()) - 1;
  if (max_degree < 1 || n < 2 * max_degree + 2)
    throw Error(ErrorCode::Precondition, "rational fit of degree " + std::to_string(max_degree) + " needs at least " +
                                             std::to_string(2 * max_degree + 2) + " steps");
  for (int d = 1; d <= max_degree; ++d) {
    for (int start : {d, std::max(d, n / 2)}) {
      if (n - start + 1 < d + 2) continue;
      std::vector<std::vector<Rational>> rows;
      std::vector<Rational> rhs;
      for (int i = start; i <= n; ++i) {
        std::vector<Rational> row;
        for (int j = 1; j <= d; ++j) row.emplace_back(BigInt(b.totals[i - j]));
        rows.push_back(std::move(row));
        rhs.emplace_back(BigInt(b.totals[i]));
      }
      if (auto a = detail::solve_rational(rows, rhs, d)) {
        RationalFit fit;
        fit.denominator.emplace_back(1);
        for (auto& x : *a) fit.denominator.push_back(-x);
        fit.valid_from = start;
        return fit;
      }
    }
  }
  return std::nullopt;
}

}  // namespace homolab

#endif  // HOMOLAB_RESOLUTION_HPP
