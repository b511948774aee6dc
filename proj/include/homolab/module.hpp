#ifndef HOMOLAB_MODULE_HPP
#define HOMOLAB_MODULE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homolab/echelon.hpp"
#include "homolab/free_module.hpp"

namespace homolab {

/// A finite-dimensional graded A-module given concretely: a k-basis numbered
/// degree by degree, and for each variable the matrix of multiplication by it.
class ModuleData {
 public:
  ModuleData() = default;
  ModuleData(AlgebraPtr alg, int lo, std::vector<std::uint32_t> dims)
      : alg_(std::move(alg)), lo_(lo), start_{0} {
    for (auto d : dims) start_.push_back(start_.back() + d);
    degree_.reserve(dim());
    for (std::size_t i = 0; i < dims.size(); ++i)
      for (std::uint32_t k = 0; k < dims[i]; ++k) degree_.push_back(lo + static_cast<int>(i));
    act_.assign(alg_->nvars(), std::vector<SparseVec>(dim()));
    trim();
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::uint32_t dim() const noexcept { return start_.back(); }
  int lo_degree() const noexcept { return lo_; }
  int hi_degree() const noexcept { return lo_ + static_cast<int>(start_.size()) - 2; }
  std::uint32_t dim(int d) const { return degree_end(d) - degree_begin(d); }
  std::uint32_t degree_begin(int d) const {
    if (d < lo_) return 0;
    if (d > hi_degree()) return dim();
    return start_[d - lo_];
  }
  std::uint32_t degree_end(int d) const { return degree_begin(d + 1); }
  int degree_of(std::uint32_t idx) const { return degree_[idx]; }

  /// Hilbert function as (lowest degree, dims); zero module gives (0, {}).
  std::pair<int, std::vector<std::uint32_t>> hilbert_function() const {
    std::vector<std::uint32_t> h;
    for (int d = lo_; d <= hi_degree(); ++d) h.push_back(dim(d));
    return {lo_, h};
  }

  void set_action(std::size_t v, std::uint32_t idx, SparseVec image) { act_[v][idx] = std::move(image); }
  const SparseVec& action(std::size_t v, std::uint32_t idx) const { return act_[v][idx]; }

  SparseVec apply_variable(std::size_t v, const SparseVec& w) const {
    SparseAccumulator acc(alg_->field());
    for (const auto& e : w) acc.add(act_[v][e.index], e.value);
    return acc.finish();
  }

  /// Action of every basis monomial of A on every basis vector:
  /// table[u][i] = basis(u) * e_i. Built along the monomial parent chain.
  std::vector<std::vector<SparseVec>> monomial_action_table() const {
    std::vector<std::vector<SparseVec>> table(alg_->dim(), std::vector<SparseVec>(dim()));
    for (std::uint32_t i = 0; i < dim(); ++i) table[0][i] = unit_vector(i);
    for (std::uint32_t u = 1; u < alg_->dim(); ++u) {
      auto [v, parent] = alg_->parent(u);
      for (std::uint32_t i = 0; i < dim(); ++i) table[u][i] = apply_variable(v, table[parent][i]);
    }
    return table;
  }

 private:
  void trim() {
    // drop empty leading/trailing degrees so lo/hi bound the support
    std::size_t first = 0, last = start_.size() - 1;
    while (first < last && start_[first + 1] == start_[first]) ++first;
    while (last > first && start_[last] == start_[last - 1]) --last;
    if (first == last) {
      lo_ = 0;
      start_ = {0};
      return;
    }
    lo_ += static_cast<int>(first);
    start_ = std::vector<std::uint32_t>(start_.begin() + first, start_.begin() + last + 1);
  }

  AlgebraPtr alg_;
  int lo_ = 0;
  std::vector<std::uint32_t> start_{0};
  std::vector<int> degree_;
  std::vector<std::vector<SparseVec>> act_;
};

/// Minimal generators, lowest degree first, of the kernel of the A-linear map
/// src -> target sending generator g to images[g]. Target is anything with
/// dim() and apply_variable(v, vec) (a FreeModule or a ModuleData).
///
/// Each returned generator is an element of src; `degrees` receives their
/// degrees. Throws ResourceLimit if src exceeds `max_dim`.
template <class Target>
std::vector<SparseVec> kernel_generators(const FreeModule& src, const std::vector<SparseVec>& images,
                                         const Target& target, std::vector<int>& degrees,
                                         std::uint32_t max_dim = 0xffffffffu) {
  const auto& alg = *src.algebra();
  const auto& f = alg.field();
  degrees.clear();
  std::vector<SparseVec> gens;
  if (src.rank() == 0) return gens;
  if (src.dim() > max_dim)
    throw Error(ErrorCode::ResourceLimit, "free module of k-dimension " + std::to_string(src.dim()));

  std::vector<SparseVec> img(src.dim());
  std::vector<SparseVec> prev_kernel;
  for (int d = src.lo_degree(); d <= src.hi_degree(); ++d) {
    Echelon ech(f, target.dim());
    std::vector<SparseVec> kernel;
    for (auto idx = src.degree_begin(d); idx < src.degree_end(d); ++idx) {
      auto g = src.gen_of(idx);
      auto b = src.mono_of(idx);
      if (b == 0) {
        img[idx] = images[g];
      } else {
        auto [v, parent] = alg.parent(b);
        img[idx] = target.apply_variable(v, img[src.index(g, parent)]);
      }
      if (auto rel = ech.insert(img[idx], unit_vector(idx))) kernel.push_back(std::move(*rel));
    }
    for (auto idx = src.degree_begin(d - 1); idx < src.degree_end(d - 1); ++idx) img[idx] = SparseVec{};

    Echelon span(f, src.dim());
    for (const auto& k : prev_kernel)
      for (std::size_t v = 0; v < alg.nvars(); ++v) span.insert(src.apply_variable(v, k));
    for (auto& k : kernel) {
      if (!span.insert(k)) {
        gens.push_back(k);
        degrees.push_back(d);
      }
    }
    prev_kernel = std::move(kernel);
  }
  return gens;
}

/// Minimal generators (lowest degree first, candidates in the given order)
/// of the submodule of `target` spanned by `candidates`.
template <class Target>
std::vector<std::size_t> minimal_subset(const std::vector<SparseVec>& candidates, const std::vector<int>& degrees,
                                        const Target& target, const PrimeField& f, std::size_t nvars) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degrees[a] < degrees[b]; });
  std::vector<std::size_t> chosen;
  Echelon all(f, target.dim());
  std::size_t pos = 0;
  if (order.empty()) return chosen;
  int d = degrees[order.front()];
  int dmax = degrees[order.back()];
  std::vector<SparseVec> prev;
  for (; d <= dmax; ++d) {
    std::vector<SparseVec> current;
    for (const auto& w : prev)
      for (std::size_t v = 0; v < nvars; ++v) {
        auto x = target.apply_variable(v, w);
        if (!all.insert(x)) current.push_back(std::move(x));
      }
    for (; pos < order.size() && degrees[order[pos]] == d; ++pos) {
      const auto& c = candidates[order[pos]];
      if (!all.insert(c)) {
        chosen.push_back(order[pos]);
        current.push_back(c);
      }
    }
    prev = std::move(current);
  }
  return chosen;
}

/// Finitely presented graded module M = coker(F1 -> F0).
///
/// The presentation columns are elements of F0 (degree-major layout, see
/// FreeModule). The module is materialized at construction; the object is
/// immutable afterwards.
class GradedModule {
 public:
  GradedModule(AlgebraPtr alg, std::vector<int> gen_degrees, std::vector<SparseVec> relations)
      : free_(std::move(alg), std::move(gen_degrees)), relations_(std::move(relations)) {
    std::erase_if(relations_, [](const SparseVec& r) { return r.empty(); });
    for (const auto& r : relations_)
      if (!free_.homogeneous_degree(r))
        throw Error(ErrorCode::ValidationError, "relation column is not homogeneous");
    for (const auto& r : relations_) rel_degrees_.push_back(*free_.homogeneous_degree(r));
    materialize();
  }

  /// Presentation given as a matrix of algebra elements: columns[j][i] is the
  /// entry in generator row i of relation j.
  static GradedModule from_matrix(AlgebraPtr alg, std::vector<int> gen_degrees,
                                  const std::vector<std::vector<AlgElem>>& columns) {
    FreeModule f0(alg, gen_degrees);
    std::vector<SparseVec> rels;
    for (const auto& col : columns) {
      if (col.size() != gen_degrees.size())
        throw Error(ErrorCode::DimensionMismatch, "relation column has wrong length");
      rels.push_back(f0.encode(col));
    }
    return GradedModule(std::move(alg), std::move(gen_degrees), std::move(rels));
  }

  static GradedModule free(AlgebraPtr alg, std::vector<int> gen_degrees) {
    return GradedModule(std::move(alg), std::move(gen_degrees), {});
  }

  /// A(-shift)/(ideal generated by the given elements).
  static GradedModule cyclic(AlgebraPtr alg, const std::vector<AlgElem>& ideal, int shift = 0) {
    std::vector<std::vector<AlgElem>> cols;
    for (const auto& a : ideal) cols.push_back({a});
    return from_matrix(std::move(alg), {shift}, cols);
  }

  /// The residue field k in degree `shift`.
  static GradedModule residue_field(AlgebraPtr alg, int shift = 0) {
    std::vector<AlgElem> vars;
    for (std::size_t v = 0; v < alg->nvars(); ++v) vars.push_back(unit_vector(alg->variable_index(v)));
    return cyclic(std::move(alg), vars, shift);
  }

  const AlgebraPtr& algebra() const noexcept { return free_.algebra(); }
  const FreeModule& cover() const noexcept { return free_; }
  const std::vector<int>& gen_degrees() const noexcept { return free_.gen_degrees(); }
  const std::vector<int>& rel_degrees() const noexcept { return rel_degrees_; }
  const std::vector<SparseVec>& relations() const noexcept { return relations_; }
  std::vector<AlgElem> relation_column(std::size_t j) const { return free_.decode(relations_[j]); }

  const ModuleData& data() const noexcept { return data_; }
  /// Image in data() of each presentation generator.
  const std::vector<SparseVec>& generator_images() const noexcept { return gen_images_; }

  /// Length (k-dimension).
  std::uint32_t length() const noexcept { return data_.dim(); }
  /// Minimal number of generators, computed as dim M/mM.
  std::uint32_t num_generators() const noexcept { return mu_; }
  bool is_zero() const noexcept { return length() == 0; }

  /// Presentation is minimal: generator count equals mu, every relation
  /// entry lies in the maximal ideal and no relation is redundant.
  bool is_minimal() const {
    if (gen_degrees().size() != mu_ || !relations_minimal_) return false;
    for (const auto& r : relations_)
      for (const auto& e : r)
        if (free_.mono_of(e.index) == 0) return false;
    return true;
  }

 private:
  void materialize() {
    const auto& alg = *algebra();
    const auto& f = alg.field();
    Echelon sub(f, free_.dim());
    std::vector<std::size_t> rels_by_degree(relations_.size());
    for (std::size_t j = 0; j < relations_.size(); ++j) rels_by_degree[j] = j;
    std::stable_sort(rels_by_degree.begin(), rels_by_degree.end(),
                     [&](auto a, auto b) { return rel_degrees_[a] < rel_degrees_[b]; });
    std::size_t pos = 0;
    std::size_t prev_rows_begin = 0, prev_rows_end = 0;
    for (int d = free_.lo_degree(); d <= free_.hi_degree(); ++d) {
      std::size_t begin = sub.rank();
      for (auto r = prev_rows_begin; r < prev_rows_end; ++r) {
        SparseVec row = sub.rows()[r];
        for (std::size_t v = 0; v < alg.nvars(); ++v) sub.insert(free_.apply_variable(v, row));
      }
      for (; pos < rels_by_degree.size() && rel_degrees_[rels_by_degree[pos]] <= d; ++pos)
        if (rel_degrees_[rels_by_degree[pos]] == d && sub.insert(relations_[rels_by_degree[pos]]))
          relations_minimal_ = false;  // already in m*K + earlier relations
      prev_rows_begin = begin;
      prev_rows_end = sub.rank();
    }

    // quotient basis = non-pivot coordinates of F0
    std::vector<std::uint32_t> qindex(free_.dim(), 0xffffffffu);
    std::vector<std::uint32_t> dims;
    std::uint32_t next = 0;
    for (int d = free_.lo_degree(); d <= free_.hi_degree(); ++d) {
      std::uint32_t count = 0;
      for (auto i = free_.degree_begin(d); i < free_.degree_end(d); ++i)
        if (!sub.is_pivot(i)) {
          qindex[i] = next++;
          ++count;
        }
      dims.push_back(count);
    }
    ModuleData raw(algebra(), free_.lo_degree(), dims);
    auto project = [&](const SparseVec& w) {
      SparseVec out;
      for (const auto& e : sub.reduce(w)) out.push_back({qindex[e.index], e.value});
      return out;
    };
    for (std::uint32_t i = 0; i < free_.dim(); ++i) {
      if (qindex[i] == 0xffffffffu) continue;
      for (std::size_t v = 0; v < alg.nvars(); ++v)
        raw.set_action(v, qindex[i], project(free_.apply_variable(v, unit_vector(i))));
    }
    data_ = std::move(raw);
    gen_images_.clear();
    for (std::uint32_t g = 0; g < free_.rank(); ++g) gen_images_.push_back(project(free_.embed(g, unit_vector(0))));

    // mu = dim M - dim mM
    Echelon mm(f, data_.dim());
    for (std::uint32_t i = 0; i < data_.dim(); ++i)
      for (std::size_t v = 0; v < alg.nvars(); ++v) mm.insert(data_.action(v, i));
    mu_ = data_.dim() - static_cast<std::uint32_t>(mm.rank());
  }

  FreeModule free_;
  std::vector<SparseVec> relations_;
  std::vector<int> rel_degrees_;
  ModuleData data_;
  std::vector<SparseVec> gen_images_;
  std::uint32_t mu_ = 0;
  bool relations_minimal_ = true;
};

/// Minimal presentation of a concretely given module. Generators are chosen
/// lowest degree first among `candidates` (in order) and, if those do not
/// generate, among the standard basis vectors of `data`.
inline GradedModule present(const ModuleData& data, const std::vector<SparseVec>& candidates = {}) {
  const auto& alg = data.algebra();
  std::vector<SparseVec> cands = candidates;
  std::vector<int> degs;
  for (const auto& c : cands) {
    if (c.empty()) {
      degs.push_back(0);
      continue;
    }
    degs.push_back(data.degree_of(c.front().index));
  }
  for (std::uint32_t i = 0; i < data.dim(); ++i) {
    cands.push_back(unit_vector(i));
    degs.push_back(data.degree_of(i));
  }
  // zero candidates never get chosen; their degree is irrelevant
  auto chosen = minimal_subset(cands, degs, data, alg->field(), alg->nvars());
  std::vector<int> gen_degrees;
  std::vector<SparseVec> images;
  for (auto i : chosen) {
    gen_degrees.push_back(degs[i]);
    images.push_back(cands[i]);
  }
  FreeModule f0(alg, gen_degrees);
  std::vector<int> rel_degrees;
  auto rels = kernel_generators(f0, images, data, rel_degrees);
  return GradedModule(alg, std::move(gen_degrees), std::move(rels));
}

/// Isomorphic module with a minimal presentation; ties broken by lowest
/// degree, then input order of the original generators.
inline GradedModule minimize_presentation(const GradedModule& m) {
  if (m.is_minimal()) return m;
  return present(m.data(), m.generator_images());
}

/// First syzygy: the kernel of the minimal cover F0 -> M, minimally presented.
inline GradedModule syzygy(const GradedModule& m) {
  auto mm = minimize_presentation(m);
  const auto& alg = mm.algebra();
  FreeModule f1(alg, mm.rel_degrees());
  std::vector<int> degs;
  auto rels = kernel_generators(f1, mm.relations(), mm.cover(), degs);
  return GradedModule(alg, mm.rel_degrees(), std::move(rels));
}

inline void require_same_algebra(const GradedModule& a, const GradedModule& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorCode::ValidationError, "modules over different algebras");
}

inline GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  require_same_algebra(a, b);
  auto degs = a.gen_degrees();
  degs.insert(degs.end(), b.gen_degrees().begin(), b.gen_degrees().end());
  std::vector<std::vector<AlgElem>> cols;
  for (std::size_t j = 0; j < a.relations().size(); ++j) {
    auto c = a.relation_column(j);
    c.resize(degs.size());
    cols.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < b.relations().size(); ++j) {
    std::vector<AlgElem> c(a.gen_degrees().size());
    auto cb = b.relation_column(j);
    c.insert(c.end(), cb.begin(), cb.end());
    cols.push_back(std::move(c));
  }
  return GradedModule::from_matrix(a.algebra(), degs, cols);
}

/// M (x)_A N from the two presentations: generators e_i (x) f_j, relations
/// rel_M (x) f_j and e_i (x) rel_N.
inline GradedModule tensor_over_algebra(const GradedModule& a, const GradedModule& b) {
  require_same_algebra(a, b);
  const auto na = a.gen_degrees().size(), nb = b.gen_degrees().size();
  std::vector<int> degs;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) degs.push_back(a.gen_degrees()[i] + b.gen_degrees()[j]);
  std::vector<std::vector<AlgElem>> cols;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    auto c = a.relation_column(r);
    for (std::size_t j = 0; j < nb; ++j) {
      std::vector<AlgElem> col(na * nb);
      for (std::size_t i = 0; i < na; ++i) col[i * nb + j] = c[i];
      cols.push_back(std::move(col));
    }
  }
  for (std::size_t r = 0; r < b.relations().size(); ++r) {
    auto c = b.relation_column(r);
    for (std::size_t i = 0; i < na; ++i) {
      std::vector<AlgElem> col(na * nb);
      for (std::size_t j = 0; j < nb; ++j) col[i * nb + j] = c[j];
      cols.push_back(std::move(col));
    }
  }
  return GradedModule::from_matrix(a.algebra(), degs, cols);
}

}  // namespace homolab

#endif  // HOMOLAB_MODULE_HPP
