#ifndef HOMOLAB_FREE_MODULE_HPP
#define HOMOLAB_FREE_MODULE_HPP

#include <algorithm>
#include <vector>

#include "homolab/algebra.hpp"

namespace homolab {

/// Graded free module F = (+)_g A(-deg g), realized as a finite k-space.
///
/// The k-basis is the set of pairs (generator g, basis monomial b of A),
/// numbered degree-major: all basis vectors of total degree d come before
/// those of degree d+1; inside a degree, by generator, then by monomial.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(AlgebraPtr alg, std::vector<int> gen_degrees)
      : alg_(std::move(alg)), gen_degrees_(std::move(gen_degrees)) {
    const int s = alg_->socle_degree();
    block_start_.assign(gen_degrees_.size() * (s + 1), 0);
    if (gen_degrees_.empty()) {
      lo_ = 0;
      degree_start_ = {0};
      return;
    }
    lo_ = *std::min_element(gen_degrees_.begin(), gen_degrees_.end());
    int hi = *std::max_element(gen_degrees_.begin(), gen_degrees_.end()) + s;
    std::uint32_t next = 0;
    degree_start_.clear();
    for (int d = lo_; d <= hi; ++d) {
      degree_start_.push_back(next);
      for (std::uint32_t g = 0; g < gen_degrees_.size(); ++g) {
        int t = d - gen_degrees_[g];
        if (t < 0 || t > s) continue;
        block_start_[g * (s + 1) + t] = next;
        for (std::uint32_t b = alg_->degree_begin(t); b < alg_->degree_end(t); ++b) {
          gen_of_.push_back(g);
          mono_of_.push_back(b);
          ++next;
        }
      }
    }
    degree_start_.push_back(next);
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const std::vector<int>& gen_degrees() const noexcept { return gen_degrees_; }
  std::size_t rank() const noexcept { return gen_degrees_.size(); }
  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(gen_of_.size()); }

  int lo_degree() const noexcept { return lo_; }
  int hi_degree() const noexcept { return lo_ + static_cast<int>(degree_start_.size()) - 2; }
  std::uint32_t degree_begin(int d) const {
    if (d < lo_) return 0;
    if (d > hi_degree()) return dim();
    return degree_start_[d - lo_];
  }
  std::uint32_t degree_end(int d) const { return degree_begin(d + 1); }
  int degree_of(std::uint32_t idx) const { return gen_degrees_[gen_of_[idx]] + alg_->degree_of(mono_of_[idx]); }

  std::uint32_t gen_of(std::uint32_t idx) const { return gen_of_[idx]; }
  std::uint32_t mono_of(std::uint32_t idx) const { return mono_of_[idx]; }
  std::uint32_t index(std::uint32_t gen, std::uint32_t mono) const {
    int t = alg_->degree_of(mono);
    return block_start_[gen * (alg_->socle_degree() + 1) + t] + (mono - alg_->degree_begin(t));
  }

  /// e_g * a for an algebra element a.
  SparseVec embed(std::uint32_t gen, const AlgElem& a) const {
    SparseVec v;
    for (const auto& e : a) v.push_back({index(gen, e.index), e.value});
    std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    return v;
  }

  /// Element from per-generator algebra coordinates.
  SparseVec encode(const std::vector<AlgElem>& components) const {
    SparseAccumulator acc(alg_->field());
    for (std::uint32_t g = 0; g < components.size(); ++g)
      for (const auto& e : components[g]) acc.add(index(g, e.index), e.value);
    return acc.finish();
  }
  std::vector<AlgElem> decode(const SparseVec& v) const {
    std::vector<AlgElem> out(rank());
    for (const auto& e : v) out[gen_of_[e.index]].push_back({mono_of_[e.index], e.value});
    for (auto& c : out)
      std::sort(c.begin(), c.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    return out;
  }

  /// x_v * w.
  SparseVec apply_variable(std::size_t v, const SparseVec& w) const {
    SparseAccumulator acc(alg_->field());
    for (const auto& e : w) {
      const auto g = gen_of_[e.index];
      for (const auto& t : alg_->times_variable(v, mono_of_[e.index]))
        acc.add(index(g, t.index), alg_->field().mul(e.value, t.value));
    }
    return acc.finish();
  }

  /// a * w for an algebra element a.
  SparseVec apply_algebra(const AlgElem& a, const SparseVec& w) const {
    SparseAccumulator acc(alg_->field());
    for (const auto& x : a)
      for (const auto& e : w) {
        const auto g = gen_of_[e.index];
        for (const auto& t : alg_->product(x.index, mono_of_[e.index]))
          acc.add(index(g, t.index), alg_->field().mul(alg_->field().mul(x.value, e.value), t.value));
      }
    return acc.finish();
  }

  /// Homogeneous degree of a nonzero element, nullopt if mixed or zero.
  std::optional<int> homogeneous_degree(const SparseVec& w) const {
    if (w.empty()) return std::nullopt;
    int d = degree_of(w.front().index);
    for (const auto& e : w)
      if (degree_of(e.index) != d) return std::nullopt;
    return d;
  }

 private:
  AlgebraPtr alg_;
  std::vector<int> gen_degrees_;
  int lo_ = 0;
  std::vector<std::uint32_t> degree_start_{0};
  std::vector<std::uint32_t> block_start_;
  std::vector<std::uint32_t> gen_of_;
  std::vector<std::uint32_t> mono_of_;
};

}  // namespace homolab

#endif  // HOMOLAB_FREE_MODULE_HPP
