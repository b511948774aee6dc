#ifndef HOMOLAB_ECHELON_HPP
#define HOMOLAB_ECHELON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "homolab/field.hpp"

namespace homolab {

/// Incremental sparse semi-echelon form over GF(p).
///
/// Every stored row has a distinct pivot (its smallest index) with value 1,
/// and each row carries an optional combination vector recording how it was
/// built from the inserted vectors. Inserting a dependent vector yields that
/// vector's combination, which is how kernels are extracted.
class Echelon {
 public:
  Echelon(const PrimeField& field, std::uint32_t ambient_dim)
      : field_(field), pivot_row_(ambient_dim, kNone) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::uint32_t ambient_dim() const noexcept { return static_cast<std::uint32_t>(pivot_row_.size()); }
  const PrimeField& field() const noexcept { return field_; }

  bool is_pivot(std::uint32_t index) const { return pivot_row_[index] != kNone; }

  /// Inserts v. Returns nullopt when v was independent (a row was added);
  /// otherwise returns the accumulated combination c with
  /// combo - (sum of row combos used) representing a relation, i.e. an element
  /// of the kernel of "combination -> vector".
  std::optional<SparseVec> insert(SparseVec v, SparseVec combo = {}) {
    reduce_leading(v, combo);
    if (v.empty()) return combo;
    Scalar inv = field_.inv(v.front().value);
    scale(v, inv, field_);
    scale(combo, inv, field_);
    pivot_row_[v.front().index] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return std::nullopt;
  }

  /// Fully reduces v: afterwards no entry of v sits on a pivot. If `coords` is
  /// given it receives sum(c_k * combo_k) over the rows subtracted, so that
  /// v_in = v_out + (rows expressed through coords).
  SparseVec reduce(SparseVec v, SparseVec* coords = nullptr) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto r = pivot_row_[v[pos].index];
      if (r == kNone) {
        ++pos;
        continue;
      }
      Scalar c = v[pos].value;
      if (coords) axpy(*coords, c, combos_[r], field_);
      axpy(v, field_.neg(c), rows_[r], field_);
      // entries before pos are untouched because row r starts at v[pos].index
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  const std::vector<SparseVec>& combos() const noexcept { return combos_; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void reduce_leading(SparseVec& v, SparseVec& combo) const {
    while (!v.empty()) {
      auto r = pivot_row_[v.front().index];
      if (r == kNone) return;
      Scalar c = field_.neg(v.front().value);
      axpy(v, c, rows_[r], field_);
      axpy(combo, c, combos_[r], field_);
    }
  }

  PrimeField field_;
  std::vector<std::uint32_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
};

/// Rank of a family of sparse vectors living in GF(p)^ambient_dim.
inline std::size_t sparse_rank(const PrimeField& f, std::uint32_t ambient_dim,
                               const std::vector<SparseVec>& vectors) {
  Echelon e(f, ambient_dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace homolab

#endif  // HOMOLAB_ECHELON_HPP
