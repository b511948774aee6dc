#ifndef HOMOLAB_MATRIX_HPP
#define HOMOLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "homolab/echelon.hpp"
#include "homolab/field.hpp"

namespace homolab {

/// Dense-semantics matrix over GF(p). Storage is row-major residues.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const PrimeField& field)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> init, const PrimeField& field)
      : field_(field), rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (auto v : row) data_.push_back(field_.reduce(v));
    }
  }

  static Matrix identity(std::size_t n, const PrimeField& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  SparseVec column(std::size_t c) const {
    SparseVec v;
    for (std::size_t r = 0; r < rows_; ++r)
      if (auto x = (*this)(r, c)) v.push_back({static_cast<std::uint32_t>(r), x});
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix p(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Scalar a = (*this)(i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          p(i, j) = field_.add(p(i, j), field_.mul(a, o(k, j)));
      }
    return p;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<Scalar> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
    return y;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rank via sparse column echelon.
inline std::size_t rank(const Matrix& m) {
  Echelon e(m.field(), static_cast<std::uint32_t>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c) e.insert(m.column(c));
  return e.rank();
}

/// Rank via textbook dense Gaussian elimination on rows. Kept as an
/// independent strategy; must agree with rank() on every input.
inline std::size_t rank_dense(Matrix m) {
  const auto& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Scalar inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar a = f.neg(m(i, c));
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(a, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Columns form a basis of the right kernel.
inline Matrix kernel_basis(const Matrix& m) {
  Echelon e(m.field(), static_cast<std::uint32_t>(m.rows()));
  std::vector<SparseVec> kernel;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (auto rel = e.insert(m.column(c), unit_vector(static_cast<std::uint32_t>(c))))
      kernel.push_back(std::move(*rel));
  Matrix k(m.cols(), kernel.size(), m.field());
  for (std::size_t j = 0; j < kernel.size(); ++j)
    for (const auto& en : kernel[j]) k(en.index, j) = en.value;
  return k;
}

/// Some x with m*x = b, or nullopt when b is outside the column space.
inline std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Echelon e(m.field(), static_cast<std::uint32_t>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    e.insert(m.column(c), unit_vector(static_cast<std::uint32_t>(c)));
  SparseVec rhs;
  for (std::size_t r = 0; r < b.size(); ++r)
    if (auto v = m.field().reduce(b[r])) rhs.push_back({static_cast<std::uint32_t>(r), v});
  SparseVec coords;
  if (!e.reduce(rhs, &coords).empty()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), 0);
  for (const auto& en : coords) x[en.index] = en.value;
  return x;
}

}  // namespace homolab

#endif  // HOMOLAB_MATRIX_HPP
