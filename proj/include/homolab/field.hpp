#ifndef HOMOLAB_FIELD_HPP
#define HOMOLAB_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "homolab/error.hpp"

namespace homolab {

using Scalar = std::uint32_t;

inline constexpr Scalar kDefaultCharacteristic = 101;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in GF(p) on raw residues. Residues are always kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Scalar p = kDefaultCharacteristic) : p_(p) {
    if (p >= (Scalar{1} << 31) || !is_prime(p))
      throw Error(ErrorCode::InvalidCharacteristic, std::to_string(p) + " is not a supported prime");
  }

  Scalar characteristic() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Precondition: a != 0.
  Scalar inv(Scalar a) const noexcept { return pow(a, p_ - 2); }

  /// Signed representative in (-p/2, p/2], used for display only.
  std::int64_t lift(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b)
    throw Error(ErrorCode::CharacteristicMismatch,
                "GF(" + std::to_string(a.characteristic()) + ") vs GF(" +
                    std::to_string(b.characteristic()) + ")");
}

/// A residue tagged with its field; the value type used at API boundaries.
class FieldElement {
 public:
  FieldElement(std::int64_t value, PrimeField field) : field_(field), value_(field.reduce(value)) {}

  Scalar value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const { return make(field_.add(value_, check(o))); }
  FieldElement operator-(const FieldElement& o) const { return make(field_.sub(value_, check(o))); }
  FieldElement operator*(const FieldElement& o) const { return make(field_.mul(value_, check(o))); }
  FieldElement operator-() const { return make(field_.neg(value_)); }
  FieldElement inverse() const {
    if (value_ == 0) throw Error(ErrorCode::Precondition, "inverse of zero");
    return make(field_.inv(value_));
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Scalar check(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return o.value_;
  }
  FieldElement make(Scalar v) const { return FieldElement(v, field_); }

  PrimeField field_;
  Scalar value_;
};

struct Entry {
  std::uint32_t index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by strictly increasing index, no zero values.
using SparseVec = std::vector<Entry>;

inline SparseVec unit_vector(std::uint32_t index) { return SparseVec{{index, 1}}; }

inline void scale(SparseVec& v, Scalar a, const PrimeField& f) {
  if (a == 0) {
    v.clear();
    return;
  }
  for (auto& e : v) e.value = f.mul(e.value, a);
}

/// y <- y + a*x
inline void axpy(SparseVec& y, Scalar a, const SparseVec& x, const PrimeField& f) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->index < j->index)) {
      out.push_back(*i++);
    } else if (i == y.end() || j->index < i->index) {
      out.push_back({j->index, f.mul(a, j->value)});
      ++j;
    } else {
      Scalar s = f.add(i->value, f.mul(a, j->value));
      if (s != 0) out.push_back({i->index, s});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

/// Accumulates unsorted (index, value) contributions into a sparse vector.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(const PrimeField& f) : f_(f) {}

  void add(std::uint32_t index, Scalar value) {
    if (value != 0) items_.push_back({index, value});
  }
  void add(const SparseVec& v, Scalar a) {
    if (a == 0) return;
    for (const auto& e : v) items_.push_back({e.index, f_.mul(a, e.value)});
  }

  SparseVec finish() {
    std::sort(items_.begin(), items_.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    SparseVec out;
    for (const auto& e : items_) {
      if (!out.empty() && out.back().index == e.index) {
        out.back().value = f_.add(out.back().value, e.value);
        if (out.back().value == 0) out.pop_back();
      } else {
        out.push_back(e);
      }
    }
    items_.clear();
    return out;
  }

 private:
  PrimeField f_;
  std::vector<Entry> items_;
};

}  // namespace homolab

#endif  // HOMOLAB_FIELD_HPP
