#ifndef HOMOLAB_POLYNOMIAL_HPP
#define HOMOLAB_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homolab/error.hpp"
#include "homolab/field.hpp"

namespace homolab {

enum class MonomialOrder { DegRevLex, DegLex, Lex };

inline std::string_view to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::DegLex: return "deglex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

inline MonomialOrder parse_order(std::string_view s) {
  if (s == "degrevlex" || s == "grevlex") return MonomialOrder::DegRevLex;
  if (s == "deglex") return MonomialOrder::DegLex;
  if (s == "lex") return MonomialOrder::Lex;
  throw Error(ErrorCode::ValidationError, "unknown monomial order '" + std::string(s) + "'");
}

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw Error(ErrorCode::ValidationError, "negative exponent");
  }

  static Monomial variable(std::size_t nvars, std::size_t v) {
    Monomial m(nvars);
    m.exps_[v] = 1;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] && o.exps_[i]) return false;
    return true;
  }
  /// Index of the single variable if this is a pure power x_i^a with a > 0.
  std::optional<std::size_t> pure_power_variable() const {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (!exps_[i]) continue;
      if (var) return std::nullopt;
      var = i;
    }
    return var;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Strict "a < b" in the given order. Variable 0 is the largest.
inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const auto n = a.nvars();
  if (order != MonomialOrder::Lex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
  }
  if (order == MonomialOrder::DegRevLex) {
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct MonomialCompare {
  MonomialOrder order = MonomialOrder::DegRevLex;
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b, order); }
};

/// Ambient polynomial ring k[x_1..x_n] with a fixed monomial order.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> var_names;
  MonomialOrder order = MonomialOrder::DegRevLex;

  std::size_t nvars() const noexcept { return var_names.size(); }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

/// Polynomial as an ordered map monomial -> nonzero coefficient. The largest
/// key (rbegin) is the leading term.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialCompare>;

  explicit Polynomial(std::shared_ptr<const PolyRing> ring)
      : ring_(std::move(ring)), terms_(MonomialCompare{ring_->order}) {}

  static Polynomial monomial(std::shared_ptr<const PolyRing> ring, const Monomial& m, Scalar c = 1) {
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
  }

  const PolyRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const PolyRing>& ring_ptr() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  Scalar leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Monomial& m, Scalar c) {
    const auto& f = ring_->field;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }
  /// Degree of the leading term (total degree for homogeneous input).
  int degree() const { return terms_.empty() ? -1 : leading_monomial().degree(); }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, ring_->field.neg(c));
    return r;
  }
  Polynomial scaled(Scalar a, const Monomial& shift) const {
    Polynomial r(ring_);
    if (a == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * shift, ring_->field.mul(a, c));
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, ring_->field.mul(c1, c2));
    return r;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(leading_coefficient()), Monomial(ring_->nvars()));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::shared_ptr<const PolyRing> ring_;
  Terms terms_;
};

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Terms from leading to trailing, coefficients as signed representatives.
inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = p.ring();
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto c = ring.field.lift(it->second);
    auto mono = format_monomial(it->first, ring.var_names);
    bool unit_mono = (mono == "1");
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    auto mag = c < 0 ? -c : c;
    if (mag != 1 || unit_mono) {
      s += std::to_string(mag);
      if (!unit_mono) s += '*';
    }
    if (!unit_mono) s += mono;
  }
  return s;
}

/// Parses `x^2 - 3*x*y + y^2` style input; `*` between factors is optional.
inline Polynomial parse_polynomial(std::string_view text, std::shared_ptr<const PolyRing> ring,
                                   std::size_t line = 1, std::size_t col0 = 1) {
  const auto& f = ring->field;
  const auto n = ring->nvars();
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(line, col0 + pos, msg); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::int64_t {
    std::int64_t v = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (std::int64_t{1} << 40)) throw fail("integer too large");
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw fail("expected integer");
    return v;
  };

  Polynomial result(ring);
  skip_ws();
  if (pos == text.size()) throw fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff = 1;
    Monomial mono(n);
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos == text.size() || text[pos] == '+' || text[pos] == '-') break;
      if (text[pos] == '*') {
        if (!any_factor) throw fail("unexpected '*'");
        ++pos;
        skip_ws();
      }
      if (pos == text.size()) throw fail("dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = f.mul(coeff, f.reduce(read_int()));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        std::string name(text.substr(start, pos - start));
        std::size_t v = 0;
        while (v < n && ring->var_names[v] != name) ++v;
        if (v == n) {
          pos = start;
          throw fail("unknown variable '" + name + "'");
        }
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          e = static_cast<int>(read_int());
        }
        auto ex = mono.exponents();
        ex[v] += e;
        mono = Monomial(std::move(ex));
      } else {
        throw fail(std::string("unexpected character '") + text[pos] + "'");
      }
      any_factor = true;
    }
    if (!any_factor) throw fail("missing term");
    result.add_term(mono, sign < 0 ? f.neg(coeff) : coeff);
  }
  return result;
}

}  // namespace homolab

#endif  // HOMOLAB_POLYNOMIAL_HPP
