#ifndef HOMOLAB_SESSION_HPP
#define HOMOLAB_SESSION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homolab/homology.hpp"
#include "homolab/invariants.hpp"

namespace homolab {

/// A value from the input file together with where it started.
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct ModuleSpec {
  std::string name;
  std::vector<int> gens;
  /// rels[row][col]: generator row, relation column
  std::vector<std::vector<Located>> rels;
  std::size_t line = 0;
};

struct SessionInput {
  std::optional<Scalar> characteristic;
  std::vector<std::string> vars;
  std::vector<Located> ideal;
  MonomialOrder order = MonomialOrder::DegRevLex;
  bool has_ring = false;
  std::vector<ModuleSpec> modules;
  /// [invariants] block, numeric fields by key
  std::map<std::string, std::uint64_t> asserted;
  std::vector<std::string> gg_flags;
};

inline const std::set<std::string>& builtin_module_names() {
  static const std::set<std::string> names = {"k", "A", "omega"};
  return names;
}

namespace detail {

inline std::string trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset = b;
  return std::string(s.substr(b, e - b));
}

/// Splits on sep, keeping the column of each trimmed piece.
inline std::vector<Located> split(const Located& v, char sep) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= v.text.size(); ++i) {
    if (i < v.text.size() && v.text[i] != sep) continue;
    std::size_t off = 0;
    auto piece = trim(std::string_view(v.text).substr(start, i - start), &off);
    out.push_back({piece, v.line, v.column + start + off});
    start = i + 1;
  }
  return out;
}

inline std::int64_t parse_integer(const Located& v) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < v.text.size() && (v.text[pos] == '-' || v.text[pos] == '+')) neg = v.text[pos++] == '-';
  if (pos == v.text.size()) throw ParseError(v.line, v.column, "expected an integer, got '" + v.text + "'");
  std::int64_t x = 0;
  for (; pos < v.text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(v.text[pos])))
      throw ParseError(v.line, v.column + pos, "expected an integer, got '" + v.text + "'");
    x = x * 10 + (v.text[pos] - '0');
    if (x > (std::int64_t{1} << 40)) throw ParseError(v.line, v.column, "integer too large");
  }
  return neg ? -x : x;
}

}  // namespace detail

/// Parses the sectioned input format. Syntax errors raise ParseError with the
/// offending line and column; semantic errors raise ValidationError.
inline SessionInput parse_input(std::string_view text) {
  SessionInput s;
  enum class Section { None, Ring, Module, Invariants, Evidence } section = Section::None;
  std::set<std::string> seen_keys;
  std::set<std::string> module_names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t off = 0;
    auto line = detail::trim(raw, &off);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, off + 1, "unterminated section header");
      auto header = detail::trim(std::string_view(line).substr(1, line.size() - 2));
      seen_keys.clear();
      if (header == "ring") {
        if (s.has_ring) throw ParseError(line_no, off + 1, "duplicate [ring] section");
        s.has_ring = true;
        section = Section::Ring;
      } else if (header == "invariants") {
        section = Section::Invariants;
      } else if (header == "evidence") {
        section = Section::Evidence;
      } else if (header.rfind("module", 0) == 0 && header.size() > 6 && std::isspace(static_cast<unsigned char>(header[6]))) {
        auto name = detail::trim(std::string_view(header).substr(6));
        if (builtin_module_names().count(name))
          throw ParseError(line_no, off + 1, "module name '" + name + "' is reserved");
        if (!module_names.insert(name).second) throw ParseError(line_no, off + 1, "duplicate module '" + name + "'");
        s.modules.push_back({name, {}, {}, line_no});
        section = Section::Module;
      } else {
        throw ParseError(line_no, off + 1, "unknown section [" + header + "]");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, off + 1, "expected 'key = value'");
    auto key = detail::trim(std::string_view(line).substr(0, eq));
    std::size_t voff = 0;
    auto value_text = detail::trim(std::string_view(line).substr(eq + 1), &voff);
    Located value{value_text, line_no, off + eq + 1 + voff + 1};
    if (section == Section::None) throw ParseError(line_no, off + 1, "key outside of a section");
    if (!seen_keys.insert(key).second) throw ParseError(line_no, off + 1, "duplicate key '" + key + "'");

    switch (section) {
      case Section::Ring:
        if (key == "char") {
          auto p = detail::parse_integer(value);
          if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
            throw Error(ErrorCode::ValidationError, "line " + std::to_string(line_no) + ": characteristic " +
                                                        value.text + " is not a prime below 2^31");
          s.characteristic = static_cast<Scalar>(p);
        } else if (key == "vars") {
          for (const auto& v : detail::split(value, ',')) {
            if (v.text.empty() || !std::isalpha(static_cast<unsigned char>(v.text[0])))
              throw ParseError(v.line, v.column, "bad variable name '" + v.text + "'");
            for (char ch : v.text)
              if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw ParseError(v.line, v.column, "bad variable name '" + v.text + "'");
            if (std::find(s.vars.begin(), s.vars.end(), v.text) != s.vars.end())
              throw ParseError(v.line, v.column, "duplicate variable '" + v.text + "'");
            s.vars.push_back(v.text);
          }
        } else if (key == "ideal") {
          if (!value.text.empty())
            for (auto& g : detail::split(value, ',')) {
              if (g.text.empty()) throw ParseError(g.line, g.column, "empty ideal generator");
              s.ideal.push_back(std::move(g));
            }
        } else if (key == "order") {
          try {
            s.order = parse_order(value.text);
          } catch (const Error&) {
            throw ParseError(value.line, value.column, "unknown monomial order '" + value.text + "'");
          }
        } else {
          throw ParseError(line_no, off + 1, "unknown key '" + key + "' in [ring]");
        }
        break;
      case Section::Module: {
        auto& m = s.modules.back();
        if (key == "gens") {
          for (const auto& g : detail::split(value, ',')) m.gens.push_back(static_cast<int>(detail::parse_integer(g)));
        } else if (key == "rels") {
          if (!value.text.empty())
            for (const auto& row : detail::split(value, ';')) m.rels.push_back(detail::split(row, ','));
        } else {
          throw ParseError(line_no, off + 1, "unknown key '" + key + "' in [module " + m.name + "]");
        }
        break;
      }
      case Section::Invariants: {
        static const std::set<std::string> keys = {"e", "c", "ell", "tau", "mu2", "muI"};
        if (!keys.count(key)) throw ParseError(line_no, off + 1, "unknown key '" + key + "' in [invariants]");
        auto x = detail::parse_integer(value);
        if (x < 0) throw ParseError(value.line, value.column, "invariant must be nonnegative");
        s.asserted[key] = static_cast<std::uint64_t>(x);
        break;
      }
      case Section::Evidence:
        if (key != "assert") throw ParseError(line_no, off + 1, "unknown key '" + key + "' in [evidence]");
        for (const auto& f : detail::split(value, ',')) {
          if (f.text.empty()) continue;
          s.gg_flags.push_back(f.text);
        }
        break;
      case Section::None: break;
    }
  }

  if (s.has_ring && !s.asserted.empty())
    throw Error(ErrorCode::ValidationError, "give either a [ring] or an [invariants] block, not both");
  if (s.has_ring && s.vars.empty()) throw Error(ErrorCode::ValidationError, "[ring] needs vars");
  if (!s.has_ring && !s.modules.empty()) throw Error(ErrorCode::ValidationError, "modules need a [ring] section");
  for (const auto& m : s.modules) {
    if (m.gens.empty()) throw Error(ErrorCode::ValidationError, "module " + m.name + " needs gens");
    if (!m.rels.empty() && m.rels.size() != m.gens.size())
      throw Error(ErrorCode::ValidationError, "module " + m.name + ": relation matrix has " +
                                                  std::to_string(m.rels.size()) + " rows for " +
                                                  std::to_string(m.gens.size()) + " generators");
    for (const auto& row : m.rels)
      if (row.size() != m.rels.front().size())
        throw Error(ErrorCode::ValidationError, "module " + m.name + ": ragged relation matrix");
  }
  return s;
}

/// Builds the algebra; ring-validation failures surface as ValidationError
/// naming the underlying condition.
inline AlgebraPtr build_algebra(const SessionInput& s) {
  if (!s.has_ring) throw Error(ErrorCode::ValidationError, "no [ring] section");
  auto ring = std::make_shared<const PolyRing>(
      PolyRing{PrimeField(s.characteristic.value_or(kDefaultCharacteristic)), s.vars, s.order});
  std::vector<Polynomial> gens;
  for (const auto& g : s.ideal) gens.push_back(parse_polynomial(g.text, ring, g.line, g.column));
  try {
    return QuotientAlgebra::from_ideal(ring, std::move(gens));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LinearFormsPresent || e.code() == ErrorCode::NonHomogeneousIdeal)
      throw Error(ErrorCode::ValidationError, e.what());
    throw;
  }
}

inline GradedModule build_module(const SessionInput& s, const AlgebraPtr& a, const std::string& name) {
  if (name == "k") return GradedModule::residue_field(a);
  if (name == "A") return GradedModule::free(a, {0});
  if (name == "omega") return canonical_module(a);
  for (const auto& m : s.modules) {
    if (m.name != name) continue;
    std::vector<std::vector<AlgElem>> cols;
    const std::size_t ncols = m.rels.empty() ? 0 : m.rels.front().size();
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<AlgElem> col;
      for (std::size_t i = 0; i < m.rels.size(); ++i) {
        const auto& entry = m.rels[i][j];
        if (entry.text.empty()) throw ParseError(entry.line, entry.column, "empty matrix entry");
        col.push_back(a->element(parse_polynomial(entry.text, a->ring_ptr(), entry.line, entry.column)));
      }
      cols.push_back(std::move(col));
    }
    try {
      return GradedModule::from_matrix(a, m.gens, cols);
    } catch (const Error& e) {
      throw Error(e.code(), "module " + name + ": " + e.what());
    }
  }
  throw Error(ErrorCode::ValidationError, "unknown module '" + name + "'");
}

/// Asserted invariants (from an [invariants] block or the command line).
/// Without muI the complete-intersection flag is left false.
inline RingInvariants asserted_invariants(const std::map<std::string, std::uint64_t>& kv) {
  for (const auto& key : {"e", "c", "ell", "tau"})
    if (!kv.count(key)) throw Error(ErrorCode::ValidationError, std::string("asserted invariants need ") + key);
  RingInvariants inv;
  inv.e = kv.at("e");
  inv.c = kv.at("c");
  inv.ell = kv.at("ell");
  inv.tau = kv.at("tau");
  inv.mu_m2 = kv.count("mu2") ? kv.at("mu2") : 0;
  if (!kv.count("mu2") && inv.ell >= 3)
    throw Error(ErrorCode::ValidationError, "asserted invariants need mu2 when ell >= 3");
  inv.mu_I = kv.count("muI") ? kv.at("muI") : 0;
  inv.derive_flags();
  if (!kv.count("muI")) {
    inv.complete_intersection = false;
    inv.hypersurface = inv.c <= 1;
  }
  if (inv.ell < 1 || inv.tau < 1) throw Error(ErrorCode::ValidationError, "asserted ell and tau must be positive");
  return inv;
}

}  // namespace homolab

#endif  // HOMOLAB_SESSION_HPP
