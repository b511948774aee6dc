#ifndef HOMOLAB_CRITERIA_HPP
#define HOMOLAB_CRITERIA_HPP

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homolab/koszul.hpp"

namespace homolab {

/// (L - sqrt(R)) / 2 with L = 4c + 2 ell - 1, R = 8c + 4 ell - 3.
struct FirstBound {
  std::int64_t linear = 0;
  std::int64_t radicand = 0;

  double value() const { return (static_cast<double>(linear) - std::sqrt(static_cast<double>(radicand))) / 2; }
  std::string exact() const {
    return "(" + std::to_string(linear) + " - sqrt(" + std::to_string(radicand) + "))/2";
  }
  std::string decimal(int digits = 4) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value());
    return buf;
  }
  /// e < bound, decided as 2e < L - sqrt(R)  <=>  L - 2e > 0 and (L - 2e)^2 > R.
  bool exceeds(std::int64_t e) const {
    std::int64_t gap = linear - 2 * e;
    return gap > 0 && gap * gap > radicand;
  }
  /// e == bound exactly.
  bool equals(std::int64_t e) const {
    std::int64_t gap = linear - 2 * e;
    return gap >= 0 && gap * gap == radicand;
  }
};

inline FirstBound rhs_first_inequality(std::int64_t c, std::int64_t ell) {
  if (c < 0 || ell < 1) throw Error(ErrorCode::Precondition, "need c >= 0 and ell >= 1");
  return {4 * c + 2 * ell - 1, 8 * c + 4 * ell - 3};
}

/// User-assertable structural classes that imply generalized Golodness.
inline const std::set<std::string>& assertable_gg_flags() {
  static const std::set<std::string> flags = {"one_link_ci",     "two_links_ci_gorenstein", "almost_ci_codim4",
                                              "huneke_ulrich",   "determinantal",           "compressed"};
  return flags;
}

struct GGEvidence {
  /// Flags computed from invariants, in a fixed order.
  std::map<std::string, bool> automatic;
  std::set<std::string> asserted;

  bool generalized_golod() const { return !reason().empty(); }
  /// First automatic flag that holds, else first asserted flag, else "".
  std::string reason() const {
    for (const auto& name : {"ci", "codim_le_3", "gorenstein_codim_le_4", "gorenstein_e_le_11",
                             "gorenstein_m4_mu2_le_4", "stretched"}) {
      auto it = automatic.find(name);
      if (it != automatic.end() && it->second) return name;
    }
    return asserted.empty() ? "" : *asserted.begin();
  }
  /// Classes for which finite complexity forces finite CI-dimension.
  std::string ci_dimension_reason() const {
    for (const auto& name : {"codim_le_3", "gorenstein_codim_le_4"}) {
      auto it = automatic.find(name);
      if (it != automatic.end() && it->second) return name;
    }
    for (const auto& name : {"one_link_ci", "two_links_ci_gorenstein", "almost_ci_codim4", "huneke_ulrich"})
      if (asserted.count(name)) return name;
    return "";
  }
};

inline GGEvidence gg_evidence(const RingInvariants& inv, const std::vector<std::string>& asserted = {}) {
  GGEvidence gg;
  gg.automatic["ci"] = inv.complete_intersection;
  gg.automatic["codim_le_3"] = inv.c <= 3;
  gg.automatic["gorenstein_codim_le_4"] = inv.gorenstein && inv.c <= 4;
  gg.automatic["gorenstein_e_le_11"] = inv.gorenstein && inv.e <= 11;
  gg.automatic["gorenstein_m4_mu2_le_4"] = inv.gorenstein && inv.ell <= 4 && inv.mu_m2 <= 4;
  gg.automatic["stretched"] = inv.stretched;
  for (const auto& f : asserted) {
    if (!assertable_gg_flags().count(f))
      throw Error(ErrorCode::ValidationError, "unknown generalized-Golod flag '" + f + "'");
    gg.asserted.insert(f);
  }
  return gg;
}

enum class Verdict {
  TrivialVanishing,
  NotTrivialVanishing,
  Inconclusive,
  UAC,
  ARholds,
  GorensteinPredicted,
  NotApplicable
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::TrivialVanishing: return "TrivialVanishing";
    case Verdict::NotTrivialVanishing: return "NotTrivialVanishing";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::UAC: return "UAC";
    case Verdict::ARholds: return "ARholds";
    case Verdict::GorensteinPredicted: return "GorensteinPredicted";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;
  std::string citation;
  std::map<std::string, std::string> witnesses;
  std::vector<std::string> caveats;
  std::vector<std::string> assumptions;
  std::vector<std::string> annotations;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::vector<std::string> standing_caveats() {
  return {"input is taken as an Artinian reduction of a Cohen-Macaulay ring; depth and dimension hypotheses are "
          "assumed, not checked",
          "Loewy length is that of the supplied algebra, not the maximum over general reductions"};
}

namespace detail {

inline std::string cmp(std::int64_t lhs, std::string_view op, std::int64_t rhs) {
  return std::to_string(lhs) + " " + std::string(op) + " " + std::to_string(rhs);
}

inline void echo_assumptions(Certificate& cert, const GGEvidence& gg) {
  for (const auto& f : gg.asserted) cert.assumptions.push_back("asserted generalized-Golod class: " + f);
}

}  // namespace detail

/// Trivial vanishing of Tor/Ext: the first rule that applies decides.
inline Certificate certify_trivial_vanishing(const RingInvariants& inv, const GGEvidence& gg, TriState def,
                                             const std::optional<TorAlgebraClass>& cls) {
  Certificate cert;
  cert.caveats = standing_caveats();
  detail::echo_assumptions(cert, gg);
  const auto e = static_cast<std::int64_t>(inv.e), c = static_cast<std::int64_t>(inv.c),
             ell = static_cast<std::int64_t>(inv.ell);
  const auto bound = rhs_first_inequality(c, ell);
  cert.witnesses["e"] = std::to_string(e);
  cert.witnesses["c"] = std::to_string(c);
  cert.witnesses["ell"] = std::to_string(ell);
  cert.witnesses["embedded_deformation"] = std::string(to_string(def));
  if (cls) cert.witnesses["tor_algebra_class"] = cls->name();

  const bool gg_yes = gg.generalized_golod();
  const bool first_ineq = bound.exceeds(e);
  const bool gg_strong = gg_yes && e <= 2 * c + ell - 4;
  const bool gg_weak = gg_yes && e <= 2 * c + ell - 3;
  const bool stretched_rule = inv.stretched && c >= 3;
  if (gg_weak && !gg_strong) {
    cert.annotations.push_back("generalized Golod with e <= 2c+ell-3 (" + detail::cmp(e, "<=", 2 * c + ell - 3) +
                               "): whenever Tor_i(M,N) = 0 for i >> 0, M or N has complexity at most 1; "
                               "e <= 2c+ell-4 fails (" + detail::cmp(e, ">", 2 * c + ell - 4) + ")");
  }

  auto decide = [&](Verdict v, std::string rule, std::string citation) {
    cert.verdict = v;
    cert.rule = std::move(rule);
    cert.citation = std::move(citation);
  };

  if (c <= 1) {
    cert.witnesses["comparison"] = detail::cmp(c, "<=", 1);
    decide(Verdict::TrivialVanishing, "tv.codim_le_1", "codimension at most 1 implies trivial vanishing");
    return cert;
  }
  if (def == TriState::Yes) {
    cert.witnesses["comparison"] = detail::cmp(c, ">=", 2);
    decide(Verdict::NotTrivialVanishing, "tv.embedded_deformation",
           "codimension at least 2 with an embedded deformation rules out trivial vanishing");
    if (first_ineq || gg_strong || stretched_rule)
      cert.caveats.push_back("contradictory input: a sufficient condition for trivial vanishing also holds");
    return cert;
  }
  if (c == 2) {
    cert.witnesses["complete_intersection"] = inv.complete_intersection ? "true" : "false";
    decide(inv.complete_intersection ? Verdict::NotTrivialVanishing : Verdict::TrivialVanishing, "tv.codim_2",
           "in codimension 2, trivial vanishing holds if and only if the ring is not a complete intersection");
    return cert;
  }
  if (c == 3 && cls) {
    if (cls->tag == TorClassTag::Unknown) {
      decide(Verdict::Inconclusive, "tv.codim_3",
             "in codimension 3, trivial vanishing holds if and only if there is no embedded deformation; "
             "the Tor-algebra class was not recognized");
    } else {
      decide(def == TriState::No ? Verdict::TrivialVanishing : Verdict::Inconclusive, "tv.codim_3",
             "in codimension 3, trivial vanishing holds if and only if there is no embedded deformation");
    }
    return cert;
  }
  if (first_ineq) {
    cert.witnesses["bound"] = bound.exact();
    cert.witnesses["bound_decimal"] = bound.decimal();
    cert.witnesses["comparison"] = "e = " + std::to_string(e) + " < " + bound.exact();
    decide(Verdict::TrivialVanishing, "tv.first_inequality",
           "e < (4c+2ell-1-sqrt(8c+4ell-3))/2 implies trivial vanishing");
    return cert;
  }
  if (gg_strong) {
    cert.witnesses["generalized_golod"] = gg.reason();
    cert.witnesses["comparison"] = detail::cmp(e, "<=", 2 * c + ell - 4);
    decide(Verdict::TrivialVanishing, "tv.generalized_golod",
           "a generalized Golod ring with e <= 2c+ell-4 satisfies trivial vanishing");
    return cert;
  }
  if (stretched_rule) {
    cert.witnesses["comparison"] = detail::cmp(e, "=", c + ell - 1) + ", c = " + std::to_string(c);
    decide(Verdict::TrivialVanishing, "tv.stretched", "a stretched ring of codimension at least 3 satisfies trivial vanishing");
    return cert;
  }
  if (e <= 7 || (inv.gorenstein && e <= 11)) {
    cert.witnesses["comparison"] = e <= 7 ? detail::cmp(e, "<=", 7) : detail::cmp(e, "<=", 11) + ", Gorenstein";
    Verdict v = def == TriState::No ? Verdict::TrivialVanishing : Verdict::Inconclusive;
    decide(v, "tv.low_multiplicity",
           "for e <= 7, or Gorenstein with e <= 11, trivial vanishing holds if and only if there is no embedded "
           "deformation");
    if (v == Verdict::Inconclusive) cert.caveats.push_back("embedded deformation could not be decided");
    return cert;
  }
  decide(Verdict::Inconclusive, "tv.none", "no criterion applies");
  return cert;
}

/// Uniform Auslander condition / Auslander-Reiten conjecture coverage.
inline Certificate certify_auslander_reiten(const RingInvariants& inv, const GGEvidence& gg, const Certificate& tv) {
  Certificate cert;
  cert.caveats = standing_caveats();
  detail::echo_assumptions(cert, gg);
  const auto e = static_cast<std::int64_t>(inv.e), c = static_cast<std::int64_t>(inv.c),
             ell = static_cast<std::int64_t>(inv.ell);
  cert.witnesses["e"] = std::to_string(e);
  cert.witnesses["c"] = std::to_string(c);
  cert.witnesses["ell"] = std::to_string(ell);
  auto decide = [&](Verdict v, std::string rule, std::string citation, std::string comparison) {
    cert.verdict = v;
    cert.rule = std::move(rule);
    cert.citation = std::move(citation);
    cert.witnesses["comparison"] = std::move(comparison);
    cert.witnesses["ar_holds"] = "true";
    return cert;
  };
  const auto bound = rhs_first_inequality(c, ell);
  if (tv.verdict == Verdict::TrivialVanishing)
    return decide(Verdict::UAC, "ar.trivial_vanishing", "trivial vanishing implies the uniform Auslander condition",
                  "trivial vanishing via " + tv.rule);
  if (bound.exceeds(e))
    return decide(Verdict::UAC, "ar.first_inequality",
                  "e < (4c+2ell-1-sqrt(8c+4ell-3))/2 implies the uniform Auslander condition",
                  "e = " + std::to_string(e) + " < " + bound.exact());
  if (c <= 3)
    return decide(Verdict::UAC, "ar.codim_le_3", "codimension at most 3 implies the uniform Auslander condition",
                  detail::cmp(c, "<=", 3));
  if (e <= 7 || (inv.gorenstein && e <= 11))
    return decide(Verdict::UAC, "ar.low_multiplicity",
                  "e <= 7, or Gorenstein with e <= 11, implies the uniform Auslander condition",
                  e <= 7 ? detail::cmp(e, "<=", 7) : detail::cmp(e, "<=", 11) + ", Gorenstein");
  if (auto why = gg.ci_dimension_reason(); !why.empty() && e <= 2 * c + ell - 3)
    return decide(Verdict::UAC, "ar.generalized_golod",
                  "generalized Golod of a class where finite complexity forces finite CI-dimension, with "
                  "e <= 2c+ell-3, implies the uniform Auslander condition",
                  detail::cmp(e, "<=", 2 * c + ell - 3) + " (" + why + ")");
  if (4 * e <= 7 * c + 4)
    return decide(Verdict::ARholds, "ar.multiplicity_vs_codim",
                  "e <= (7/4)c + 1 implies the Auslander-Reiten conjecture",
                  detail::cmp(4 * e, "<=", 7 * c + 4) + " (4e vs 7c+4)");
  if (inv.gorenstein && e <= c + 6)
    return decide(Verdict::ARholds, "ar.gorenstein_multiplicity",
                  "Gorenstein with e <= c + 6 implies the Auslander-Reiten conjecture",
                  detail::cmp(e, "<=", c + 6) + ", Gorenstein");
  if (e <= 8)
    return decide(Verdict::ARholds, "ar.e_le_8", "e <= 8 implies the Auslander-Reiten conjecture",
                  detail::cmp(e, "<=", 8));
  cert.verdict = Verdict::Inconclusive;
  cert.rule = "ar.none";
  cert.citation = "no criterion applies";
  cert.witnesses["ar_holds"] = "unknown";
  return cert;
}

}  // namespace homolab

#endif  // HOMOLAB_CRITERIA_HPP
