#ifndef HOMOLAB_REPORT_HPP
#define HOMOLAB_REPORT_HPP

#include <json.hpp>
#include <string>

#include "homolab/module_checks.hpp"

namespace homolab {

using Json = nlohmann::json;

inline Json to_json(const RingInvariants& inv) {
  return Json{{"e", inv.e},
              {"c", inv.c},
              {"ell", inv.ell},
              {"tau", inv.tau},
              {"h_vector", inv.h_vector},
              {"mu_I", inv.mu_I},
              {"mu_m2", inv.mu_m2},
              {"flags",
               {{"gorenstein", inv.gorenstein},
                {"complete_intersection", inv.complete_intersection},
                {"hypersurface", inv.hypersurface},
                {"stretched", inv.stretched},
                {"m4_zero", inv.m4_zero}}}};
}

inline Json to_json(const BettiTable& b) {
  Json graded = Json::array();
  for (const auto& row : b.graded) {
    Json r = Json::object();
    for (const auto& [deg, n] : row) r[std::to_string(deg)] = n;
    graded.push_back(std::move(r));
  }
  return Json{{"steps", b.steps}, {"totals", b.totals}, {"graded", std::move(graded)}};
}

inline Json to_json(const GrowthDiagnostics& g) {
  Json window = Json::array();
  for (const auto& [i, r] : g.ratio_window) window.push_back({{"i", i}, {"ratio", r.str()}});
  return Json{{"growth_class", std::string(to_string(g.growth_class))},
              {"ratio_window", std::move(window)},
              {"lr_estimate", g.lr_estimate ? Json(g.lr_estimate->str()) : Json(nullptr)},
              {"note", "heuristic summary of a finite truncation; not a certificate"}};
}

inline Json to_json(const std::optional<RationalFit>& fit) {
  if (!fit) return nullptr;
  Json den = Json::array();
  for (const auto& q : fit->denominator) den.push_back(q.str());
  return Json{{"denominator", std::move(den)}, {"valid_from", fit->valid_from}};
}

inline Json to_json(const HomologyProfile& p) {
  Json j{{"lo", p.lo}, {"hi", p.hi}, {"dims", p.dims}};
  if (auto w = p.vanishing_window())
    j["vanishing_window"] = {w->first, w->second};
  else
    j["vanishing_window"] = nullptr;
  return j;
}

inline Json to_json(const KoszulHomology& k) {
  return Json{{"dims", k.dims}, {"d11", k.d11}, {"d12", k.d12}, {"r_g", k.r_g}, {"r_21", k.r_21}};
}

inline Json to_json(const TorAlgebraClass& c) {
  return Json{{"class", c.name()}, {"evidence", to_json(c.evidence)}};
}

inline Json to_json(const Certificate& c) {
  return Json{{"verdict", std::string(to_string(c.verdict))},
              {"rule", c.rule},
              {"citation", c.citation},
              {"witnesses", c.witnesses},
              {"caveats", c.caveats},
              {"assumptions", c.assumptions},
              {"annotations", c.annotations}};
}

inline Json to_json(const GGEvidence& gg) {
  return Json{{"automatic", gg.automatic},
              {"asserted", gg.asserted},
              {"generalized_golod", gg.generalized_golod() ? "Yes(" + gg.reason() + ")" : "Unasserted"}};
}

inline Json to_json(const BoundCheck& b) {
  return Json{{"bound", b.name},
              {"first_index", b.first_index},
              {"last_index", b.last_index},
              {"checked", b.checked()},
              {"violations", b.violations}};
}

/// Empty report skeleton with every top-level key present.
inline Json empty_report(const std::string& input_hash) {
  return Json{{"input_hash", input_hash}, {"invariants", nullptr}, {"betti", Json::object()},
              {"tor", Json::object()},    {"ext", Json::object()},   {"tor_algebra", nullptr},
              {"certificates", Json::object()}, {"caveats", Json::array()}};
}

}  // namespace homolab

#endif  // HOMOLAB_REPORT_HPP
