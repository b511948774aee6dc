#ifndef HOMOLAB_COMMANDS_HPP
#define HOMOLAB_COMMANDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homolab/cache.hpp"
#include "homolab/report.hpp"
#include "homolab/session.hpp"

namespace homolab {

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"invariants", "resolve",  "tor",        "ext",
                                                 "certify-tv", "certify-ar", "classify", "gorenstein-test",
                                                 "verify-bounds"};
  return names;
}

struct CommandOptions {
  int steps = kDefaultSteps;
  std::optional<std::pair<int, int>> range;
  std::string module;
  std::string m;
  std::string n;
  std::vector<std::string> assert_gg;
  std::map<std::string, std::uint64_t> invariants;
  int window = 4;
};

/// "lo..hi" -> (lo, hi)
inline std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::ValidationError, "range must look like lo..hi");
  auto lo = detail::parse_integer({s.substr(0, dots), 1, 1});
  auto hi = detail::parse_integer({s.substr(dots + 2), 1, dots + 3});
  if (lo < 0 || hi < lo || hi > 1000) throw Error(ErrorCode::ValidationError, "bad range " + s);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

/// "e=12,c=6,..." -> map, keys restricted to the invariants block keys.
inline std::map<std::string, std::uint64_t> parse_invariant_list(const std::string& s) {
  std::map<std::string, std::uint64_t> kv;
  static const std::set<std::string> keys = {"e", "c", "ell", "tau", "mu2", "muI"};
  for (const auto& item : detail::split({s, 1, 1}, ',')) {
    auto eq = item.text.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ValidationError, "expected key=value in '" + item.text + "'");
    auto key = detail::trim(std::string_view(item.text).substr(0, eq));
    if (!keys.count(key)) throw Error(ErrorCode::ValidationError, "unknown invariant '" + key + "'");
    auto v = detail::parse_integer({detail::trim(std::string_view(item.text).substr(eq + 1)), 1, 1});
    if (v < 0) throw Error(ErrorCode::ValidationError, "invariant must be nonnegative");
    kv[key] = static_cast<std::uint64_t>(v);
  }
  return kv;
}

class CommandRunner {
 public:
  CommandRunner(SessionInput session, std::string input_text, CommandOptions opts, ResolutionCache cache = {})
      : s_(std::move(session)), opts_(std::move(opts)), cache_(std::move(cache)) {
    if (!opts_.invariants.empty()) {
      if (s_.has_ring || !s_.asserted.empty())
        throw Error(ErrorCode::ValidationError, "--invariants cannot be combined with a [ring] or [invariants] block");
      s_.asserted = opts_.invariants;
    }
    std::string hashed = std::move(input_text);
    for (const auto& [k, v] : s_.asserted) hashed += "\n" + k + "=" + std::to_string(v);
    report_ = empty_report(sha256_hex(hashed));
    for (const auto& c : standing_caveats()) report_["caveats"].push_back(c);
  }

  /// Runs one command; returns the report and sets `failed` when a
  /// consistency check (bounds, theorem cross-check) did not pass.
  Json run(const std::string& command, bool& failed) {
    failed = false;
    if (command == "invariants") {
      context();
    } else if (command == "resolve") {
      resolve_cmd();
    } else if (command == "tor" || command == "ext") {
      homology_cmd(command == "tor");
    } else if (command == "certify-tv") {
      certify(false);
    } else if (command == "certify-ar") {
      certify(true);
    } else if (command == "classify") {
      need_ring("classify");
      auto cls = classify_codim3(alg_);
      auto j = to_json(cls);
      j["embedded_deformation"] = std::string(to_string(detect_embedded_deformation(inv_, cls)));
      report_["tor_algebra"] = std::move(j);
    } else if (command == "gorenstein-test") {
      need_ring("gorenstein-test");
      auto name = opts_.module.empty() ? std::string("k") : opts_.module;
      auto cert = gorenstein_tests(alg_, build_module(s_, alg_, name));
      cert.witnesses["module"] = name;
      if (cert.witnesses.count("tau_check") && cert.witnesses["tau_check"] != "tau = 1") failed = true;
      report_["certificates"]["gorenstein"] = to_json(cert);
    } else if (command == "verify-bounds") {
      failed = !bounds_cmd();
    } else {
      throw Error(ErrorCode::ValidationError, "unknown command '" + command + "'");
    }
    return report_;
  }

 private:
  void context() {
    if (have_context_) return;
    have_context_ = true;
    if (s_.has_ring) {
      alg_ = build_algebra(s_);
      inv_ = ring_invariants(*alg_);
    } else if (!s_.asserted.empty()) {
      inv_ = asserted_invariants(s_.asserted);
      asserted_ = true;
    } else {
      throw Error(ErrorCode::ValidationError, "input needs a [ring] section or asserted invariants");
    }
    report_["invariants"] = to_json(inv_);
    report_["invariants"]["asserted"] = asserted_;
  }

  void need_ring(const std::string& what) {
    context();
    if (!alg_) throw Error(ErrorCode::ValidationError, what + " needs an ideal-defined ring");
  }

  GradedModule module(const std::string& name) { return build_module(s_, alg_, name); }

  void resolve_cmd() {
    need_ring("resolve");
    auto name = opts_.module.empty() ? std::string("k") : opts_.module;
    auto r = cache_.resolve(module(name), opts_.steps);
    auto b = betti_table(r);
    auto j = to_json(b);
    j["growth"] = to_json(limit_ratio(b, std::min(opts_.window, b.steps)));
    j["rational_fit"] = b.steps >= 6 ? to_json(rational_fit_diagnostic(b, 2)) : Json(nullptr);
    report_["betti"][name] = std::move(j);
  }

  void homology_cmd(bool is_tor) {
    need_ring(is_tor ? "tor" : "ext");
    if (opts_.m.empty() || opts_.n.empty()) throw Error(ErrorCode::ValidationError, "--m and --n are required");
    auto [lo, hi] = opts_.range.value_or(std::make_pair(0, std::max(0, opts_.steps - 1)));
    auto mm = module(opts_.m), nn = module(opts_.n);
    auto r = cache_.resolve(mm, hi + 1);
    auto p = is_tor ? tor(r, nn, lo, hi) : ext(r, nn, lo, hi);
    auto j = to_json(p);
    j["m"] = opts_.m;
    j["n"] = opts_.n;
    report_[is_tor ? "tor" : "ext"][opts_.m + "," + opts_.n] = std::move(j);
    report_["caveats"].push_back("vanishing is reported on the computed window only");
  }

  void certify(bool with_ar) {
    context();
    auto gg = gg_evidence(inv_, merged_flags());
    std::optional<TorAlgebraClass> cls;
    if (alg_ && inv_.c == 3) cls = classify_codim3(alg_);
    TriState def = TriState::Unknown;
    if (!asserted_ || s_.asserted.count("muI")) def = detect_embedded_deformation(inv_, cls);
    if (cls) {
      auto j = to_json(*cls);
      j["embedded_deformation"] = std::string(to_string(def));
      report_["tor_algebra"] = std::move(j);
    }
    auto tv = certify_trivial_vanishing(inv_, gg, def, cls);
    add_asserted(tv);
    auto tv_json = to_json(tv);
    tv_json["generalized_golod_evidence"] = to_json(gg);
    report_["certificates"]["trivial_vanishing"] = std::move(tv_json);
    if (with_ar) {
      auto ar = certify_auslander_reiten(inv_, gg, tv);
      add_asserted(ar);
      report_["certificates"]["auslander_reiten"] = to_json(ar);
    }
  }

  std::vector<std::string> merged_flags() const {
    auto flags = s_.gg_flags;
    flags.insert(flags.end(), opts_.assert_gg.begin(), opts_.assert_gg.end());
    return flags;
  }

  void add_asserted(Certificate& c) const {
    if (!asserted_) return;
    for (const auto& [k, v] : s_.asserted) c.assumptions.push_back("asserted invariant " + k + " = " + std::to_string(v));
    if (!s_.asserted.count("muI"))
      c.assumptions.push_back("mu_I not asserted: complete-intersection status and embedded deformation unknown");
  }

  bool bounds_cmd() {
    need_ring("verify-bounds");
    std::vector<std::string> names;
    if (!opts_.module.empty()) {
      names.push_back(opts_.module);
    } else {
      names = {"k", "A", "omega"};
      for (const auto& m : s_.modules) names.push_back(m.name);
    }
    bool ok = true;
    for (const auto& name : names) {
      auto mod = module(name);
      auto r = cache_.resolve(mod, opts_.steps);
      auto b = betti_table(r);
      auto j = to_json(b);
      Json checks = Json::array();
      const int first = std::max<int>(2, static_cast<int>(b.total(0)) + 1);
      if (b.steps >= first) {
        for (const auto& c : verify_growth_bounds(b, inv_)) {
          ok = ok && c.ok();
          checks.push_back(to_json(c));
        }
      }
      j["growth_bounds"] = std::move(checks);
      auto fb = first_betti_check(mod, b);
      j["first_betti_check"] = fb ? Json(*fb) : Json(nullptr);
      if (fb && !*fb) ok = false;
      report_["betti"][name] = std::move(j);
    }
    if (!opts_.m.empty() && !opts_.n.empty()) {
      auto mm = module(opts_.m), nn = module(opts_.n);
      auto bm = betti_table(cache_.resolve(mm, opts_.steps));
      auto bn = betti_table(cache_.resolve(nn, opts_.steps));
      auto p = tor(cache_.resolve(mm, opts_.steps), nn, 0, opts_.steps - 1);
      Json j = to_json(p);
      auto bad = tor_vanishing_betti_violations(p, bn, ulrich_index(mm));
      j["tor_vanishing_betti_violations"] = bad;
      ok = ok && bad.empty();
      if (p.hi >= 1 && p.vanishes_from(1)) {
        try {
          auto fk = verify_fkcom(bm, bn, p, inv_, opts_.window);
          j["limit_ratio_bounds"] = {{"lr_m", fk.lr_m.str()},
                                     {"lr_n", fk.lr_n.str()},
                                     {"product_bound", fk.product_bound},
                                     {"second_bound", fk.second_bound},
                                     {"caveat", fk.caveat}};
        } catch (const Error& e) {
          j["limit_ratio_bounds"] = {{"not_applicable", e.what()}};
        }
      }
      report_["tor"][opts_.m + "," + opts_.n] = std::move(j);
    }
    return ok;
  }

  SessionInput s_;
  CommandOptions opts_;
  ResolutionCache cache_;
  Json report_;
  bool have_context_ = false;
  bool asserted_ = false;
  AlgebraPtr alg_;
  RingInvariants inv_;
};

}  // namespace homolab

#endif  // HOMOLAB_COMMANDS_HPP
