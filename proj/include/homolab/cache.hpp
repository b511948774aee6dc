#ifndef HOMOLAB_CACHE_HPP
#define HOMOLAB_CACHE_HPP

#include <openssl/sha.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "homolab/resolution.hpp"

namespace homolab {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 15]);
  }
  return out;
}

/// Canonical text of a ring: characteristic, order, variables, ideal generators.
inline std::string ring_fingerprint(const QuotientAlgebra& a) {
  std::ostringstream os;
  os << "char=" << a.field().characteristic() << ";order=" << to_string(a.ring().order) << ";vars=";
  for (const auto& v : a.ring().var_names) os << v << ",";
  os << ";ideal=";
  for (const auto& g : a.ideal_generators()) os << format_polynomial(g) << ",";
  return os.str();
}

inline std::string module_fingerprint(const GradedModule& m) {
  std::ostringstream os;
  os << "gens=";
  for (int d : m.gen_degrees()) os << d << ",";
  os << ";rels=";
  for (std::size_t j = 0; j < m.relations().size(); ++j) {
    os << "[";
    for (const auto& entry : m.relation_column(j)) os << m.algebra()->format(entry) << ",";
    os << "]";
  }
  return os.str();
}

inline std::string resolution_key(const GradedModule& m, int steps) {
  return sha256_hex(ring_fingerprint(*m.algebra()) + "|" + module_fingerprint(m) + "|steps=" + std::to_string(steps));
}

inline nlohmann::json resolution_to_json(const Resolution& r) {
  nlohmann::json j;
  j["format"] = "homolab-resolution-1";
  auto& mods = j["gen_degrees"] = nlohmann::json::array();
  for (const auto& f : r.modules) mods.push_back(f.gen_degrees());
  auto& diffs = j["differentials"] = nlohmann::json::array();
  for (const auto& d : r.differentials) {
    auto cols = nlohmann::json::array();
    for (const auto& col : d) {
      auto entries = nlohmann::json::array();
      for (const auto& e : col) entries.push_back({e.index, e.value});
      cols.push_back(std::move(entries));
    }
    diffs.push_back(std::move(cols));
  }
  return j;
}

/// Rebuilds a resolution over `a`, validating shape, d o d = 0 and
/// minimality. Throws CacheCorrupt on any mismatch.
inline Resolution resolution_from_json(const nlohmann::json& j, const AlgebraPtr& a) {
  try {
    if (j.at("format") != "homolab-resolution-1") throw Error(ErrorCode::CacheCorrupt, "unknown format");
    Resolution r;
    r.algebra = a;
    for (const auto& degs : j.at("gen_degrees")) r.modules.emplace_back(a, degs.get<std::vector<int>>());
    const auto& diffs = j.at("differentials");
    if (diffs.size() != r.modules.size()) throw Error(ErrorCode::CacheCorrupt, "differential count");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      std::vector<SparseVec> cols;
      for (const auto& col : diffs[i]) {
        SparseVec v;
        for (const auto& e : col) {
          auto idx = e.at(0).get<std::uint32_t>();
          auto val = e.at(1).get<Scalar>();
          if (val == 0 || val >= a->field().characteristic() || (!v.empty() && v.back().index >= idx) ||
              (i > 0 && idx >= r.modules[i - 1].dim()))
            throw Error(ErrorCode::CacheCorrupt, "bad entry");
          v.push_back({idx, val});
        }
        cols.push_back(std::move(v));
      }
      r.differentials.push_back(std::move(cols));
    }
    if (!r.differentials.front().empty()) throw Error(ErrorCode::CacheCorrupt, "d_0 must be empty");
    if (auto problem = check_resolution(r)) throw Error(ErrorCode::CacheCorrupt, *problem);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, e.what());
  }
}

/// Content-addressed on-disk store for resolutions. Disabled when no
/// directory is configured.
class ResolutionCache {
 public:
  ResolutionCache() = default;
  explicit ResolutionCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  /// Directory from HOMOLAB_CACHE_DIR, if set and non-empty.
  static ResolutionCache from_environment() {
    const char* env = std::getenv("HOMOLAB_CACHE_DIR");
    if (!env || !*env) return ResolutionCache();
    return ResolutionCache(std::filesystem::path(env));
  }

  bool enabled() const { return dir_.has_value(); }

  /// Resolution of m through `steps`, replayed from disk when a valid entry
  /// exists. A corrupt entry is reported on stderr and recomputed.
  Resolution resolve(const GradedModule& m, int steps, ResolveOptions opts = {}) {
    opts.steps = steps;
    if (!enabled()) return homolab::resolve(m, opts);
    const auto key = resolution_key(m, steps);
    const auto path = *dir_ / (key + ".json");
    if (std::filesystem::exists(path)) {
      try {
        std::ifstream in(path);
        auto r = resolution_from_json(nlohmann::json::parse(in), m.algebra());
        check_matches(r, m);
        ++hits_;
        return r;
      } catch (const std::exception& e) {
        std::cerr << "homolab: ignoring cache entry " << path.string() << ": " << e.what() << "\n";
      }
    }
    auto r = homolab::resolve(m, opts);
    store(path, resolution_to_json(r));
    return r;
  }

  std::size_t hits() const { return hits_; }

 private:
  static void check_matches(const Resolution& r, const GradedModule& m) {
    auto mm = minimize_presentation(m);
    if (r.modules.front().gen_degrees() != mm.gen_degrees() ||
        (r.steps() >= 1 && r.differentials[1] != mm.relations()))
      throw Error(ErrorCode::CacheCorrupt, "presentation does not match");
  }

  void store(const std::filesystem::path& path, const nlohmann::json& j) const {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << j.dump();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::optional<std::filesystem::path> dir_;
  std::size_t hits_ = 0;
};

}  // namespace homolab

#endif  // HOMOLAB_CACHE_HPP
