#include "rnls/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "rnls/error.hpp"

namespace rnls {

using nlohmann::json;

std::string to_string(Splitting s) { return s == Splitting::strang ? "strang" : "exact_linear"; }

Splitting splitting_from_string(const std::string& name) {
  if (name == "exact_linear") return Splitting::exact_linear;
  if (name == "strang") return Splitting::strang;
  fail(ErrorKind::config, "unknown splitting '" + name + "'");
}

double RunConfig::persistence_constant() const {
  return c_pers >= 0.0 ? c_pers : 0.05 * std::pow(eta1, 1.5) * eta2;
}

std::size_t RunConfig::steps() const { return static_cast<std::size_t>(std::llround(t_end / dt)); }

void RunConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::config, what);
  };
  require(r_max > 0.0 && std::isfinite(r_max), "r_max must be positive");
  require(n >= 8 && (n & (n - 1)) == 0, "n must be a power of two >= 8");
  require(dt > 0.0 && std::isfinite(dt), "dt must be positive");
  require(t_end >= 0.0 && std::isfinite(t_end), "t_end must be non-negative");
  const double ratio = t_end / dt;
  require(std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio), "t_end must be a multiple of dt");
  require(snapshot_stride >= 1, "snapshot_stride must be >= 1");
  require(steps() % snapshot_stride == 0, "step count must be a multiple of snapshot_stride");
  require(tail_mass_threshold > 0.0 && tail_mass_threshold < 1.0, "tail_mass_threshold must lie in (0, 1)");
  require(0.0 < eta3 && eta3 < eta2 && eta2 < eta1 && eta1 < 1.0, "need 0 < eta3 < eta2 < eta1 < 1");
  require(c_eta1 > 0.0, "c_eta1 must be positive");
  require(eps_small > 0.0, "eps_small must be positive");
  require(c_det > 0.0, "c_det must be positive");
  require(c_eta12 > 0.0, "c_eta12 must be positive");
  require(profile.kind == ProfileKind::zero || (profile.width > 0.0 && profile.scale > 0.0),
          "profile width and scale must be positive");
}

json to_json(const RunConfig& c) {
  json profile = {{"kind", to_string(c.profile.kind)},
                  {"amplitude", c.profile.amplitude},
                  {"width", c.profile.width},
                  {"center", c.profile.center},
                  {"scale", c.profile.scale}};
  return json{{"r_max", c.r_max},
              {"n", c.n},
              {"dt", c.dt},
              {"t_end", c.t_end},
              {"profile", profile},
              {"snapshot_stride", c.snapshot_stride},
              {"tail_mass_threshold", c.tail_mass_threshold},
              {"eta1", c.eta1},
              {"eta2", c.eta2},
              {"eta3", c.eta3},
              {"c_eta1", c.c_eta1},
              {"eps_small", c.eps_small},
              {"splitting", to_string(c.splitting)},
              {"c_det", c.c_det},
              {"c_eta12", c.c_eta12},
              {"c_pers", c.persistence_constant()}};
}

namespace {

void reject_unknown(const json& doc, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail(ErrorKind::config, "unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& doc, const char* key, T& out) {
  if (auto it = doc.find(key); it != doc.end()) out = it->get<T>();
}

}  // namespace

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) fail(ErrorKind::config, "config must be a JSON object");
  reject_unknown(doc,
                 {"r_max", "n", "dt", "t_end", "profile", "snapshot_stride", "tail_mass_threshold", "eta1", "eta2",
                  "eta3", "c_eta1", "eps_small", "splitting", "c_det", "c_eta12", "c_pers"},
                 "config");
  RunConfig c;
  try {
    read(doc, "r_max", c.r_max);
    read(doc, "n", c.n);
    read(doc, "dt", c.dt);
    read(doc, "t_end", c.t_end);
    read(doc, "snapshot_stride", c.snapshot_stride);
    read(doc, "tail_mass_threshold", c.tail_mass_threshold);
    read(doc, "eta1", c.eta1);
    read(doc, "eta2", c.eta2);
    read(doc, "eta3", c.eta3);
    read(doc, "c_eta1", c.c_eta1);
    read(doc, "eps_small", c.eps_small);
    read(doc, "c_det", c.c_det);
    read(doc, "c_eta12", c.c_eta12);
    read(doc, "c_pers", c.c_pers);
    if (auto it = doc.find("splitting"); it != doc.end()) c.splitting = splitting_from_string(it->get<std::string>());
    if (auto it = doc.find("profile"); it != doc.end()) {
      const json& p = *it;
      if (!p.is_object()) fail(ErrorKind::config, "profile must be an object");
      reject_unknown(p, {"kind", "amplitude", "width", "center", "scale"}, "profile");
      if (auto k = p.find("kind"); k != p.end()) c.profile.kind = profile_kind_from_string(k->get<std::string>());
      read(p, "amplitude", c.profile.amplitude);
      read(p, "width", c.profile.width);
      read(p, "center", c.profile.center);
      read(p, "scale", c.profile.scale);
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::config, std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::config, "config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

}  // namespace rnls
