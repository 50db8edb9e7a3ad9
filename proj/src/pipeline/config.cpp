#include <cmath>
#include <cstdint>
#include <set>

#include "default_whitelist.hpp"
#include "microregion/error.hpp"
#include "microregion/pipeline.hpp"
#include "util/io.hpp"

namespace microregion::pipeline {
namespace {

using Json = nlohmann::json;

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw SchemaError("unknown config key '" + where + key + "'");
  }
}

template <typename T>
void read_uint(const Json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SchemaError("config key '" + where + key + "' must be a non-negative integer");
  }
  out = static_cast<T>(v.get<std::uint64_t>());
}

void read_int(const Json& j, const char* key, int& out, const std::string& where) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError("config key '" + where + key + "' must be an integer");
  out = v.get<int>();
}

void read_double(const Json& j, const char* key, double& out, const std::string& where) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number()) throw SchemaError("config key '" + where + key + "' must be a number");
  out = v.get<double>();
}

void read_path(const Json& j, const char* key, std::optional<std::string>& out, const std::string& where) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (v.is_null()) {
    out.reset();
    return;
  }
  if (!v.is_string()) throw SchemaError("config key '" + where + key + "' must be a string");
  out = v.get<std::string>();
}

struct PathField {
  const char* key;
  std::optional<std::string> Paths::*member;
};

constexpr PathField kPathFields[] = {
    {"osm", &Paths::osm},
    {"routes", &Paths::routes},
    {"packages", &Paths::packages},
    {"stops", &Paths::stops},
    {"features", &Paths::features},
    {"aggregates", &Paths::aggregates},
    {"model", &Paths::model},
    {"cv_report", &Paths::cv_report},
    {"cluster_report", &Paths::cluster_report},
    {"assignment", &Paths::assignment},
    {"geojson", &Paths::geojson},
};

}  // namespace

const char* default_whitelist_text() { return detail::kDefaultWhitelist; }

void PipelineConfig::validate() const {
  if (resolution < 0 || resolution > 15) throw InvalidArgument("resolution must be in [0, 15]");
  fit.validate();
  if (k_folds < 2) throw InvalidArgument("k_folds must be >= 2");
  if (n_clusters < 1) throw InvalidArgument("n_clusters must be >= 1");
  if (top_k_features < 1) throw InvalidArgument("top_k_features must be >= 1");
  if (min_stops_per_cell < 1) throw InvalidArgument("min_stops_per_cell must be >= 1");
}

PipelineConfig config_from_json(const Json& j) {
  reject_unknown(j,
                 {"resolution", "whitelist_path", "fit", "k_folds", "n_clusters", "top_k_features", "seed",
                  "feature_scaling", "min_stops_per_cell", "paths"},
                 "");
  PipelineConfig cfg;
  read_int(j, "resolution", cfg.resolution, "");
  read_path(j, "whitelist_path", cfg.whitelist_path, "");
  if (j.contains("fit")) {
    const auto& f = j.at("fit");
    reject_unknown(f, {"n_stages", "learning_rate", "max_depth", "min_samples_leaf"}, "fit.");
    read_int(f, "n_stages", cfg.fit.n_stages, "fit.");
    read_double(f, "learning_rate", cfg.fit.learning_rate, "fit.");
    read_int(f, "max_depth", cfg.fit.max_depth, "fit.");
    read_int(f, "min_samples_leaf", cfg.fit.min_samples_leaf, "fit.");
  }
  read_uint(j, "k_folds", cfg.k_folds, "");
  read_uint(j, "n_clusters", cfg.n_clusters, "");
  read_uint(j, "top_k_features", cfg.top_k_features, "");
  read_uint(j, "seed", cfg.seed, "");
  cfg.fit.seed = cfg.seed;
  if (j.contains("feature_scaling")) {
    const auto& v = j.at("feature_scaling");
    if (v == "raw") {
      cfg.feature_scaling = FeatureScaling::kRaw;
    } else if (v == "column_max") {
      cfg.feature_scaling = FeatureScaling::kColumnMax;
    } else {
      throw SchemaError("feature_scaling must be \"raw\" or \"column_max\"");
    }
  }
  read_uint(j, "min_stops_per_cell", cfg.min_stops_per_cell, "");
  if (j.contains("paths")) {
    const auto& p = j.at("paths");
    std::set<std::string> keys;
    for (const auto& f : kPathFields) keys.insert(f.key);
    reject_unknown(p, keys, "paths.");
    for (const auto& f : kPathFields) read_path(p, f.key, cfg.paths.*f.member, "paths.");
  }
  cfg.validate();
  return cfg;
}

nlohmann::ordered_json config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["resolution"] = cfg.resolution;
  if (cfg.whitelist_path) j["whitelist_path"] = *cfg.whitelist_path;
  j["fit"] = {{"n_stages", cfg.fit.n_stages},
              {"learning_rate", cfg.fit.learning_rate},
              {"max_depth", cfg.fit.max_depth},
              {"min_samples_leaf", cfg.fit.min_samples_leaf}};
  j["k_folds"] = cfg.k_folds;
  j["n_clusters"] = cfg.n_clusters;
  j["top_k_features"] = cfg.top_k_features;
  j["seed"] = cfg.seed;
  j["feature_scaling"] = cfg.feature_scaling == FeatureScaling::kRaw ? "raw" : "column_max";
  j["min_stops_per_cell"] = cfg.min_stops_per_cell;
  nlohmann::ordered_json paths = nlohmann::ordered_json::object();
  for (const auto& f : kPathFields) {
    if (cfg.paths.*f.member) paths[f.key] = *(cfg.paths.*f.member);
  }
  if (!paths.empty()) j["paths"] = std::move(paths);
  return j;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  auto in = util::open_input(path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("config " + path.string() + ": " + e.what());
  }
  auto cfg = config_from_json(j);
  // Relative paths in a config file are taken relative to the file itself.
  const auto base = path.parent_path();
  auto anchor = [&](std::optional<std::string>& p) {
    if (p && std::filesystem::path(*p).is_relative()) p = (base / *p).lexically_normal().string();
  };
  anchor(cfg.whitelist_path);
  for (const auto& f : kPathFields) anchor(cfg.paths.*f.member);
  return cfg;
}

int exit_code_for(const std::exception& e) {
  return dynamic_cast<const InputError*>(&e) != nullptr ? 1 : 2;
}

}  // namespace microregion::pipeline
