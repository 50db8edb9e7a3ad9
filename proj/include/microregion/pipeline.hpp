#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "microregion/boost.hpp"

namespace microregion::pipeline {

struct Paths {
  std::optional<std::string> osm;
  std::optional<std::string> routes;
  std::optional<std::string> packages;
  std::optional<std::string> stops;
  std::optional<std::string> features;
  std::optional<std::string> aggregates;
  std::optional<std::string> model;
  std::optional<std::string> cv_report;
  std::optional<std::string> cluster_report;
  std::optional<std::string> assignment;
  std::optional<std::string> geojson;
};

enum class FeatureScaling { kRaw, kColumnMax };

struct PipelineConfig {
  int resolution = 9;
  /// Unset means the built-in default whitelist.
  std::optional<std::string> whitelist_path;
  /// fit.seed mirrors `seed`; the JSON "fit" object has no seed of its own.
  boosting::FitConfig fit;
  std::size_t k_folds = 5;
  std::size_t n_clusters = 2;
  std::size_t top_k_features = 50;
  std::uint64_t seed = 0;
  FeatureScaling feature_scaling = FeatureScaling::kRaw;
  std::size_t min_stops_per_cell = 1;
  Paths paths;

  /// Throws InvalidArgument on out-of-range values.
  void validate() const;
};

/// Unknown keys and wrongly typed values throw SchemaError.
PipelineConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const PipelineConfig& cfg);
PipelineConfig load_config(const std::filesystem::path& path);

/// Text of the default whitelist shipped with the project.
const char* default_whitelist_text();

/// Process exit status for a failed command: 1 for input errors, 2 otherwise.
int exit_code_for(const std::exception& e);

/// Each command reads and writes the files named in cfg.paths and returns a
/// one-line summary. A missing required path throws InvalidArgument.
std::string cmd_ingest_osm(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);
std::string cmd_convert_lmrrc(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);
std::string cmd_ingest_stops(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);
std::string cmd_train(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);
std::string cmd_cluster(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);
std::string cmd_export_geojson(const PipelineConfig& cfg, std::vector<std::string>* warnings = nullptr);

}  // namespace microregion::pipeline
