// microregion: command-line front end for the cell featurization, training,
// clustering and export pipeline.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <iostream>
#include <string>
#include <vector>

#include "microregion/error.hpp"
#include "microregion/pipeline.hpp"

namespace mp = microregion::pipeline;

namespace {

struct Overrides {
  std::string config;
  std::optional<int> resolution;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k_folds;
  std::optional<std::size_t> n_clusters;
  std::optional<std::size_t> top_k;
  std::optional<int> n_stages;
  std::optional<std::string> whitelist;
  mp::Paths paths;
};

void add_path(CLI::App* cmd, Overrides& o, const char* name, std::optional<std::string> mp::Paths::*member,
              const char* help) {
  cmd->add_option(std::string("--") + name, o.paths.*member, help);
}

mp::PipelineConfig resolve(const Overrides& o) {
  mp::PipelineConfig cfg = o.config.empty() ? mp::PipelineConfig{} : mp::load_config(o.config);
  if (o.resolution) cfg.resolution = *o.resolution;
  if (o.seed) cfg.seed = *o.seed;
  if (o.k_folds) cfg.k_folds = *o.k_folds;
  if (o.n_clusters) cfg.n_clusters = *o.n_clusters;
  if (o.top_k) cfg.top_k_features = *o.top_k;
  if (o.n_stages) cfg.fit.n_stages = *o.n_stages;
  if (o.whitelist) cfg.whitelist_path = o.whitelist;
  cfg.fit.seed = cfg.seed;
  auto take = [](std::optional<std::string>& dst, const std::optional<std::string>& src) {
    if (src) dst = src;
  };
  take(cfg.paths.osm, o.paths.osm);
  take(cfg.paths.routes, o.paths.routes);
  take(cfg.paths.packages, o.paths.packages);
  take(cfg.paths.stops, o.paths.stops);
  take(cfg.paths.features, o.paths.features);
  take(cfg.paths.aggregates, o.paths.aggregates);
  take(cfg.paths.model, o.paths.model);
  take(cfg.paths.cv_report, o.paths.cv_report);
  take(cfg.paths.cluster_report, o.paths.cluster_report);
  take(cfg.paths.assignment, o.paths.assignment);
  take(cfg.paths.geojson, o.paths.geojson);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hexagonal micro-region featurization and service-time modelling"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  app.add_option("-c,--config", o.config, "JSON pipeline config")->check(CLI::ExistingFile);
  app.add_option("--resolution", o.resolution, "grid resolution (0-15)");
  app.add_option("--seed", o.seed, "seed for all randomness");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress warnings");

  auto* ingest_osm = app.add_subcommand("ingest-osm", "OSM XML -> per-cell tag counts (JSON lines)");
  add_path(ingest_osm, o, "osm", &mp::Paths::osm, "input .osm file");
  add_path(ingest_osm, o, "features", &mp::Paths::features, "output cell features");
  ingest_osm->add_option("--whitelist", o.whitelist, "tag whitelist file");

  auto* convert = app.add_subcommand("convert-lmrrc", "LMRRC route/package JSON -> stops CSV");
  add_path(convert, o, "routes", &mp::Paths::routes, "route_data.json");
  add_path(convert, o, "packages", &mp::Paths::packages, "package_data.json");
  add_path(convert, o, "stops", &mp::Paths::stops, "output stops CSV");

  auto* ingest_stops = app.add_subcommand("ingest-stops", "stops CSV -> per-cell aggregates (JSON lines)");
  add_path(ingest_stops, o, "stops", &mp::Paths::stops, "stops CSV");
  add_path(ingest_stops, o, "aggregates", &mp::Paths::aggregates, "output aggregates");

  auto* train = app.add_subcommand("train", "cross-validate and fit the service-time model");
  add_path(train, o, "stops", &mp::Paths::stops, "stops CSV");
  add_path(train, o, "features", &mp::Paths::features, "cell features");
  add_path(train, o, "model", &mp::Paths::model, "output model JSON");
  add_path(train, o, "cv-report", &mp::Paths::cv_report, "output CV report JSON");
  train->add_option("--k-folds", o.k_folds, "number of folds");
  train->add_option("--n-stages", o.n_stages, "boosting stages");

  auto* cluster = app.add_subcommand("cluster", "cluster cells on their significant tags");
  add_path(cluster, o, "model", &mp::Paths::model, "model JSON");
  add_path(cluster, o, "stops", &mp::Paths::stops, "stops CSV");
  add_path(cluster, o, "features", &mp::Paths::features, "cell features");
  add_path(cluster, o, "cluster-report", &mp::Paths::cluster_report, "output report JSON");
  add_path(cluster, o, "assignment", &mp::Paths::assignment, "output assignment (JSON lines)");
  cluster->add_option("--n-clusters", o.n_clusters, "number of clusters");
  cluster->add_option("--top-k", o.top_k, "number of significant features");

  auto* exp = app.add_subcommand("export", "write a GeoJSON map of the cells");
  add_path(exp, o, "stops", &mp::Paths::stops, "stops CSV");
  add_path(exp, o, "features", &mp::Paths::features, "cell features");
  add_path(exp, o, "model", &mp::Paths::model, "model JSON");
  add_path(exp, o, "assignment", &mp::Paths::assignment, "cluster assignment");
  add_path(exp, o, "cluster-report", &mp::Paths::cluster_report, "cluster report");
  add_path(exp, o, "geojson", &mp::Paths::geojson, "output GeoJSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto cfg = resolve(o);
    std::vector<std::string> warnings;
    std::string summary;
    if (*ingest_osm) summary = mp::cmd_ingest_osm(cfg, &warnings);
    else if (*convert) summary = mp::cmd_convert_lmrrc(cfg, &warnings);
    else if (*ingest_stops) summary = mp::cmd_ingest_stops(cfg, &warnings);
    else if (*train) summary = mp::cmd_train(cfg, &warnings);
    else if (*cluster) summary = mp::cmd_cluster(cfg, &warnings);
    else if (*exp) summary = mp::cmd_export_geojson(cfg, &warnings);
    if (!quiet) {
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    }
    std::cout << summary << '\n';
    return 0;
  } catch (const std::exception& e) {
    const int code = mp::exit_code_for(e);
    std::cerr << (code == 1 ? "error: " : "internal error: ") << e.what() << '\n';
    return code;
  }
}
