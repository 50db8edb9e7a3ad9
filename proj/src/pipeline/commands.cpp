#include <algorithm>
#include <map>
#include <sstream>

#include "microregion/analytics.hpp"
#include "microregion/cluster.hpp"
#include "microregion/delivery.hpp"
#include "microregion/error.hpp"
#include "microregion/osm.hpp"
#include "microregion/pipeline.hpp"
#include "util/io.hpp"

namespace microregion::pipeline {
namespace {

using OJson = nlohmann::ordered_json;

const std::string& require(const std::optional<std::string>& p, const char* name, const char* command) {
  if (!p) {
    std::string flag(name);
    std::replace(flag.begin(), flag.end(), '_', '-');
    throw InvalidArgument(std::string(command) + " needs paths." + name + " (or --" + flag + ")");
  }
  return *p;
}

void note(std::vector<std::string>* sink, const std::vector<std::string>& items) {
  if (sink) sink->insert(sink->end(), items.begin(), items.end());
}

void note(std::vector<std::string>* sink, const std::string& item) {
  if (sink) sink->push_back(item);
}

void write_json_file(const std::string& path, const OJson& j) {
  auto out = util::open_output(path);
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write error on " + path);
}

osm::CellFeatures read_features(const std::string& path) {
  auto in = util::open_input(path);
  return osm::read_cell_features(in);
}

struct LoadedData {
  delivery::CellDataset dataset;
  osm::CellFeatures features;
  std::size_t n_stops = 0;
};

LoadedData load_dataset(const PipelineConfig& cfg, const char* command, std::vector<std::string>* warnings) {
  LoadedData d;
  const auto stops = delivery::parse_stops_csv_file(require(cfg.paths.stops, "stops", command));
  note(warnings, stops.warnings);
  d.features = read_features(require(cfg.paths.features, "features", command));
  const auto aggregates = delivery::aggregate_stops(stops.stops, cfg.resolution, cfg.min_stops_per_cell);
  for (const auto& a : aggregates) d.n_stops += a.n_stops;
  d.dataset = delivery::build_dataset(aggregates, d.features);
  return d;
}

// Reorders a dataset row into the model's feature order; unseen names read as 0.
std::vector<double> align(const delivery::DatasetRow& row, const std::vector<std::string>& from,
                          const std::vector<std::string>& to) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < from.size(); ++i) index.emplace(from[i], i);
  std::vector<double> out(to.size(), 0.0);
  for (std::size_t i = 0; i < to.size(); ++i) {
    const auto it = index.find(to[i]);
    if (it != index.end()) out[i] = row.x[it->second];
  }
  return out;
}

OJson ttest_json(const analytics::TTestResult& t) {
  OJson j;
  j["t"] = t.t;
  j["df"] = t.df;
  j["p_two_sided"] = t.p_two_sided;
  j["n1"] = t.n1;
  j["n2"] = t.n2;
  j["mean1"] = t.mean1;
  j["mean2"] = t.mean2;
  return j;
}

}  // namespace

std::string cmd_ingest_osm(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  const auto& osm_path = require(cfg.paths.osm, "osm", "ingest-osm");
  const auto& out_path = require(cfg.paths.features, "features", "ingest-osm");
  const auto whitelist = [&] {
    if (cfg.whitelist_path) return osm::TagWhitelist::from_file(*cfg.whitelist_path);
    std::istringstream in(default_whitelist_text());
    return osm::TagWhitelist::parse(in);
  }();
  const auto parsed = osm::parse_osm_file(osm_path);
  note(warnings, parsed.warnings);
  const auto kept = osm::filter_tags(parsed.objects, whitelist);
  const auto cells = osm::aggregate_counts(kept, cfg.resolution);
  if (kept.empty()) note(warnings, "no whitelisted objects in " + osm_path);
  auto out = util::open_output(out_path);
  osm::write_cell_features(out, cells);

  std::uint64_t mass = 0;
  for (const auto& [cell, counts] : cells) {
    for (const auto& [name, n] : counts) mass += n;
  }
  std::ostringstream s;
  s << "ingest-osm: " << parsed.objects.size() << " tagged objects, " << kept.size()
    << " kept after whitelist, " << parsed.skipped_ways << " ways skipped, " << cells.size() << " cells, "
    << mass << " tag counts";
  return s.str();
}

std::string cmd_convert_lmrrc(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  auto routes = util::open_input(require(cfg.paths.routes, "routes", "convert-lmrrc"));
  auto packages = util::open_input(require(cfg.paths.packages, "packages", "convert-lmrrc"));
  const auto result = delivery::convert_lmrrc(routes, packages);
  note(warnings, result.warnings);
  auto out = util::open_output(require(cfg.paths.stops, "stops", "convert-lmrrc"));
  delivery::write_stops_csv(out, result.stops);
  std::ostringstream s;
  s << "convert-lmrrc: " << result.stops.size() << " stops written, " << result.rejected << " skipped";
  return s.str();
}

std::string cmd_ingest_stops(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  const auto stops = delivery::parse_stops_csv_file(require(cfg.paths.stops, "stops", "ingest-stops"));
  note(warnings, stops.warnings);
  const auto aggregates = delivery::aggregate_stops(stops.stops, cfg.resolution, cfg.min_stops_per_cell);
  auto out = util::open_output(require(cfg.paths.aggregates, "aggregates", "ingest-stops"));
  delivery::write_aggregates(out, aggregates);
  std::ostringstream s;
  s << "ingest-stops: " << stops.stops.size() << " stops, " << stops.rejected << " rejected, "
    << aggregates.size() << " cells";
  return s.str();
}

std::string cmd_train(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  const auto& model_path = require(cfg.paths.model, "model", "train");
  const auto& report_path = require(cfg.paths.cv_report, "cv_report", "train");
  const auto data = load_dataset(cfg, "train", warnings);
  auto fit_cfg = cfg.fit;
  fit_cfg.seed = cfg.seed;

  const auto cv = analytics::cross_validate(data.dataset, fit_cfg, cfg.k_folds, cfg.seed);
  boosting::FitTrace trace;
  const auto model = boosting::fit(data.dataset, fit_cfg, &trace);
  if (trace.stopped_early) {
    note(warnings, "training stopped after " + std::to_string(model.stages.size()) +
                       " stages: no step size decreased the training NLL");
  }
  boosting::save_model(model_path, model);

  OJson report;
  report["dataset"] = {{"n_cells", data.dataset.n_rows()},
                       {"n_stops", data.n_stops},
                       {"n_features", data.dataset.n_features()}};
  report["cv"] = analytics::cv_report_to_json(cv);
  OJson imp = OJson::array();
  for (const auto& [name, w] : boosting::feature_importance(model)) imp.push_back({{"feature", name}, {"weight", w}});
  report["feature_importance"] = std::move(imp);
  report["final_model"] = {{"n_stages", model.stages.size()}, {"train_nll", trace.total_nll.back()}};
  write_json_file(report_path, report);

  std::ostringstream s;
  s.precision(6);
  s << "train: " << data.dataset.n_rows() << " cells, " << data.dataset.n_features() << " features, "
    << cfg.k_folds << "-fold mean NLL " << (cv.nll.mean ? *cv.nll.mean : 0.0);
  if (cv.r2.mean) s << ", mean R2 " << *cv.r2.mean;
  return s.str();
}

std::string cmd_cluster(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  const auto& report_path = require(cfg.paths.cluster_report, "cluster_report", "cluster");
  const auto& assignment_path = require(cfg.paths.assignment, "assignment", "cluster");
  const auto model = boosting::load_model(require(cfg.paths.model, "model", "cluster"));
  const auto data = load_dataset(cfg, "cluster", warnings);

  const auto selection = cluster::select_significant_features(boosting::feature_importance(model), cfg.top_k_features);
  if (selection.truncated) {
    note(warnings, "top_k_features=" + std::to_string(cfg.top_k_features) + " exceeds the " +
                       std::to_string(selection.names.size()) + " ranked features; using all of them");
  }
  if (selection.names.empty()) throw DegenerateError("the model ranks no features; nothing to cluster on");

  const auto& ds = data.dataset;
  std::vector<std::vector<double>> all(ds.n_rows());
  for (std::size_t r = 0; r < ds.n_rows(); ++r) all[r] = align(ds.rows[r], ds.feature_names, selection.names);
  if (cfg.feature_scaling == FeatureScaling::kColumnMax) {
    for (std::size_t c = 0; c < selection.names.size(); ++c) {
      double mx = 0.0;
      for (const auto& v : all) mx = std::max(mx, v[c]);
      if (mx > 0.0) {
        for (auto& v : all) v[c] /= mx;
      }
    }
  }

  cluster::ClusterAssignment assignment;
  std::vector<std::vector<double>> vectors;
  OJson excluded = OJson::array();
  for (std::size_t r = 0; r < ds.n_rows(); ++r) {
    if (std::all_of(all[r].begin(), all[r].end(), [](double v) { return v == 0.0; })) {
      excluded.push_back(ds.rows[r].cell.to_string());
      continue;
    }
    assignment.cells.push_back(ds.rows[r].cell);
    vectors.push_back(all[r]);
  }
  if (vectors.size() < cfg.n_clusters) {
    throw DegenerateError("only " + std::to_string(vectors.size()) + " cells have non-zero significant features; " +
                          std::to_string(cfg.n_clusters) + " clusters requested");
  }
  const auto partition = cluster::agglomerate(vectors, cfg.n_clusters);
  assignment.labels = partition.labels;
  assignment.k = partition.k;

  OJson test = nullptr;
  OJson test_error = nullptr;
  cluster::ClusterReport report;
  try {
    report = cluster::summarize_clusters(assignment, ds.per_stop_index, vectors);
    if (report.test) test = ttest_json(*report.test);
  } catch (const DegenerateError& e) {
    // The per-cluster numbers are still meaningful; record why the test is missing.
    report = cluster::summarize_clusters(assignment, ds.per_stop_index, vectors, false);
    test_error = e.what();
  } catch (const InvalidArgument& e) {
    if (assignment.k != 2) throw;
    report = cluster::summarize_clusters(assignment, ds.per_stop_index, vectors, false);
    test_error = e.what();
  }

  OJson j;
  j["k"] = assignment.k;
  j["significant_features"] = selection.names;
  j["feature_scaling"] = cfg.feature_scaling == FeatureScaling::kRaw ? "raw" : "column_max";
  j["n_cells"] = assignment.cells.size();
  j["excluded_cells"] = excluded;
  OJson clusters = OJson::array();
  for (std::size_t c = 0; c < report.per_cluster.size(); ++c) {
    const auto& s = report.per_cluster[c];
    clusters.push_back({{"label", c},
                        {"size", s.size},
                        {"medoid", s.medoid.to_string()},
                        {"n_stops", s.n_stops},
                        {"median_service_time_s", s.median_service_time_s},
                        {"mean_service_time_s", s.mean_service_time_s}});
  }
  j["clusters"] = std::move(clusters);
  j["t_test"] = test;
  if (!test_error.is_null()) j["t_test_error"] = test_error;
  write_json_file(report_path, j);

  auto out = util::open_output(assignment_path);
  for (std::size_t i = 0; i < assignment.cells.size(); ++i) {
    OJson rec;
    rec["cell"] = assignment.cells[i].to_string();
    rec["cluster"] = assignment.labels[i];
    out << rec.dump() << '\n';
  }
  if (!out) throw IoError("write error on " + assignment_path);

  std::ostringstream s;
  s << "cluster: " << assignment.cells.size() << " cells in " << assignment.k << " clusters, " << excluded.size()
    << " excluded";
  if (report.test) s << ", t(" << report.test->df << ")=" << report.test->t << " p=" << report.test->p_two_sided;
  return s.str();
}

}  // namespace microregion::pipeline
