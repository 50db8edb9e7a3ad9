#include <algorithm>
#include <map>
#include <sstream>

#include "microregion/delivery.hpp"
#include "microregion/error.hpp"
#include "microregion/hexgrid.hpp"
#include "microregion/osm.hpp"
#include "microregion/pipeline.hpp"
#include "util/io.hpp"

namespace microregion::pipeline {
namespace {

using OJson = nlohmann::ordered_json;
using hexgrid::CellId;

constexpr std::size_t kTopTags = 3;

std::map<CellId, std::size_t> read_assignment(const std::string& path) {
  auto in = util::open_input(path);
  std::map<CellId, std::size_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (util::trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out[CellId::parse(j.at("cell").get<std::string>())] = j.at("cluster").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("assignment record: ") + e.what(), lineno);
    }
  }
  return out;
}

std::map<CellId, std::size_t> read_medoids(const std::string& path) {
  auto in = util::open_input(path);
  std::map<CellId, std::size_t> out;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& c : j.at("clusters")) {
      out[CellId::parse(c.at("medoid").get<std::string>())] = c.at("label").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("cluster report " + path + ": " + e.what());
  }
  return out;
}

OJson ring(const CellId& cell) {
  const auto boundary = hexgrid::cell_boundary(cell);
  OJson coords = OJson::array();
  for (const auto& v : boundary.vertices) coords.push_back({v.lng(), v.lat()});
  coords.push_back(coords.front());
  return OJson::array({coords});
}

OJson top_tags(const osm::TagCountVector* counts) {
  OJson out = OJson::array();
  if (counts == nullptr) return out;
  std::vector<std::pair<std::string, std::uint64_t>> v(counts->begin(), counts->end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second > b.second || (a.second == b.second && a.first < b.first);
  });
  for (std::size_t i = 0; i < v.size() && i < kTopTags; ++i) {
    out.push_back({{"feature", v[i].first}, {"count", v[i].second}});
  }
  return out;
}

}  // namespace

std::string cmd_export_geojson(const PipelineConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  if (!cfg.paths.geojson) throw InvalidArgument("export needs paths.geojson (or --geojson)");
  if (!cfg.paths.stops) throw InvalidArgument("export needs paths.stops (or --stops)");
  if (!cfg.paths.features) throw InvalidArgument("export needs paths.features (or --features)");
  if (!cfg.paths.model) throw InvalidArgument("export needs paths.model (or --model)");

  const auto stops = delivery::parse_stops_csv_file(*cfg.paths.stops);
  if (warnings) warnings->insert(warnings->end(), stops.warnings.begin(), stops.warnings.end());
  osm::CellFeatures features;
  {
    auto in = util::open_input(*cfg.paths.features);
    features = osm::read_cell_features(in);
  }
  const auto aggregates = delivery::aggregate_stops(stops.stops, cfg.resolution, cfg.min_stops_per_cell);
  const auto ds = delivery::build_dataset(aggregates, features);
  const auto model = boosting::load_model(*cfg.paths.model);
  const auto labels = cfg.paths.assignment ? read_assignment(*cfg.paths.assignment) : std::map<CellId, std::size_t>{};
  const auto medoids = cfg.paths.cluster_report ? read_medoids(*cfg.paths.cluster_report) : std::map<CellId, std::size_t>{};

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < ds.feature_names.size(); ++i) column.emplace(ds.feature_names[i], i);

  OJson collection;
  collection["type"] = "FeatureCollection";
  OJson feats = OJson::array();
  for (std::size_t r = 0; r < ds.n_rows(); ++r) {
    const auto& row = ds.rows[r];
    const auto& agg = aggregates[r];
    std::vector<double> x(model.feature_names.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto it = column.find(model.feature_names[i]);
      if (it != column.end()) x[i] = row.x[it->second];
    }
    const auto p = boosting::predict(model, x);
    const auto label = labels.find(row.cell);
    const auto fc = features.find(row.cell);

    OJson props;
    props["cell"] = row.cell.to_string();
    props["n_stops"] = agg.n_stops;
    props["mean_service_time_s"] = agg.mean_service_time_s;
    props["median_service_time_s"] = agg.median_service_time_s;
    props["mu"] = p.mu;
    props["sigma"] = p.sigma();
    props["cluster"] = label == labels.end() ? OJson(nullptr) : OJson(label->second);
    props["medoid"] = medoids.count(row.cell) != 0;
    props["top_tags"] = top_tags(fc == features.end() ? nullptr : &fc->second);

    OJson f;
    f["type"] = "Feature";
    f["geometry"] = {{"type", "Polygon"}, {"coordinates", ring(row.cell)}};
    f["properties"] = std::move(props);
    feats.push_back(std::move(f));
  }
  collection["features"] = std::move(feats);

  auto out = util::open_output(*cfg.paths.geojson);
  out << collection.dump() << '\n';
  if (!out) throw IoError("write error on " + *cfg.paths.geojson);

  std::ostringstream s;
  s << "export: " << ds.n_rows() << " cells, " << medoids.size() << " medoids flagged";
  return s.str();
}

}  // namespace microregion::pipeline
