#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "microregion/geo.hpp"
#include "microregion/hexgrid.hpp"
#include "microregion/osm.hpp"

namespace microregion::delivery {

struct StopRecord {
  std::string route_id;
  std::string stop_id;
  GeoPoint location{0.0, 0.0};
  double service_time_s = 0.0;
};

struct StopParseResult {
  std::vector<StopRecord> stops;
  /// Rows or stops that were dropped, each with a warning.
  std::size_t rejected = 0;
  std::vector<std::string> warnings;
};

/// CSV with header route_id,stop_id,lat,lng,service_time_s (any column order,
/// extra columns ignored). A missing column throws SchemaError; bad rows are
/// rejected and tallied.
StopParseResult parse_stops_csv(std::istream& in);
StopParseResult parse_stops_csv_file(const std::filesystem::path& path);
void write_stops_csv(std::ostream& out, const std::vector<StopRecord>& stops);

/// Adapter for the Last Mile Routing Research Challenge JSON files. Service
/// time of a stop is the sum of its packages' planned service times; stops
/// without packages (or with zero total) and stops without coordinates are
/// skipped. Output is ordered by route id then stop id.
StopParseResult convert_lmrrc(std::istream& route_json, std::istream& package_json);

struct CellAggregate {
  hexgrid::CellId cell;
  std::size_t n_stops = 0;
  double mean_service_time_s = 0.0;
  double median_service_time_s = 0.0;
  /// Per-stop service times, ascending.
  std::vector<double> service_times_s;
};

double median_of_sorted(const std::vector<double>& sorted);
/// Sum in ascending order so the result does not depend on input order.
double mean_of_sorted(const std::vector<double>& sorted);

/// One aggregate per cell holding at least `min_stops` stops, ascending by cell.
std::vector<CellAggregate> aggregate_stops(const std::vector<StopRecord>& stops, int resolution,
                                           std::size_t min_stops = 1);

/// JSON lines {"cell", "n_stops", "mean_s", "median_s"}.
void write_aggregates(std::ostream& out, const std::vector<CellAggregate>& aggregates);

struct DatasetRow {
  hexgrid::CellId cell;
  std::vector<double> x;
  double y = 0.0;
};

struct CellDataset {
  std::vector<std::string> feature_names;
  std::vector<DatasetRow> rows;
  std::map<hexgrid::CellId, std::vector<double>> per_stop_index;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_features() const { return feature_names.size(); }
};

/// Rows follow the aggregates; cells without OSM features get zero vectors.
/// Throws EmptyDatasetError when there are no aggregates.
CellDataset build_dataset(const std::vector<CellAggregate>& aggregates,
                          const osm::CellFeatures& cell_features);

}  // namespace microregion::delivery
