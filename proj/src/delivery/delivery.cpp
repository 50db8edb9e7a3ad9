#include "microregion/delivery.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "microregion/error.hpp"
#include "util/io.hpp"

namespace microregion::delivery {
namespace {

constexpr std::array<const char*, 5> kColumns = {"route_id", "stop_id", "lat", "lng",
                                                 "service_time_s"};

// RFC 4180 style: quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = util::trim(s);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return !t.empty() && ec == std::errc{} && ptr == t.data() + t.size() && std::isfinite(out);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

StopParseResult parse_stops_csv(std::istream& in) {
  StopParseResult result;
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("stops CSV is empty (no header)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

  const auto header = split_csv(line);
  std::array<std::size_t, kColumns.size()> col{};
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    const auto it = std::find_if(header.begin(), header.end(),
                                 [&](const std::string& h) { return util::trim(h) == kColumns[c]; });
    if (it == header.end()) throw SchemaError(std::string("stops CSV missing column '") + kColumns[c] + "'");
    col[c] = static_cast<std::size_t>(it - header.begin());
  }

  std::size_t lineno = 1;
  auto reject = [&](const std::string& why) {
    ++result.rejected;
    result.warnings.push_back("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (util::trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      reject("expected " + std::to_string(header.size()) + " fields, got " +
             std::to_string(fields.size()));
      continue;
    }
    double lat = 0.0;
    double lng = 0.0;
    double t = 0.0;
    if (!parse_double(fields[col[2]], lat) || !parse_double(fields[col[3]], lng)) {
      reject("unparsable coordinates");
      continue;
    }
    if (!parse_double(fields[col[4]], t)) {
      reject("unparsable service time");
      continue;
    }
    if (t <= 0.0) {
      reject("non-positive service time " + util::trim(fields[col[4]]));
      continue;
    }
    try {
      result.stops.push_back(StopRecord{util::trim(fields[col[0]]), util::trim(fields[col[1]]),
                                        GeoPoint(lat, lng), t});
    } catch (const InvalidArgument& e) {
      reject(e.what());
    }
  }
  return result;
}

StopParseResult parse_stops_csv_file(const std::filesystem::path& path) {
  auto in = util::open_input(path);
  return parse_stops_csv(in);
}

void write_stops_csv(std::ostream& out, const std::vector<StopRecord>& stops) {
  out << "route_id,stop_id,lat,lng,service_time_s\n";
  for (const auto& s : stops) {
    out << csv_field(s.route_id) << ',' << csv_field(s.stop_id) << ',' << shortest(s.location.lat())
        << ',' << shortest(s.location.lng()) << ',' << shortest(s.service_time_s) << '\n';
  }
  if (!out) throw IoError("write error on stops CSV");
}

StopParseResult convert_lmrrc(std::istream& route_json, std::istream& package_json) {
  nlohmann::json routes;
  nlohmann::json packages;
  try {
    routes = nlohmann::json::parse(route_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("route data: ") + e.what());
  }
  try {
    packages = nlohmann::json::parse(package_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("package data: ") + e.what());
  }
  if (!routes.is_object()) throw SchemaError("route data must be a JSON object keyed by route id");
  if (!packages.is_object()) throw SchemaError("package data must be a JSON object keyed by route id");

  StopParseResult result;
  for (const auto& [route_id, route] : routes.items()) {
    const auto stops = route.find("stops");
    if (stops == route.end() || !stops->is_object()) {
      throw SchemaError("route " + route_id + " has no stops object");
    }
    const auto route_pkgs = packages.find(route_id);
    for (const auto& [stop_id, stop] : stops->items()) {
      double total = 0.0;
      if (route_pkgs != packages.end() && route_pkgs->contains(stop_id)) {
        for (const auto& [pkg_id, pkg] : route_pkgs->at(stop_id).items()) {
          const auto t = pkg.find("planned_service_time_seconds");
          if (t == pkg.end() || !t->is_number()) {
            throw SchemaError("package " + pkg_id + " of " + route_id + "/" + stop_id +
                              " lacks planned_service_time_seconds");
          }
          total += t->get<double>();
        }
      }
      if (!(total > 0.0)) continue;
      const auto lat = stop.find("lat");
      const auto lng = stop.find("lng");
      if (lat == stop.end() || lng == stop.end() || !lat->is_number() || !lng->is_number()) {
        ++result.rejected;
        result.warnings.push_back("stop " + route_id + "/" + stop_id + " has no coordinates, skipped");
        continue;
      }
      try {
        result.stops.push_back(
            StopRecord{route_id, stop_id, GeoPoint(lat->get<double>(), lng->get<double>()), total});
      } catch (const InvalidArgument& e) {
        ++result.rejected;
        result.warnings.push_back("stop " + route_id + "/" + stop_id + ": " + e.what());
      }
    }
  }
  return result;
}

double median_of_sorted(const std::vector<double>& sorted) {
  if (sorted.empty()) throw InvalidArgument("median of an empty list");
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

double mean_of_sorted(const std::vector<double>& sorted) {
  if (sorted.empty()) throw InvalidArgument("mean of an empty list");
  double sum = 0.0;
  for (const double v : sorted) sum += v;
  return sum / static_cast<double>(sorted.size());
}

std::vector<CellAggregate> aggregate_stops(const std::vector<StopRecord>& stops, int resolution,
                                           std::size_t min_stops) {
  std::map<hexgrid::CellId, std::vector<double>> by_cell;
  for (const auto& s : stops) {
    by_cell[hexgrid::latlng_to_cell(s.location, resolution)].push_back(s.service_time_s);
  }
  std::vector<CellAggregate> out;
  out.reserve(by_cell.size());
  for (auto& [cell, times] : by_cell) {
    if (times.size() < std::max<std::size_t>(min_stops, 1)) continue;
    std::sort(times.begin(), times.end());
    out.push_back(CellAggregate{cell, times.size(), mean_of_sorted(times), median_of_sorted(times),
                                std::move(times)});
  }
  return out;
}

void write_aggregates(std::ostream& out, const std::vector<CellAggregate>& aggregates) {
  for (const auto& a : aggregates) {
    nlohmann::ordered_json rec;
    rec["cell"] = a.cell.to_string();
    rec["n_stops"] = a.n_stops;
    rec["mean_s"] = a.mean_service_time_s;
    rec["median_s"] = a.median_service_time_s;
    out << rec.dump() << '\n';
  }
  if (!out) throw IoError("write error on aggregate output");
}

CellDataset build_dataset(const std::vector<CellAggregate>& aggregates,
                          const osm::CellFeatures& cell_features) {
  if (aggregates.empty()) throw EmptyDatasetError("no cells with stops to build a dataset from");

  // Only features observed in the cells that become rows.
  std::map<std::string, std::size_t> column;
  for (const auto& a : aggregates) {
    const auto it = cell_features.find(a.cell);
    if (it == cell_features.end()) continue;
    for (const auto& [name, n] : it->second) {
      if (n != 0) column.emplace(name, 0);
    }
  }
  CellDataset ds;
  for (auto& [name, idx] : column) {
    idx = ds.feature_names.size();
    ds.feature_names.push_back(name);
  }
  for (const auto& a : aggregates) {
    if (ds.per_stop_index.count(a.cell) != 0) throw InvalidArgument("duplicate aggregate for cell " + a.cell.to_string());
    DatasetRow row{a.cell, std::vector<double>(ds.feature_names.size(), 0.0), a.mean_service_time_s};
    if (!(row.y > 0.0)) throw InvalidArgument("non-positive target for cell " + a.cell.to_string());
    const auto it = cell_features.find(a.cell);
    if (it != cell_features.end()) {
      for (const auto& [name, n] : it->second) {
        if (n != 0) row.x[column.at(name)] = static_cast<double>(n);
      }
    }
    ds.rows.push_back(std::move(row));
    ds.per_stop_index[a.cell] = a.service_times_s;
  }
  return ds;
}

}  // namespace microregion::delivery
