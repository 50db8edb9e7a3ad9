#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace testing_support {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(MICROREGION_FIXTURES) / rel;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    const auto base = std::filesystem::temp_directory_path();
    for (;;) {
      path_ = base / ("microregion-test-" + std::to_string(rd()));
      if (std::filesystem::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// Runs the CLI binary with stdout+stderr captured.
inline CliResult run_cli(const std::vector<std::string>& args, const std::filesystem::path& scratch) {
  std::string cmd = shell_quote(MICROREGION_CLI);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  const auto log = scratch / "cli_output.txt";
  cmd += " > " + shell_quote(log.string()) + " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = read_text(log);
  return r;
}

inline nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

inline std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<nlohmann::json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

// Walks `golden` and reports every place where `actual` differs. Numbers
// compare with a relative tolerance (absolute below magnitude 1); keys
// present only in `actual` are ignored.
inline void json_diff(const nlohmann::json& actual, const nlohmann::json& golden, double rel_tol,
                      const std::string& where, std::vector<std::string>& out) {
  if (golden.is_number() && actual.is_number()) {
    if (golden.is_number_float() || actual.is_number_float()) {
      const double a = actual.get<double>();
      const double g = golden.get<double>();
      if (!(std::fabs(a - g) <= rel_tol * std::max(1.0, std::fabs(g)))) {
        std::ostringstream s;
        s.precision(17);
        s << where << ": " << a << " vs golden " << g;
        out.push_back(s.str());
      }
    } else if (actual != golden) {
      out.push_back(where + ": " + actual.dump() + " vs golden " + golden.dump());
    }
    return;
  }
  if (golden.type() != actual.type()) {
    out.push_back(where + ": type " + actual.type_name() + " vs golden " + golden.type_name());
    return;
  }
  if (golden.is_object()) {
    for (auto it = golden.begin(); it != golden.end(); ++it) {
      if (!actual.contains(it.key())) {
        out.push_back(where + "." + it.key() + ": missing");
        continue;
      }
      json_diff(actual.at(it.key()), it.value(), rel_tol, where + "." + it.key(), out);
    }
  } else if (golden.is_array()) {
    if (golden.size() != actual.size()) {
      out.push_back(where + ": length " + std::to_string(actual.size()) + " vs golden " +
                    std::to_string(golden.size()));
      return;
    }
    for (std::size_t i = 0; i < golden.size(); ++i) {
      json_diff(actual[i], golden[i], rel_tol, where + "[" + std::to_string(i) + "]", out);
    }
  } else if (golden != actual) {
    out.push_back(where + ": " + actual.dump() + " vs golden " + golden.dump());
  }
}

// Checks a GeoJSON FeatureCollection of cell polygons: structure, closed
// linear rings of at least four positions, counter-clockwise exteriors and
// coordinates in range. Returns the problems found.
inline std::vector<std::string> validate_geojson(const nlohmann::json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
      !doc["features"].is_array()) {
    problems.push_back("not a FeatureCollection with a features array");
    return problems;
  }
  for (std::size_t i = 0; i < doc["features"].size(); ++i) {
    const auto& f = doc["features"][i];
    const std::string at = "features[" + std::to_string(i) + "]";
    if (f.value("type", "") != "Feature" || !f.contains("geometry") || !f.contains("properties") ||
        !(f["properties"].is_object() || f["properties"].is_null())) {
      problems.push_back(at + ": malformed Feature");
      continue;
    }
    const auto& g = f["geometry"];
    if (g.value("type", "") != "Polygon" || !g.contains("coordinates") || !g["coordinates"].is_array() ||
        g["coordinates"].empty()) {
      problems.push_back(at + ": geometry is not a Polygon");
      continue;
    }
    const auto& ring = g["coordinates"][0];
    if (!ring.is_array() || ring.size() < 4) {
      problems.push_back(at + ": ring has fewer than 4 positions");
      continue;
    }
    bool ok = true;
    for (const auto& pos : ring) {
      if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number() ||
          std::fabs(pos[0].get<double>()) > 180.0 || std::fabs(pos[1].get<double>()) > 90.0) {
        ok = false;
      }
    }
    if (!ok) {
      problems.push_back(at + ": bad position");
      continue;
    }
    if (ring.front() != ring.back()) problems.push_back(at + ": ring not closed");
    double area2 = 0.0;
    for (std::size_t k = 0; k + 1 < ring.size(); ++k) {
      area2 += ring[k][0].get<double>() * ring[k + 1][1].get<double>() -
               ring[k + 1][0].get<double>() * ring[k][1].get<double>();
    }
    if (!(area2 > 0.0)) problems.push_back(at + ": exterior ring is not counter-clockwise");
  }
  return problems;
}

}  // namespace testing_support
