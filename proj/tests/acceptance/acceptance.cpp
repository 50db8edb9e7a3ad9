// Acceptance checks. Run with --criterion N (1-8); prints one PASS/FAIL line.
// Exit status: 0 pass, 1 fail, 77 not applicable.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cluster_oracle.hpp"
#include "microregion/analytics.hpp"
#include "microregion/boost.hpp"
#include "microregion/cluster.hpp"
#include "microregion/hexgrid.hpp"
#include "test_support.hpp"

namespace {
#include "tdist_oracle_data.inc"
}

using namespace microregion;
namespace ts = testing_support;
using Json = nlohmann::json;

namespace {

// Pinned tolerances and budgets.
constexpr double kFdRelTol = 1e-5;
constexpr double kFdStep = 1e-6;
constexpr double kNatGradMuRelTol = 1e-14;
constexpr double kC1Seconds = 1.0;
constexpr double kC2Seconds = 10.0;
constexpr double kMinR2 = 0.8;
constexpr double kMinDriverMass = 0.9;
constexpr double kC3Seconds = 60.0;
constexpr double kC4Seconds = 5.0;
constexpr double kPTol = 1e-9;
constexpr double kMinInsideFraction = 0.999;
constexpr double kEdgeTargetM = 174.4;
constexpr double kEdgeRelTol = 0.10;
constexpr double kGoldenRelTol = 1e-9;
constexpr double kC7Seconds = 10.0;
constexpr int kNotApplicable = 77;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? " ok" : " FAILED");
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> zd(1.0, 8.0), md(1.0, 8.0), ld(-2.0, 1.5);
  double worst_fd = 0.0;
  bool closed_form = true;
  bool preconditioned = true;
  for (int i = 0; i < 1000; ++i) {
    const double z = zd(rng), mu = md(rng), ls = ld(rng);
    const boosting::DistParams t{mu, ls};
    const auto g = boosting::nll_gradient(z, t);
    const double fd_mu = (boosting::nll(z, {mu + kFdStep, ls}) - boosting::nll(z, {mu - kFdStep, ls})) / (2 * kFdStep);
    const double fd_ls = (boosting::nll(z, {mu, ls + kFdStep}) - boosting::nll(z, {mu, ls - kFdStep})) / (2 * kFdStep);
    worst_fd = std::max(worst_fd, std::fabs(g.mu - fd_mu) / std::max(std::fabs(fd_mu), 1e-3));
    worst_fd = std::max(worst_fd, std::fabs(g.log_sigma - fd_ls) / std::max(std::fabs(fd_ls), 1e-3));

    const auto ng = boosting::natural_gradient(z, t);
    const double r = (z - mu) / std::exp(ls);
    closed_form = closed_form && ng.mu == mu - z && ng.log_sigma == 0.5 * (1.0 - r * r);
    const auto fi = boosting::fisher_information(t);
    preconditioned = preconditioned && same_bits(ng.log_sigma, g.log_sigma / fi.ls_ls) &&
                     std::fabs(ng.mu - g.mu / fi.mu_mu) <= kNatGradMuRelTol * std::max(std::fabs(ng.mu), 1e-300);
  }
  const double secs = seconds_since(t0);
  o.require(worst_fd <= kFdRelTol, "max FD rel err " + fmt(worst_fd, 3));
  o.require(closed_form, "natural gradient closed form");
  o.require(preconditioned, "natural gradient = F^-1 grad");
  o.require(secs < kC1Seconds, "time " + fmt(secs, 3) + " s");
}

struct Synthetic {
  boosting::FeatureMatrix x;
  std::vector<double> y;
  std::vector<std::string> names;
};

// z = piecewise function of f0, f1, f2 plus N(0, noise); other columns are
// uninformative counts.
Synthetic make_synthetic(std::size_t n, std::size_t p, double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> counts(0, 9);
  std::normal_distribution<double> eps(0.0, noise);
  Synthetic s{boosting::FeatureMatrix(n, p), {}, {}};
  for (std::size_t c = 0; c < p; ++c) s.names.push_back("f" + std::to_string(c));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) s.x(r, c) = counts(rng);
    double z = 4.5;
    z += s.x(r, 0) > 4 ? 0.8 : -0.3;
    z += s.x(r, 1) > 6 ? 0.6 : 0.0;
    z += s.x(r, 2) < 3 ? -0.5 : 0.2;
    s.y.push_back(std::exp(z + eps(rng)));
  }
  return s;
}

void criterion2(Outcome& o) {
  const auto t0 = Clock::now();
  const auto s = make_synthetic(500, 10, 0.3, 2);
  boosting::FitConfig cfg;
  cfg.n_stages = 200;
  boosting::FitTrace trace;
  const auto m = boosting::fit(s.x, s.y, s.names, cfg, &trace);
  const double secs = seconds_since(t0);
  std::size_t increases = 0;
  for (std::size_t i = 1; i < trace.total_nll.size(); ++i) increases += trace.total_nll[i] > trace.total_nll[i - 1];
  o.require(m.stages.size() == 200 && !trace.stopped_early, std::to_string(m.stages.size()) + " stages");
  o.require(increases == 0, "NLL " + fmt(trace.total_nll.front()) + " -> " + fmt(trace.total_nll.back()) + ", " +
                                std::to_string(increases) + " increases");
  o.require(secs < kC2Seconds, "time " + fmt(secs, 3) + " s");
}

void criterion3(Outcome& o) {
  const auto t0 = Clock::now();
  const auto s = make_synthetic(2000, 30, 0.3, 3);
  const boosting::FitConfig cfg;
  const auto rep = analytics::cross_validate(s.x, s.y, s.names, cfg, 5, 3);
  const auto model = boosting::fit(s.x, s.y, s.names, cfg);
  double drivers = 0.0;
  for (const auto& [name, w] : boosting::feature_importance(model)) {
    if (name == "f0" || name == "f1" || name == "f2") drivers += w;
  }
  const double secs = seconds_since(t0);
  const double r2 = rep.r2.mean.value_or(-INFINITY);
  o.require(r2 >= kMinR2, "mean CV R2 " + fmt(r2, 4));
  o.require(drivers >= kMinDriverMass, "driver importance " + fmt(drivers, 4));
  o.require(secs < kC3Seconds, "time " + fmt(secs, 3) + " s");
}

void criterion4(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> counts(0, 6);
  std::uniform_real_distribution<double> jitter(0.0, 0.01);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t dim = 2 + rng() % 6;
    std::vector<std::vector<double>> v(n, std::vector<double>(dim));
    for (auto& row : v) {
      do {
        for (auto& x : row) x = counts(rng) + jitter(rng);
      } while (std::all_of(row.begin(), row.end(), [](double x) { return x == 0.0; }));
    }
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      ++checked;
      mismatches += cluster::agglomerate(v, k).labels != ts::naive_complete_linkage(v, k);
    }
  }
  const double secs = seconds_since(t0);
  o.require(mismatches == 0, std::to_string(checked) + " partitions, " + std::to_string(mismatches) + " mismatches");
  o.require(secs < kC4Seconds, "time " + fmt(secs, 3) + " s");
}

void criterion5(Outcome& o) {
  double worst = 0.0;
  for (const auto& c : kTailCases) {
    for (const double t : {c.t, -c.t}) {
      worst = std::max(worst, std::fabs(analytics::student_t_two_sided_p(t, c.df) - c.p_two_sided));
    }
  }
  o.require(worst <= kPTol, std::to_string(std::size(kTailCases)) + " quadrature cases, max abs err " + fmt(worst, 3));
  const std::vector<double> a = {88.0, 95.5, 101.25, 140.0, 77.0};
  const auto same = analytics::t_test_pooled(a, a);
  o.require(same.t == 0.0 && same.p_two_sided == 1.0, "identical samples t=" + fmt(same.t) + " p=" + fmt(same.p_two_sided));
}

void criterion6(Outcome& o) {
  // Greater Boston.
  const double lat0 = 42.20, lat1 = 42.45, lng0 = -71.20, lng1 = -70.95;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> lat(lat0, lat1), lng(lng0, lng1);
  std::vector<GeoPoint> pts;
  for (int i = 0; i < 10000; ++i) pts.emplace_back(lat(rng), lng(rng));
  std::vector<hexgrid::CellId> first;
  for (const auto& p : pts) first.push_back(hexgrid::latlng_to_cell(p, 9));
  std::size_t same = 0;
  std::size_t inside = 0;
  std::set<hexgrid::CellId> cells;
  for (std::size_t i = pts.size(); i-- > 0;) {
    const auto again = hexgrid::latlng_to_cell(pts[i], 9);
    same += again == first[i];
    inside += hexgrid::cell_contains(again, pts[i]);
    cells.insert(again);
  }
  double edge = 0.0;
  for (const auto c : cells) edge += hexgrid::mean_edge_length_m(c);
  edge /= static_cast<double>(cells.size());
  const double inside_frac = static_cast<double>(inside) / static_cast<double>(pts.size());
  o.require(same == pts.size(), "deterministic " + std::to_string(same) + "/" + std::to_string(pts.size()));
  o.require(inside_frac >= kMinInsideFraction, "inside boundary " + fmt(inside_frac * 100.0, 6) + "%");
  o.require(std::fabs(edge - kEdgeTargetM) <= kEdgeRelTol * kEdgeTargetM,
            "mean edge " + fmt(edge, 5) + " m over " + std::to_string(cells.size()) + " cells vs " +
                fmt(kEdgeTargetM, 4) + " m +-10%");
}

int run_cli_checked(const std::vector<std::string>& args, const std::filesystem::path& dir, Outcome& o) {
  const auto r = ts::run_cli(args, dir);
  if (r.exit_code != 0) o.require(false, args.back() + " (" + r.output + ")");
  return r.exit_code;
}

void criterion7(Outcome& o) {
  ts::TempDir dir;
  const auto golden = ts::fixture("toy_city/golden");
  auto cfg = ts::read_json(ts::fixture("toy_city/config.json"));
  cfg["whitelist_path"] = (std::filesystem::path(MICROREGION_DATA_DIR) / "default_whitelist.txt").string();
  cfg["paths"] = {{"osm", ts::fixture("toy_city/city.osm").string()},
                  {"stops", ts::fixture("toy_city/stops.csv").string()},
                  {"features", "features.jsonl"},
                  {"aggregates", "aggregates.jsonl"},
                  {"model", "model.json"},
                  {"cv_report", "train_report.json"},
                  {"cluster_report", "cluster_report.json"},
                  {"assignment", "assignment.jsonl"},
                  {"geojson", "cells.geojson"}};
  ts::write_text(dir / "config.json", cfg.dump(2));

  const auto t0 = Clock::now();
  for (const char* c : {"ingest-osm", "ingest-stops", "train", "cluster", "export"}) {
    if (run_cli_checked({"-q", "-c", (dir / "config.json").string(), c}, dir.path(), o) != 0) return;
  }
  const double secs = seconds_since(t0);

  std::vector<std::string> diffs;
  std::size_t compared = 0;
  for (const char* f : {"features.jsonl", "aggregates.jsonl", "assignment.jsonl"}) {
    const auto a = ts::read_jsonl(dir / f);
    const auto g = ts::read_jsonl(golden / f);
    ts::json_diff(Json(a), Json(g), kGoldenRelTol, f, diffs);
    ++compared;
  }
  auto train_golden = ts::read_json(golden / "train_report.json");
  const auto scalings = train_golden["final_model"]["scalings"];
  train_golden["final_model"].erase("scalings");
  ts::json_diff(ts::read_json(dir / "train_report.json"), train_golden, kGoldenRelTol, "train_report", diffs);
  Json model_scalings = Json::array();
  const auto model = ts::read_json(dir / "model.json");
  for (const auto& st : model["stages"]) model_scalings.push_back(st["scaling"]);
  ts::json_diff(model_scalings, scalings, kGoldenRelTol, "model.scalings", diffs);
  for (const char* f : {"cluster_report.json", "cells.geojson"}) {
    ts::json_diff(ts::read_json(dir / f), ts::read_json(golden / f), kGoldenRelTol, f, diffs);
  }
  compared += 4;
  std::string first_diffs;
  for (std::size_t i = 0; i < std::min<std::size_t>(diffs.size(), 3); ++i) first_diffs += " [" + diffs[i] + "]";
  o.require(diffs.empty(), std::to_string(compared) + " artifacts vs golden, " + std::to_string(diffs.size()) +
                               " differences" + first_diffs);
  const auto problems = ts::validate_geojson(ts::read_json(dir / "cells.geojson"));
  o.require(problems.empty(), "GeoJSON valid" + (problems.empty() ? std::string() : " [" + problems.front() + "]"));
  o.require(secs < kC7Seconds, "time " + fmt(secs, 3) + " s");
}

// Runs only when a full delivery dataset is supplied: MICROREGION_LMRRC_DIR
// holding route_data.json and package_data.json, and MICROREGION_LMRRC_OSM
// pointing at an OSM XML extract covering it.
int criterion8(Outcome& o) {
  const char* data = std::getenv("MICROREGION_LMRRC_DIR");
  const char* osm = std::getenv("MICROREGION_LMRRC_OSM");
  if (data == nullptr || osm == nullptr) {
    o.detail << "not applicable: set MICROREGION_LMRRC_DIR and MICROREGION_LMRRC_OSM to run";
    return kNotApplicable;
  }
  const std::filesystem::path root(data);
  const std::filesystem::path out = root / "microregion_out";
  std::filesystem::create_directories(out);
  Json cfg = {{"paths",
               {{"osm", osm},
                {"stops", (out / "stops.csv").string()},
                {"features", (out / "features.jsonl").string()},
                {"aggregates", (out / "aggregates.jsonl").string()},
                {"model", (out / "model.json").string()},
                {"cv_report", (out / "train_report.json").string()},
                {"cluster_report", (out / "cluster_report.json").string()},
                {"assignment", (out / "assignment.jsonl").string()},
                {"geojson", (out / "cells.geojson").string()}}}};
  ts::write_text(out / "config.json", cfg.dump(2));
  const auto config = (out / "config.json").string();
  if (run_cli_checked({"-q", "-c", config, "convert-lmrrc", "--routes", (root / "route_data.json").string(),
                       "--packages", (root / "package_data.json").string()},
                      out, o) != 0) {
    return 1;
  }
  for (const char* c : {"ingest-osm", "ingest-stops", "train", "cluster", "export"}) {
    if (run_cli_checked({"-q", "-c", config, c}, out, o) != 0) return 1;
  }
  const auto train = ts::read_json(out / "train_report.json");
  const auto clusters = ts::read_json(out / "cluster_report.json");
  const auto& ls = train["cv"]["log_space"];
  o.detail << "pipeline complete; cells " << train["dataset"]["n_cells"] << ", stops " << train["dataset"]["n_stops"]
           << ", NLL " << ls["mean_nll"] << " (SD " << ls["sd_nll"] << "), R2 " << ls["mean_r2"] << " (SD "
           << ls["sd_r2"] << ")";
  for (const auto& c : clusters["clusters"]) o.detail << ", cluster " << c["label"] << " median " << c["median_service_time_s"] << " s";
  if (!clusters["t_test"].is_null()) {
    o.detail << ", t(" << clusters["t_test"]["df"] << ")=" << clusters["t_test"]["t"];
  }
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks");
  int criterion = 0;
  app.add_option("--criterion", criterion, "Criterion number")->required()->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  Outcome o;
  int status = 0;
  try {
    switch (criterion) {
      case 1: criterion1(o); break;
      case 2: criterion2(o); break;
      case 3: criterion3(o); break;
      case 4: criterion4(o); break;
      case 5: criterion5(o); break;
      case 6: criterion6(o); break;
      case 7: criterion7(o); break;
      case 8: status = criterion8(o); break;
    }
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  if (status == kNotApplicable) {
    std::cout << "criterion " << criterion << ": SKIP (" << o.detail.str() << ")\n";
    return kNotApplicable;
  }
  std::cout << "criterion " << criterion << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail.str() << ")\n";
  return o.pass ? 0 : 1;
}
