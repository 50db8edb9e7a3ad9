#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>

#include "microregion/analytics.hpp"
#include "microregion/delivery.hpp"
#include "microregion/error.hpp"

namespace microregion::analytics {

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::next() { return engine_(); }

std::uint64_t SeededRng::bounded(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("bounded draw needs a positive bound");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::vector<std::size_t> FoldPlan::test_rows(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_rows(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k-fold needs k >= 2");
  if (k > n) {
    throw InvalidArgument("k-fold needs k <= n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SeededRng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.bounded(i + 1))]);
  }
  FoldPlan plan;
  plan.k = k;
  plan.assignments.assign(n, 0);
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) plan.assignments[perm[pos++]] = f;
  }
  return plan;
}

namespace {

std::optional<double> maybe_r2(const std::vector<double>& truth, const std::vector<double>& pred) {
  if (truth.size() < 2) return std::nullopt;
  try {
    return r_squared(truth, pred);
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

FoldResult run_fold(const boosting::FeatureMatrix& x, std::span<const double> y,
                    const std::vector<std::string>& names, const boosting::FitConfig& cfg,
                    const FoldPlan& plan, std::size_t fold) {
  const auto train = plan.train_rows(fold);
  const auto test = plan.test_rows(fold);
  std::vector<double> y_train;
  for (const auto r : train) y_train.push_back(y[r]);
  const auto model = boosting::fit(x.select_rows(train), y_train, names, cfg);

  FoldResult res;
  res.n_train = train.size();
  res.n_test = test.size();
  std::vector<double> z_true;
  std::vector<double> mu_pred;
  std::vector<double> y_true;
  std::vector<double> y_mean;
  double nll_sum = 0.0;
  double nll_orig_sum = 0.0;
  for (const auto r : test) {
    const double z = std::log(y[r]);
    const auto p = boosting::predict(model, x.row(r));
    const double v = boosting::nll(z, p);
    nll_sum += v;
    nll_orig_sum += v + z;
    z_true.push_back(z);
    mu_pred.push_back(p.mu);
    y_true.push_back(y[r]);
    const double s = p.sigma();
    y_mean.push_back(std::exp(p.mu + s * s / 2.0));
  }
  const double n = static_cast<double>(test.size());
  res.nll = nll_sum / n;
  res.nll_original = nll_orig_sum / n;
  res.r2 = maybe_r2(z_true, mu_pred);
  res.r2_original = maybe_r2(y_true, y_mean);
  return res;
}

}  // namespace

CVReport cross_validate(const boosting::FeatureMatrix& x, std::span<const double> y,
                        const std::vector<std::string>& feature_names,
                        const boosting::FitConfig& cfg, std::size_t k, std::uint64_t seed) {
  if (y.size() != x.rows()) throw InvalidArgument("target length differs from row count");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i]) || !(y[i] > 0.0)) {
      throw InvalidArgument("target " + std::to_string(i) + " must be positive and finite");
    }
  }
  const auto plan = kfold_split(x.rows(), k, seed);
  CVReport report;
  report.k = k;
  for (std::size_t f = 0; f < k; ++f) {
    const std::string where = "fold " + std::to_string(f) + ": ";
    try {
      report.per_fold.push_back(run_fold(x, y, feature_names, cfg, plan, f));
    } catch (const DegenerateError& e) {
      throw DegenerateError(where + e.what());
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(where + e.what());
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    } catch (const NumericError& e) {
      throw NumericError(where + e.what());
    }
  }
  std::vector<std::optional<double>> nll;
  std::vector<std::optional<double>> r2;
  std::vector<std::optional<double>> nll_o;
  std::vector<std::optional<double>> r2_o;
  for (const auto& fr : report.per_fold) {
    nll.emplace_back(fr.nll);
    r2.push_back(fr.r2);
    nll_o.emplace_back(fr.nll_original);
    r2_o.push_back(fr.r2_original);
  }
  report.nll = summarize(nll);
  report.r2 = summarize(r2);
  report.nll_original = summarize(nll_o);
  report.r2_original = summarize(r2_o);
  return report;
}

CVReport cross_validate(const delivery::CellDataset& data, const boosting::FitConfig& cfg,
                        std::size_t k, std::uint64_t seed) {
  if (data.rows.empty()) throw EmptyDatasetError("cannot cross-validate an empty dataset");
  boosting::FeatureMatrix x(data.n_rows(), data.n_features());
  std::vector<double> y(data.n_rows());
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    for (std::size_t c = 0; c < data.n_features(); ++c) x(r, c) = data.rows[r].x.at(c);
    y[r] = data.rows[r].y;
  }
  return cross_validate(x, y, data.feature_names, cfg, k, seed);
}

nlohmann::ordered_json cv_report_to_json(const CVReport& report) {
  using Json = nlohmann::ordered_json;
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["k"] = report.k;
  Json folds = Json::array();
  for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
    const auto& fr = report.per_fold[f];
    Json jf;
    jf["fold"] = f;
    jf["n_train"] = fr.n_train;
    jf["n_test"] = fr.n_test;
    jf["nll"] = fr.nll;
    jf["r2"] = opt(fr.r2);
    jf["nll_original"] = fr.nll_original;
    jf["r2_original"] = opt(fr.r2_original);
    folds.push_back(std::move(jf));
  }
  j["folds"] = std::move(folds);
  j["log_space"] = {{"mean_nll", opt(report.nll.mean)},
                    {"sd_nll", opt(report.nll.sd)},
                    {"mean_r2", opt(report.r2.mean)},
                    {"sd_r2", opt(report.r2.sd)}};
  j["original_space"] = {{"mean_nll", opt(report.nll_original.mean)},
                         {"sd_nll", opt(report.nll_original.sd)},
                         {"mean_r2", opt(report.r2_original.mean)},
                         {"sd_r2", opt(report.r2_original.sd)}};
  return j;
}

void write_cv_report(std::ostream& out, const CVReport& report) {
  out << cv_report_to_json(report).dump(1) << '\n';
  if (!out) throw IoError("write error on CV report");
}

}  // namespace microregion::analytics
