#include <algorithm>
#include <cmath>
#include <map>

#include "microregion/boost.hpp"
#include "microregion/delivery.hpp"
#include "microregion/error.hpp"
#include "microregion/kernels.hpp"
#include "tree.hpp"

namespace microregion::boosting {
namespace {

constexpr double kMinSigma = 1e-6;
constexpr int kGridSteps = 10;     // rho in {1, 1/2, ..., 2^-10}
constexpr int kExtendedSteps = 60; // fallback halvings when the grid never improves

// Holds the per-row parameter vectors and scratch space for the line search.
struct TrainState {
  std::vector<double> z;
  std::vector<double> mu;
  std::vector<double> ls;
  std::vector<double> sigma;
  std::vector<double> var;
  std::vector<double> cand_mu;
  std::vector<double> cand_ls;

  explicit TrainState(std::vector<double> zs)
      : z(std::move(zs)),
        mu(z.size()),
        ls(z.size()),
        sigma(z.size()),
        var(z.size()),
        cand_mu(z.size()),
        cand_ls(z.size()) {}

  double total_nll(const std::vector<double>& m, const std::vector<double>& l) {
    for (std::size_t i = 0; i < l.size(); ++i) var[i] = std::exp(2.0 * l[i]);
    return kernels::nll_sum(z, m, l, var);
  }

  double candidate_nll(double step, const std::vector<double>& t_mu,
                       const std::vector<double>& t_ls) {
    cand_mu = mu;
    cand_ls = ls;
    kernels::axpy(-step, t_mu, cand_mu);
    kernels::axpy(-step, t_ls, cand_ls);
    return total_nll(cand_mu, cand_ls);
  }
};

std::vector<double> log_targets(std::span<const double> y) {
  std::vector<double> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i]) || !(y[i] > 0.0)) {
      throw InvalidArgument("target " + std::to_string(i) + " must be positive and finite");
    }
    z[i] = std::log(y[i]);
  }
  return z;
}

void tree_outputs(const RegressionTree& tree, const FeatureMatrix& x, std::vector<double>& out) {
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = tree.predict(x.row(r));
}

}  // namespace

DistParams marginal_fit(std::span<const double> z) {
  if (z.empty()) throw EmptyDatasetError("cannot fit a distribution to no values");
  double sum = 0.0;
  for (const double v : z) sum += v;
  const double n = static_cast<double>(z.size());
  const double mu = sum / n;
  double ss = 0.0;
  for (const double v : z) ss += (v - mu) * (v - mu);
  const double sd = std::sqrt(ss / n);
  return {mu, std::log(std::max(sd, kMinSigma))};
}

BoostModel fit(const FeatureMatrix& x, std::span<const double> y,
               std::vector<std::string> feature_names, const FitConfig& cfg, FitTrace* trace) {
  cfg.validate();
  if (y.empty()) throw EmptyDatasetError("cannot fit on an empty dataset");
  if (y.size() != x.rows()) throw InvalidArgument("target length differs from row count");
  if (feature_names.size() != x.cols()) throw InvalidArgument("feature name count differs from column count");
  TrainState st(log_targets(y));
  if (y.size() == 1) throw DegenerateError("cannot estimate a spread from a single row");

  BoostModel model;
  model.init = marginal_fit(st.z);
  model.learning_rate = cfg.learning_rate;
  model.feature_names = std::move(feature_names);
  std::fill(st.mu.begin(), st.mu.end(), model.init.mu);
  std::fill(st.ls.begin(), st.ls.end(), model.init.log_sigma);

  const std::size_t n = st.z.size();
  std::vector<double> g_mu(n);
  std::vector<double> g_ls(n);
  std::vector<double> t_mu(n);
  std::vector<double> t_ls(n);

  double current = st.total_nll(st.mu, st.ls);
  if (trace) {
    *trace = FitTrace{};
    trace->total_nll.push_back(current);
  }

  detail::TreeBuilder builder(x, cfg);
  for (int m = 0; m < cfg.n_stages; ++m) {
    for (std::size_t i = 0; i < n; ++i) st.sigma[i] = std::exp(st.ls[i]);
    kernels::natural_gradient(st.z, st.mu, st.sigma, g_mu, g_ls);

    Stage stage;
    stage.tree_mu = builder.build(g_mu);
    stage.tree_log_sigma = builder.build(g_ls);
    tree_outputs(stage.tree_mu, x, t_mu);
    tree_outputs(stage.tree_log_sigma, x, t_ls);

    // Grid search; ties keep the larger step.
    double best_rho = 0.0;
    double best_nll = 0.0;
    double rho = 1.0;
    for (int k = 0; k <= kGridSteps; ++k, rho /= 2.0) {
      const double v = st.candidate_nll(cfg.learning_rate * rho, t_mu, t_ls);
      if (best_rho == 0.0 || v < best_nll) {
        best_rho = rho;
        best_nll = v;
      }
    }
    // Keep halving if no grid step avoids an increase.
    if (!(best_nll <= current)) {
      best_rho = 0.0;
      for (int k = 0; k < kExtendedSteps; ++k, rho /= 2.0) {
        const double v = st.candidate_nll(cfg.learning_rate * rho, t_mu, t_ls);
        if (v <= current) {
          best_rho = rho;
          best_nll = v;
          break;
        }
      }
      if (best_rho == 0.0) {
        if (trace) trace->stopped_early = true;
        break;
      }
      if (trace) ++trace->extended_line_searches;
    }

    stage.scaling = best_rho;
    const double step = model.learning_rate * stage.scaling;
    kernels::axpy(-step, t_mu, st.mu);
    kernels::axpy(-step, t_ls, st.ls);
    current = st.total_nll(st.mu, st.ls);
    model.stages.push_back(std::move(stage));
    if (trace) trace->total_nll.push_back(current);
  }

  if (trace) {
    trace->train_params.resize(n);
    for (std::size_t i = 0; i < n; ++i) trace->train_params[i] = {st.mu[i], st.ls[i]};
  }
  return model;
}

BoostModel fit(const delivery::CellDataset& data, const FitConfig& cfg, FitTrace* trace) {
  if (data.rows.empty()) throw EmptyDatasetError("cannot fit on an empty dataset");
  FeatureMatrix x(data.n_rows(), data.n_features());
  std::vector<double> y(data.n_rows());
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    const auto& row = data.rows[r];
    if (row.x.size() != data.n_features()) throw InvalidArgument("dataset row length differs from feature count");
    for (std::size_t c = 0; c < row.x.size(); ++c) x(r, c) = row.x[c];
    y[r] = row.y;
  }
  return fit(x, y, data.feature_names, cfg, trace);
}

DistParams predict(const BoostModel& model, std::span<const double> x) {
  if (x.size() != model.feature_names.size()) {
    throw InvalidArgument("feature vector has " + std::to_string(x.size()) + " entries, model expects " +
                          std::to_string(model.feature_names.size()));
  }
  // Same operation sequence as the training update, so training rows reproduce exactly.
  DistParams p = model.init;
  for (const auto& s : model.stages) {
    const double step = model.learning_rate * s.scaling;
    const double a = -step;
    p.mu = p.mu + a * s.tree_mu.predict(x);
    p.log_sigma = p.log_sigma + a * s.tree_log_sigma.predict(x);
  }
  return p;
}

std::vector<std::pair<std::string, double>> feature_importance(const BoostModel& model) {
  std::vector<double> gain(model.feature_names.size(), 0.0);
  auto add = [&](const RegressionTree& t) {
    for (const auto& node : t.nodes) {
      if (node.feature < 0) continue;
      if (static_cast<std::size_t>(node.feature) >= gain.size()) {
        throw InvalidArgument("tree references an unknown feature");
      }
      gain[static_cast<std::size_t>(node.feature)] += node.gain;
    }
  };
  for (const auto& s : model.stages) {
    add(s.tree_mu);
    add(s.tree_log_sigma);
  }
  double total = 0.0;
  for (const double g : gain) total += g;
  std::vector<std::pair<std::string, double>> out;
  if (!(total > 0.0)) return out;
  for (std::size_t f = 0; f < gain.size(); ++f) {
    if (gain[f] > 0.0) out.emplace_back(model.feature_names[f], gain[f] / total);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second || (a.second == b.second && a.first < b.first);
  });
  return out;
}

}  // namespace microregion::boosting
