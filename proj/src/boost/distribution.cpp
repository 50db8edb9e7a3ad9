#include <cmath>

#include "microregion/boost.hpp"
#include "microregion/error.hpp"

namespace microregion::boosting {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

void require_finite(double z, const DistParams& t) {
  if (!std::isfinite(z) || !std::isfinite(t.mu) || !std::isfinite(t.log_sigma)) {
    throw NumericError("non-finite input to the Normal scoring rule");
  }
}

}  // namespace

double DistParams::sigma() const { return std::exp(log_sigma); }

double nll(double z, const DistParams& theta) {
  require_finite(z, theta);
  const double d = z - theta.mu;
  const double var = std::exp(2.0 * theta.log_sigma);
  return (kHalfLog2Pi + theta.log_sigma) + (d * d) / (2.0 * var);
}

Gradient nll_gradient(double z, const DistParams& theta) {
  require_finite(z, theta);
  const double sigma = theta.sigma();
  const double r = (z - theta.mu) / sigma;
  return {(theta.mu - z) / (sigma * sigma), 1.0 - r * r};
}

FisherDiag fisher_information(const DistParams& theta) {
  const double sigma = theta.sigma();
  return {1.0 / (sigma * sigma), 2.0};
}

Gradient natural_gradient(double z, const DistParams& theta) {
  require_finite(z, theta);
  const double r = (z - theta.mu) / theta.sigma();
  return {theta.mu - z, (1.0 - r * r) * 0.5};
}

void FitConfig::validate() const {
  if (n_stages < 0) throw InvalidArgument("n_stages must be >= 0");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning_rate must be positive");
  }
  if (max_depth < 1) throw InvalidArgument("max_depth must be >= 1");
  if (min_samples_leaf < 1) throw InvalidArgument("min_samples_leaf must be >= 1");
}

}  // namespace microregion::boosting
