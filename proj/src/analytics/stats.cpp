#include <cmath>
#include <limits>

#include "microregion/analytics.hpp"
#include "microregion/error.hpp"

namespace microregion::analytics {
namespace {

constexpr int kMaxIterations = 100000;
constexpr double kTolerance = 1e-12;
constexpr double kTiny = 1e-300;

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double dm = m;
    const double m2 = 2.0 * dm;
    double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kTolerance) return h;
  }
  throw NumericError("incomplete beta continued fraction did not converge");
}

// x and y = 1 - x are passed separately, with their logs, so callers that know
// them in closed form keep full precision near either end.
double ibeta(double a, double b, double x, double y, double log_x, double log_y) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("incomplete beta needs a, b > 0");
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double front = std::exp(a * log_x + b * log_y - log_beta);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, y) / b;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (std::isnan(x) || x < 0.0 || x > 1.0) throw InvalidArgument("incomplete beta needs x in [0, 1]");
  const double y = 1.0 - x;
  return ibeta(a, b, x, y, std::log(x), std::log(y));
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("degrees of freedom must be positive");
  if (std::isnan(t)) throw NumericError("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  // p = I_x(df/2, 1/2) with x = df / (df + t^2).
  const double q = t * t / df;
  const double x = 1.0 / (1.0 + q);
  const double y = q / (1.0 + q);
  const double log_x = -std::log1p(q);
  const double log_y = q > 0.0 ? std::log(q) + log_x : -std::numeric_limits<double>::infinity();
  const double p = ibeta(df / 2.0, 0.5, x, y, log_x, log_y);
  return std::min(1.0, std::max(0.0, p));
}

double student_t_cdf(double t, double df) {
  const double half_tail = student_t_two_sided_p(t, df) / 2.0;
  return t < 0.0 ? half_tail : 1.0 - half_tail;
}

TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw InvalidArgument("t test needs at least two values per sample");
  auto moments = [](std::span<const double> v, double& mean, double& ss) {
    double sum = 0.0;
    for (const double x : v) {
      if (!std::isfinite(x)) throw NumericError("non-finite value in t test sample");
      sum += x;
    }
    mean = sum / static_cast<double>(v.size());
    ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
  };
  TTestResult r;
  double ss1 = 0.0;
  double ss2 = 0.0;
  moments(a, r.mean1, ss1);
  moments(b, r.mean2, ss2);
  r.n1 = a.size();
  r.n2 = b.size();
  r.df = static_cast<long long>(r.n1 + r.n2 - 2);
  const double pooled = (ss1 + ss2) / static_cast<double>(r.df);
  if (!(pooled > 0.0)) throw DegenerateError("pooled variance is zero; t statistic undefined");
  const double se = std::sqrt(pooled * (1.0 / static_cast<double>(r.n1) + 1.0 / static_cast<double>(r.n2)));
  r.t = (r.mean1 - r.mean2) / se;
  r.p_two_sided = student_t_two_sided_p(r.t, static_cast<double>(r.df));
  return r;
}

double r_squared(std::span<const double> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size()) throw InvalidArgument("r_squared inputs differ in length");
  if (y_true.size() < 2) throw InvalidArgument("r_squared needs at least two values");
  double sum = 0.0;
  for (const double v : y_true) sum += v;
  const double mean = sum / static_cast<double>(y_true.size());
  double sse = 0.0;
  double sst = 0.0;
  bool constant = true;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double e = y_true[i] - y_pred[i];
    const double d = y_true[i] - mean;
    sse += e * e;
    sst += d * d;
    constant = constant && y_true[i] == y_true[0];
  }
  if (constant || !(sst > 0.0)) throw UndefinedMetricError("R^2 is undefined for a constant target");
  return 1.0 - sse / sst;
}

Summary summarize(const std::vector<std::optional<double>>& values) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return {};
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const auto& v : values) {
    if (v) ss += (*v - mean) * (*v - mean);
  }
  return {mean, std::sqrt(ss / static_cast<double>(n))};
}

}  // namespace microregion::analytics
