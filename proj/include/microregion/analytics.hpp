#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "microregion/boost.hpp"

namespace microregion::delivery {
struct CellDataset;
}

namespace microregion::analytics {

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister draw,
/// using multiply-shift with rejection (Lemire).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct FoldPlan {
  std::size_t k = 0;
  /// Row index -> fold index in [0, k).
  std::vector<std::size_t> assignments;

  std::vector<std::size_t> test_rows(std::size_t fold) const;
  std::vector<std::size_t> train_rows(std::size_t fold) const;
};

/// Fisher-Yates shuffle of 0..n-1, then contiguous blocks; the first n % k
/// folds get one extra row. Throws InvalidArgument unless 2 <= k <= n.
FoldPlan kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

/// 1 - SSE/SST. Throws UndefinedMetricError for constant y_true,
/// InvalidArgument for mismatched or too-short inputs.
double r_squared(std::span<const double> y_true, std::span<const double> y_pred);

struct FoldResult {
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  /// Mean NLL of z = ln y.
  double nll = 0.0;
  /// Log-space R^2 of z against predicted mu; empty when the held-out z is constant or a singleton.
  std::optional<double> r2;
  /// Mean NLL of y under the log-normal (nll + z).
  double nll_original = 0.0;
  /// R^2 of y against the log-normal mean exp(mu + sigma^2 / 2).
  std::optional<double> r2_original;
};

struct Summary {
  std::optional<double> mean;
  std::optional<double> sd;
};

/// Population mean and SD of the defined values.
Summary summarize(const std::vector<std::optional<double>>& values);

struct CVReport {
  std::size_t k = 0;
  std::vector<FoldResult> per_fold;
  Summary nll;
  Summary r2;
  Summary nll_original;
  Summary r2_original;
};

CVReport cross_validate(const boosting::FeatureMatrix& x, std::span<const double> y,
                        const std::vector<std::string>& feature_names,
                        const boosting::FitConfig& cfg, std::size_t k, std::uint64_t seed);
CVReport cross_validate(const delivery::CellDataset& data, const boosting::FitConfig& cfg,
                        std::size_t k, std::uint64_t seed);

nlohmann::ordered_json cv_report_to_json(const CVReport& report);
void write_cv_report(std::ostream& out, const CVReport& report);

struct TTestResult {
  double t = 0.0;
  long long df = 0;
  double p_two_sided = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
};

/// Student two-sample test with pooled variance. Throws DegenerateError when
/// the pooled variance is zero and InvalidArgument if either sample has fewer
/// than two values.
TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b);

/// I_x(a, b) by continued fraction. Throws NumericError if it fails to converge.
double regularized_incomplete_beta(double a, double b, double x);
/// P(T <= t) for Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);
/// P(|T| >= |t|).
double student_t_two_sided_p(double t, double df);

}  // namespace microregion::analytics
