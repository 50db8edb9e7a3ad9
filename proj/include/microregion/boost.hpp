#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace microregion::delivery {
struct CellDataset;
}

namespace microregion::boosting {

/// Normal distribution over z = ln(service time), scale held as log sigma.
struct DistParams {
  double mu = 0.0;
  double log_sigma = 0.0;

  double sigma() const;
  friend bool operator==(const DistParams&, const DistParams&) = default;
};

struct Gradient {
  double mu = 0.0;
  double log_sigma = 0.0;
};

/// Diagonal Fisher information in (mu, log_sigma) coordinates.
struct FisherDiag {
  double mu_mu = 0.0;
  double ls_ls = 0.0;
};

/// 0.5*ln(2*pi) + log_sigma + (z - mu)^2 / (2*exp(2*log_sigma)).
/// Throws NumericError on non-finite input.
double nll(double z, const DistParams& theta);
Gradient nll_gradient(double z, const DistParams& theta);
FisherDiag fisher_information(const DistParams& theta);
/// Closed form of the inverse Fisher applied to the gradient.
Gradient natural_gradient(double z, const DistParams& theta);

struct FitConfig {
  int n_stages = 500;
  double learning_rate = 0.01;
  int max_depth = 3;
  int min_samples_leaf = 1;
  std::uint64_t seed = 0;

  /// n_stages may be zero; everything else must be positive.
  void validate() const;
};

/// Dense row-major design matrix.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols);
  static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Rows selected by index, in the given order.
  FeatureMatrix select_rows(std::span<const std::size_t> idx) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct TreeNode {
  /// -1 for a leaf.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  /// Leaf prediction.
  double value = 0.0;
  /// Squared-error reduction achieved by this split.
  double gain = 0.0;
};

/// Least-squares CART tree. Rows with x[feature] <= threshold go left.
/// nodes[0] is the root.
struct RegressionTree {
  std::vector<TreeNode> nodes;
  int max_depth = 0;

  double predict(std::span<const double> x) const;
  int depth() const;
};

/// Greedy variance-reduction tree. Split ties go to the lowest feature index,
/// then the lowest threshold. `seed` is accepted for interface stability; the
/// builder uses no randomness.
RegressionTree fit_tree(const FeatureMatrix& x, std::span<const double> targets,
                        const FitConfig& cfg, std::uint64_t seed = 0);

struct Stage {
  RegressionTree tree_mu;
  RegressionTree tree_log_sigma;
  double scaling = 1.0;
};

struct BoostModel {
  DistParams init;
  double learning_rate = 0.01;
  std::vector<std::string> feature_names;
  std::vector<Stage> stages;
};

/// Per-stage record of a fit, for diagnostics and tests.
struct FitTrace {
  /// Total training NLL before any stage, then after each stage.
  std::vector<double> total_nll;
  /// Training-row parameters maintained during fitting.
  std::vector<DistParams> train_params;
  /// Stages that needed a step below the standard line-search grid.
  std::size_t extended_line_searches = 0;
  /// True if fitting ended before n_stages because no step decreased the NLL.
  bool stopped_early = false;
};

/// Fits on z = ln(y). Throws InvalidArgument for y <= 0 or non-finite values
/// and DegenerateError for a single row.
BoostModel fit(const FeatureMatrix& x, std::span<const double> y,
               std::vector<std::string> feature_names, const FitConfig& cfg,
               FitTrace* trace = nullptr);
BoostModel fit(const delivery::CellDataset& data, const FitConfig& cfg, FitTrace* trace = nullptr);

/// Marginal maximum-likelihood Normal for z (log sigma floored at ln 1e-6).
DistParams marginal_fit(std::span<const double> z);

DistParams predict(const BoostModel& model, std::span<const double> x);

/// Split gains summed per feature over every tree, normalized to 1, sorted
/// descending with ties by name. Features that never split are omitted.
std::vector<std::pair<std::string, double>> feature_importance(const BoostModel& model);

void write_model(std::ostream& out, const BoostModel& model);
BoostModel read_model(std::istream& in);
void save_model(const std::filesystem::path& path, const BoostModel& model);
BoostModel load_model(const std::filesystem::path& path);

}  // namespace microregion::boosting
