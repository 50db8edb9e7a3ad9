#pragma once

#include <vector>

#include "microregion/boost.hpp"

namespace microregion::boosting::detail {

/// Holds the per-feature row orders so repeated fits on one matrix skip sorting.
class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, const FitConfig& cfg);

  RegressionTree build(std::span<const double> targets);

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
  };

  int grow(std::vector<std::size_t>& rows, int depth, RegressionTree& tree);
  Split best_split(const std::vector<std::size_t>& rows);

  const FeatureMatrix& x_;
  int max_depth_;
  std::size_t min_leaf_;
  // order_[f] lists every row sorted by (x[row][f], row).
  std::vector<std::vector<std::size_t>> order_;
  std::span<const double> targets_;
  std::vector<double> centered_;
  std::vector<char> member_;
};

}  // namespace microregion::boosting::detail
