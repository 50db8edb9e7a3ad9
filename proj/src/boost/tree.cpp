#include "tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "microregion/error.hpp"

namespace microregion::boosting {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FeatureMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged feature rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> idx) const {
  FeatureMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw InvalidArgument("row index out of range");
    const auto src = row(idx[i]);
    std::copy(src.begin(), src.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return m;
}

double RegressionTree::predict(std::span<const double> x) const {
  if (nodes.empty()) throw InvalidArgument("empty regression tree");
  const TreeNode* n = &nodes[0];
  while (n->feature >= 0) {
    if (static_cast<std::size_t>(n->feature) >= x.size()) {
      throw InvalidArgument("tree splits on a feature beyond the input vector");
    }
    n = &nodes[static_cast<std::size_t>(x[static_cast<std::size_t>(n->feature)] <= n->threshold ? n->left : n->right)];
  }
  return n->value;
}

int RegressionTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int best = 0;
  while (!stack.empty()) {
    const auto [i, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    const auto& n = nodes[static_cast<std::size_t>(i)];
    if (n.feature >= 0) {
      stack.emplace_back(n.left, d + 1);
      stack.emplace_back(n.right, d + 1);
    }
  }
  return best;
}

namespace detail {

TreeBuilder::TreeBuilder(const FeatureMatrix& x, const FitConfig& cfg)
    : x_(x),
      max_depth_(cfg.max_depth),
      min_leaf_(static_cast<std::size_t>(cfg.min_samples_leaf)),
      order_(x.cols()),
      centered_(x.rows()),
      member_(x.rows(), 0) {
  cfg.validate();
  for (std::size_t f = 0; f < x.cols(); ++f) {
    auto& o = order_[f];
    o.resize(x.rows());
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) {
      const double va = x(a, f);
      const double vb = x(b, f);
      return va < vb || (va == vb && a < b);
    });
  }
}

RegressionTree TreeBuilder::build(std::span<const double> targets) {
  if (targets.empty() || x_.rows() == 0) throw InvalidArgument("cannot fit a tree on no rows");
  if (targets.size() != x_.rows()) throw InvalidArgument("target length differs from row count");
  for (const double t : targets) {
    if (!std::isfinite(t)) throw NumericError("non-finite tree target");
  }
  targets_ = targets;
  RegressionTree tree;
  tree.max_depth = max_depth_;
  std::vector<std::size_t> rows(x_.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  grow(rows, 0, tree);
  return tree;
}

int TreeBuilder::grow(std::vector<std::size_t>& rows, int depth, RegressionTree& tree) {
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();

  double sum = 0.0;
  for (const auto r : rows) sum += targets_[r];
  const double mean = sum / static_cast<double>(rows.size());
  tree.nodes[static_cast<std::size_t>(id)].value = mean;

  if (depth >= max_depth_ || rows.size() < 2 * min_leaf_) return id;
  const Split s = best_split(rows);
  if (s.feature < 0) return id;

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (const auto r : rows) {
    (x_(r, static_cast<std::size_t>(s.feature)) <= s.threshold ? left : right).push_back(r);
  }
  rows.clear();
  rows.shrink_to_fit();

  const int l = grow(left, depth + 1, tree);
  const int r = grow(right, depth + 1, tree);
  auto& node = tree.nodes[static_cast<std::size_t>(id)];
  node.feature = s.feature;
  node.threshold = s.threshold;
  node.gain = s.gain;
  node.left = l;
  node.right = r;
  return id;
}

TreeBuilder::Split TreeBuilder::best_split(const std::vector<std::size_t>& rows) {
  const std::size_t n = rows.size();
  double sum = 0.0;
  for (const auto r : rows) sum += targets_[r];
  const double mean = sum / static_cast<double>(n);

  // Work with centred targets so the gain formula does not cancel catastrophically.
  double total = 0.0;
  double sse = 0.0;
  bool constant = true;
  for (const auto r : rows) {
    centered_[r] = targets_[r] - mean;
    total += centered_[r];
    sse += centered_[r] * centered_[r];
    constant = constant && targets_[r] == targets_[rows.front()];
    member_[r] = 1;
  }
  Split best;
  if (constant || !(sse > 0.0)) {
    for (const auto r : rows) member_[r] = 0;
    return best;
  }
  const double dn = static_cast<double>(n);
  const double base = total * total / dn;
  const double min_gain = 1e-12 * sse;

  for (std::size_t f = 0; f < x_.cols(); ++f) {
    double s_left = 0.0;
    std::size_t n_left = 0;
    const std::size_t* prev = nullptr;
    for (const auto& r : order_[f]) {
      if (!member_[r]) continue;
      if (prev != nullptr) {
        const double lo = x_(*prev, f);
        const double hi = x_(r, f);
        if (lo < hi && n_left >= min_leaf_ && n - n_left >= min_leaf_) {
          const double s_right = total - s_left;
          const double gain = s_left * s_left / static_cast<double>(n_left) +
                              s_right * s_right / static_cast<double>(n - n_left) - base;
          if (gain > best.gain && gain > min_gain) {
            double t = lo + (hi - lo) / 2.0;
            if (!(t < hi)) t = lo;
            best = Split{static_cast<int>(f), t, gain};
          }
        }
      }
      s_left += centered_[r];
      ++n_left;
      prev = &r;
    }
  }
  for (const auto r : rows) member_[r] = 0;
  return best;
}

}  // namespace detail

RegressionTree fit_tree(const FeatureMatrix& x, std::span<const double> targets,
                        const FitConfig& cfg, std::uint64_t /*seed*/) {
  detail::TreeBuilder builder(x, cfg);
  return builder.build(targets);
}

}  // namespace microregion::boosting
