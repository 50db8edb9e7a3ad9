#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "microregion/analytics.hpp"
#include "microregion/hexgrid.hpp"

namespace microregion::cluster {

/// 1 - u.v / (|u||v|), clamped to [0, 2]. Throws UndefinedDistanceError if
/// either vector is all zeros, InvalidArgument on a length mismatch.
double cosine_distance(std::span<const double> u, std::span<const double> v);

struct FeatureSelection {
  std::vector<std::string> names;
  /// Set when top_k exceeded the number of ranked features.
  bool truncated = false;
};

/// First top_k names of an importance ranking (already sorted by weight,
/// ties by name). Throws InvalidArgument if top_k < 1.
FeatureSelection select_significant_features(
    const std::vector<std::pair<std::string, double>>& importance, std::size_t top_k);

/// Labels ordered by the smallest member index: label 0 holds row 0.
struct Partition {
  std::size_t k = 0;
  std::vector<std::size_t> labels;
};

/// Complete-linkage agglomeration on cosine distance down to k clusters.
/// A merged cluster is known by its smallest member index; among equal
/// linkage distances the pair with the smallest (i, j) merges first.
/// Throws UndefinedDistanceError naming the first all-zero vector.
Partition agglomerate(const std::vector<std::vector<double>>& vectors, std::size_t k);

/// Member minimizing the summed cosine distance to the other members
/// (ties by cell id). `members` indexes into `cells`/`vectors`.
std::size_t medoid(const std::vector<std::size_t>& members, const std::vector<hexgrid::CellId>& cells,
                   const std::vector<std::vector<double>>& vectors);

struct ClusterAssignment {
  std::vector<hexgrid::CellId> cells;
  std::vector<std::size_t> labels;
  std::size_t k = 0;
};

struct ClusterSummary {
  std::size_t size = 0;
  hexgrid::CellId medoid;
  std::size_t n_stops = 0;
  double median_service_time_s = 0.0;
  double mean_service_time_s = 0.0;
};

struct ClusterReport {
  std::vector<ClusterSummary> per_cluster;
  /// Pooled t test on ln(per-stop service time), cluster 0 vs 1, only for k == 2.
  std::optional<analytics::TTestResult> test;
};

/// Statistics pool the per-stop service times of member cells. Throws
/// InvalidArgument if a cell has no recorded stops. With `run_test` false the
/// t test is skipped even for k == 2.
ClusterReport summarize_clusters(const ClusterAssignment& assignment,
                                 const std::map<hexgrid::CellId, std::vector<double>>& per_stop_index,
                                 const std::vector<std::vector<double>>& vectors, bool run_test = true);

}  // namespace microregion::cluster
