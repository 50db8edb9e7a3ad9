#include "microregion/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "microregion/delivery.hpp"
#include "microregion/error.hpp"
#include "microregion/kernels.hpp"

namespace microregion::cluster {

double cosine_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw InvalidArgument("cosine distance of vectors with different lengths");
  const double uu = kernels::dot(u, u);
  const double vv = kernels::dot(v, v);
  if (!(uu > 0.0) || !(vv > 0.0)) throw UndefinedDistanceError("cosine distance of a zero vector");
  const double d = 1.0 - kernels::dot(u, v) / std::sqrt(uu * vv);
  return std::clamp(d, 0.0, 2.0);
}

FeatureSelection select_significant_features(
    const std::vector<std::pair<std::string, double>>& importance, std::size_t top_k) {
  if (top_k < 1) throw InvalidArgument("top_k must be >= 1");
  FeatureSelection out;
  out.truncated = top_k > importance.size();
  const std::size_t n = std::min(top_k, importance.size());
  for (std::size_t i = 0; i < n; ++i) out.names.push_back(importance[i].first);
  return out;
}

Partition agglomerate(const std::vector<std::vector<double>>& vectors, std::size_t k) {
  const std::size_t n = vectors.size();
  if (k < 1 || k > n) {
    throw InvalidArgument("agglomerate needs 1 <= k <= n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != vectors[0].size()) throw InvalidArgument("vectors differ in length");
    if (std::all_of(vectors[i].begin(), vectors[i].end(), [](double x) { return x == 0.0; })) {
      throw UndefinedDistanceError("vector " + std::to_string(i) + " is all zeros");
    }
  }

  std::vector<double> dist(n * n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return dist[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      at(i, j) = at(j, i) = cosine_distance(vectors[i], vectors[j]);
    }
  }

  std::vector<char> active(n, 1);
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;

  // nearest[i]: active j != i minimizing (d(i, j), j); recomputed lazily.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> nearest(n, kNone);
  auto refresh = [&](std::size_t i) {
    std::size_t best = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !active[j]) continue;
      if (best == kNone || at(i, j) < at(i, best)) best = j;
    }
    nearest[i] = best;
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);

  for (std::size_t clusters = n; clusters > k; --clusters) {
    // Smallest (d, i, j) with i < j over all active pairs.
    std::size_t bi = kNone;
    std::size_t bj = kNone;
    double bd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || nearest[i] == kNone) continue;
      const std::size_t j = nearest[i];
      const std::size_t lo = std::min(i, j);
      const std::size_t hi = std::max(i, j);
      const double d = at(i, j);
      if (bi == kNone || d < bd || (d == bd && (lo < bi || (lo == bi && hi < bj)))) {
        bi = lo;
        bj = hi;
        bd = d;
      }
    }
    // Merge bj into bi: complete linkage keeps the larger distance.
    active[bj] = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x] || x == bi) continue;
      at(bi, x) = at(x, bi) = std::max(at(bi, x), at(bj, x));
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (parent[m] == bj) parent[m] = bi;
    }
    refresh(bi);
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x] || x == bi) continue;
      // Distances to bi only grew; rows pointing at bi or bj may have a new nearest.
      if (nearest[x] == bi || nearest[x] == bj) refresh(x);
      else if (at(x, bi) < at(x, nearest[x]) || (at(x, bi) == at(x, nearest[x]) && bi < nearest[x])) nearest[x] = bi;
    }
  }

  Partition out;
  out.k = k;
  out.labels.assign(n, 0);
  std::vector<std::size_t> label_of(n, kNone);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = parent[i];
    if (label_of[root] == kNone) label_of[root] = next++;
    out.labels[i] = label_of[root];
  }
  return out;
}

std::size_t medoid(const std::vector<std::size_t>& members, const std::vector<hexgrid::CellId>& cells,
                   const std::vector<std::vector<double>>& vectors) {
  if (members.empty()) throw InvalidArgument("medoid of an empty cluster");
  std::size_t best = members.front();
  double best_sum = std::numeric_limits<double>::infinity();
  for (const auto i : members) {
    double sum = 0.0;
    for (const auto j : members) {
      if (i != j) sum += cosine_distance(vectors.at(i), vectors.at(j));
    }
    if (sum < best_sum || (sum == best_sum && cells.at(i) < cells.at(best))) {
      best = i;
      best_sum = sum;
    }
  }
  return best;
}

ClusterReport summarize_clusters(const ClusterAssignment& assignment,
                                 const std::map<hexgrid::CellId, std::vector<double>>& per_stop_index,
                                 const std::vector<std::vector<double>>& vectors, bool run_test) {
  const std::size_t n = assignment.cells.size();
  if (assignment.labels.size() != n || vectors.size() != n) {
    throw InvalidArgument("assignment, labels and vectors differ in length");
  }
  std::vector<std::vector<std::size_t>> members(assignment.k);
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment.labels[i] >= assignment.k) throw InvalidArgument("cluster label out of range");
    members[assignment.labels[i]].push_back(i);
  }

  ClusterReport report;
  std::vector<std::vector<double>> pooled(assignment.k);
  for (std::size_t c = 0; c < assignment.k; ++c) {
    if (members[c].empty()) throw InvalidArgument("cluster " + std::to_string(c) + " is empty");
    for (const auto i : members[c]) {
      const auto it = per_stop_index.find(assignment.cells[i]);
      if (it == per_stop_index.end() || it->second.empty()) {
        throw InvalidArgument("cell " + assignment.cells[i].to_string() + " has no recorded stops");
      }
      pooled[c].insert(pooled[c].end(), it->second.begin(), it->second.end());
    }
    std::sort(pooled[c].begin(), pooled[c].end());
    ClusterSummary s;
    s.size = members[c].size();
    s.medoid = assignment.cells[medoid(members[c], assignment.cells, vectors)];
    s.n_stops = pooled[c].size();
    s.median_service_time_s = delivery::median_of_sorted(pooled[c]);
    s.mean_service_time_s = delivery::mean_of_sorted(pooled[c]);
    report.per_cluster.push_back(s);
  }
  if (run_test && assignment.k == 2) {
    // Logs taken in ascending time order.
    auto logs = [](const std::vector<double>& v) {
      std::vector<double> out;
      out.reserve(v.size());
      for (const double t : v) out.push_back(std::log(t));
      return out;
    };
    report.test = analytics::t_test_pooled(logs(pooled[0]), logs(pooled[1]));
  }
  return report;
}

}  // namespace microregion::cluster
