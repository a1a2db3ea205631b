#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mnarmix/dataset.hpp"

namespace mnarmix {

struct KpodConfig {
  int components = 2;
  int max_outer = 100;
  int n_starts = 10;
  int max_lloyd = 100;
  std::uint64_t seed = 0;

  void validate() const;
};

struct KmeansResult {
  Partition partition;
  Eigen::MatrixXd centroids;  // K x p
  double objective = 0.0;     // within-cluster sum of squares on observed cells
  std::vector<double> objective_trace;  // per outer iteration (kpod) or per Lloyd pass (kmeans)
  int iterations = 0;
};

/// Numeric matrix the baseline works on: continuous columns as-is,
/// categorical columns one-hot encoded (a missing level masks all its
/// indicator columns).
struct NumericView {
  Eigen::MatrixXd values;
  BoolMatrix mask;
};
NumericView numeric_view(const MaskedDataset& data);

/// k-means++ seeding.
Eigen::MatrixXd kmeanspp_seed(const Eigen::MatrixXd& x, int K, std::mt19937_64& rng);

/// Lloyd iterations from the given centroids until assignments stop changing.
KmeansResult lloyd(const Eigen::MatrixXd& x, Eigen::MatrixXd centroids, int max_iters);

/// Plain k-means on complete data, best of config.n_starts k-means++ starts.
KmeansResult kmeans(const Eigen::MatrixXd& x, const KpodConfig& config);

/// K-pod: alternate centroid completion of missing cells with Lloyd's
/// k-means on the completed matrix until assignments are stable.
KmeansResult kpod_fit(const MaskedDataset& data, const KpodConfig& config);

}  // namespace mnarmix
