#pragma once

#include <string>
#include <vector>

#include "mnarmix/dataset.hpp"
#include "mnarmix/mixture.hpp"

namespace mnarmix {

/// Adjusted Rand index (Hubert & Arabie). Subjects missing a label in either
/// partition are left out.
double ari(const Partition& a, const Partition& b);

struct Misclassification {
  double rate = 0.0;
  bool approximate = false;  // greedy matching was used (more than 8 labels)
};

/// Smallest error rate over injective relabelings of `a` onto `truth`.
Misclassification misclassification(const Partition& a, const Partition& truth);

/// Cross-tabulation: rows are the labels of `external` (plus a trailing
/// "missing" row when some are missing), columns the labels of `estimated`.
struct ConfusionTable {
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts;
  bool has_missing_row = false;

  long long total() const { return counts.sum(); }
};

ConfusionTable confusion(const Partition& estimated, const Partition& external);

struct VariableReport {
  std::string name;
  bool categorical = false;
  double missing_rate = 0.0;
  double tau_spread = 0.0;        // max_k tau_kj - min_k tau_kj
  double density_l1 = 0.0;        // mean pairwise L1 distance between components' p_kj
  Eigen::VectorXd class_missing_rate;  // responsibility-weighted missing rate per component
};

std::vector<VariableReport> discriminative_report(const MixtureParams& params, const ResponsibilityMatrix& t,
                                                  const MaskedDataset& data);

/// Same statistics from the parameters alone: missingness rates are the
/// model-implied ones, 1 - tau.
std::vector<VariableReport> discriminative_report(const MixtureParams& params, const std::vector<VariableSpec>& specs);

}  // namespace mnarmix
