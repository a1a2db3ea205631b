#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "mnarmix/error.hpp"

namespace mnarmix {

using Index = Eigen::Index;
using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

enum class VariableKind { Continuous, Categorical };

/// Affine map applied to a continuous column: stored = (raw - mean) / sd.
struct Standardization {
  double mean = 0.0;
  double sd = 1.0;
};

struct VariableSpec {
  VariableKind kind = VariableKind::Continuous;
  int n_levels = 0;  // categorical only
  std::optional<Standardization> standardization;
  std::string name;
  std::vector<std::string> level_names;  // level index -> original token

  static VariableSpec continuous(std::string name = {}) {
    VariableSpec s;
    s.name = std::move(name);
    return s;
  }
  static VariableSpec categorical(int n_levels, std::string name = {}) {
    VariableSpec s;
    s.kind = VariableKind::Categorical;
    s.n_levels = n_levels;
    s.name = std::move(name);
    return s;
  }
  bool is_continuous() const { return kind == VariableKind::Continuous; }
};

/// n x d observations with an observation mask (true = observed).
///
/// The mask is authoritative. Masked cells are overwritten with NaN at
/// construction so whatever sentinel the caller used cannot leak into any
/// computation; code paths test the mask, never the value.
class MaskedDataset {
 public:
  MaskedDataset(Eigen::MatrixXd values, BoolMatrix mask, std::vector<VariableSpec> specs);

  /// All-continuous dataset; a default spec is generated per column.
  MaskedDataset(Eigen::MatrixXd values, BoolMatrix mask);

  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }

  const Eigen::MatrixXd& values() const { return values_; }
  const BoolMatrix& mask() const { return mask_; }
  const std::vector<VariableSpec>& specs() const { return specs_; }
  const VariableSpec& spec(Index j) const { return specs_[static_cast<std::size_t>(j)]; }

  bool observed(Index i, Index j) const { return mask_(i, j); }
  double value(Index i, Index j) const { return values_(i, j); }

  Index observed_count(Index j) const;
  bool fully_observed(Index j) const { return observed_count(j) == rows(); }
  std::vector<Index> observed_rows(Index j) const;
  Eigen::VectorXd observed_values(Index j) const;

 private:
  Eigen::MatrixXd values_;
  BoolMatrix mask_;
  std::vector<VariableSpec> specs_;
};

/// Hard assignment of n subjects to K groups. A label of `kMissingLabel`
/// marks a subject without a label (external partitions only).
struct Partition {
  static constexpr int kMissingLabel = -1;

  std::vector<int> labels;
  int K = 0;

  Partition() = default;
  Partition(std::vector<int> labels, int K);
  /// K inferred as max label + 1.
  explicit Partition(std::vector<int> labels);

  std::size_t size() const { return labels.size(); }
  bool has_missing() const;
};

/// Scales every continuous column to observed mean 0 and sample sd 1.
/// A column that already carries a standardization gets the composed map so
/// the record always maps the original scale to the stored one.
MaskedDataset standardize(const MaskedDataset& data);

/// Applies previously recorded standardizations (e.g. from a model file) to
/// raw data. Columns without a record are left unchanged.
MaskedDataset apply_standardization(const MaskedDataset& data,
                                    const std::vector<std::optional<Standardization>>& records);

struct MissingnessSummary {
  Eigen::VectorXd per_column;
  double overall = 0.0;
};

MissingnessSummary missingness_summary(const MaskedDataset& data);

}  // namespace mnarmix
