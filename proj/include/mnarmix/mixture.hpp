#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "mnarmix/dataset.hpp"
#include "mnarmix/kernel.hpp"

namespace mnarmix {

/// n x K smoothed membership probabilities; rows sum to one.
using ResponsibilityMatrix = Eigen::MatrixXd;

/// Conditional distribution of one variable given the component and that the
/// variable is observed, for all components at once.
struct VariableModel {
  VariableKind kind = VariableKind::Continuous;
  Grid<double> grid;     // continuous only
  Eigen::MatrixXd table; // continuous: grid.size x K node densities; categorical: n_levels x K probabilities
};

struct MixtureParams {
  Eigen::VectorXd pi;    // K
  Eigen::MatrixXd tau;   // K x d, probability that variable j is observed in component k
  std::vector<VariableModel> densities;  // one per variable
  Kernel<double> kernel;

  Index components() const { return pi.size(); }
  Index variables() const { return tau.cols(); }

  GridDensity<double> density(Index k, Index j) const;

  /// Applies a permutation to the component axis: new component c is old perm[c].
  MixtureParams permuted(const std::vector<Index>& perm) const;
};

inline double pi_floor(Index n) { return 1.0 / (100.0 * static_cast<double>(n)); }
inline double tau_floor(Index n) { return 1.0 / (2.0 * static_cast<double>(n)); }
inline constexpr double kCategoricalFloor = 1e-12;

/// One grid per variable built from its observed values; categorical columns
/// get a placeholder grid that is never read.
std::vector<Grid<double>> build_grids(const MaskedDataset& data, const Kernel<double>& kernel,
                                      Index min_nodes = kDefaultGridSize);

/// Kernel values between every observed cell and the nodes of its variable's
/// grid. Fixed for a given dataset, grid set and bandwidth, so a fit builds it
/// once and reuses it for every E- and M-step.
class SmoothingDesign {
 public:
  struct Column {
    std::vector<Index> rows;      // observed subjects
    Eigen::MatrixXd kernel;       // rows.size() x m, K_h(x_i - u_g); continuous only
    Eigen::VectorXd quadrature;   // trapezoid weights of the grid; continuous only
    std::vector<int> levels;      // observed level per row; categorical only
  };

  SmoothingDesign(const MaskedDataset& data, const Kernel<double>& kernel, const std::vector<Grid<double>>& grids);
  SmoothingDesign(const MaskedDataset& data, const MixtureParams& params);

  const Column& column(Index j) const { return columns_[static_cast<std::size_t>(j)]; }
  Index rows() const { return n_; }
  Index cols() const { return static_cast<Index>(columns_.size()); }

 private:
  Index n_ = 0;
  std::vector<Column> columns_;
};

/// ln N g_k(x_i, r_i) for every subject and component (n x K), without pi:
/// Bernoulli missingness terms plus (S ln p_kj)(x_ij) for observed continuous
/// cells and ln p_kj(level) for observed categorical cells.
Eigen::MatrixXd log_components(const MixtureParams& params, const MaskedDataset& data, const SmoothingDesign& design);

/// Single-entry version of log_components evaluated by direct quadrature.
double log_component_smoothed(const MixtureParams& params, const MaskedDataset& data, Index i, Index k);

struct Evaluation {
  ResponsibilityMatrix t;
  Eigen::VectorXd row_loglik;
  double loglik = 0.0;
};

Evaluation evaluate(const MixtureParams& params, const MaskedDataset& data, const SmoothingDesign& design);

ResponsibilityMatrix responsibilities(const MixtureParams& params, const MaskedDataset& data);
double smoothed_loglik(const MixtureParams& params, const MaskedDataset& data);

/// MAP labels; ties go to the lowest component index.
Partition classify(const ResponsibilityMatrix& t);

/// Reports violated or doubtful identifiability preconditions. Never throws.
std::vector<std::string> validate_identifiability(const MixtureParams& params, const MaskedDataset& data);

}  // namespace mnarmix
