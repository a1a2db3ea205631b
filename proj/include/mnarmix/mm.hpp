#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mnarmix/mixture.hpp"

namespace mnarmix {

/// Passed to FitConfig::observer after every evaluation of the objective.
struct IterationEvent {
  int start = 0;        // index of the random start the run belongs to
  int iteration = 0;    // number of M-steps applied so far in this run
  double loglik = 0.0;
  bool reseeded = false;  // the M-step leading here followed a component reseed
  const MixtureParams* params = nullptr;
};

struct FitConfig {
  int components = 2;
  int n_starts = 20;
  int short_iters = 50;
  int max_iters = 500;
  double rel_tol = 1e-6;
  std::optional<double> bandwidth;  // default n^(-1/5)
  Index grid_size = kDefaultGridSize;
  std::uint64_t seed = 0;
  std::function<void(const IterationEvent&)> observer;

  void validate() const;
};

struct FitResult {
  MixtureParams params;
  ResponsibilityMatrix t;
  Partition partition;
  std::vector<double> loglik_trace;     // selected run, including its short phase
  std::vector<std::size_t> reseed_steps;  // trace indices reached right after a reseed
  bool converged = false;
  int iterations = 0;
  int best_start = 0;
  std::vector<double> start_logliks;    // objective of every start after its short phase
  std::vector<std::vector<double>> start_traces;
  std::vector<std::string> warnings;

  double loglik() const { return loglik_trace.back(); }
};

/// Proportions maximizing sum_ik t_ik ln pi_k subject to pi_k >= pi_floor(n).
Eigen::VectorXd update_pi(const ResponsibilityMatrix& t);

/// tau_kj = sum_i r_ij t_ik / sum_i t_ik, clamped to [tau_floor, 1 - tau_floor];
/// exactly 1 for fully observed columns.
Eigen::MatrixXd update_tau(const ResponsibilityMatrix& t, const MaskedDataset& data);

/// New conditional distribution of variable j in component k (a column of
/// VariableModel::table): weighted KDE on the grid with weights r_ij t_ik for
/// continuous variables, weighted level frequencies for categorical ones.
Eigen::VectorXd update_density(const ResponsibilityMatrix& t, const MaskedDataset& data,
                               const SmoothingDesign& design, const Grid<double>& grid, Index k, Index j);

/// All three updates from one responsibility matrix.
MixtureParams m_step(const ResponsibilityMatrix& t, const MaskedDataset& data, const SmoothingDesign& design,
                     const Kernel<double>& kernel, const std::vector<Grid<double>>& grids);

/// Responsibilities at `params`, then the updates computed from them.
std::pair<MixtureParams, ResponsibilityMatrix> mm_step(const MixtureParams& params, const MaskedDataset& data,
                                                       const SmoothingDesign& design);
std::pair<MixtureParams, ResponsibilityMatrix> mm_step(const MixtureParams& params, const MaskedDataset& data);

/// Row-wise Dirichlet(1) responsibilities.
ResponsibilityMatrix random_responsibilities(Index n, Index K, std::mt19937_64& rng);

/// Runs the MM iteration from `initial` until the relative objective change
/// drops below config.rel_tol or config.max_iters M-steps have been taken.
FitResult iterate(const MaskedDataset& data, const MixtureParams& initial, const FitConfig& config);

/// Multi-start fit: config.n_starts random starts run config.short_iters
/// steps, the best one continues to convergence.
FitResult fit(const MaskedDataset& data, const FitConfig& config);

struct SelectKEntry {
  int K = 0;
  double loglik = 0.0;
  bool ok = false;
  std::string error;
};

struct SelectKResult {
  std::vector<SelectKEntry> table;
  int selected = 0;
};

/// Elbow rule on a per-K table: the smallest K whose gain to K+1 is below
/// the larger of `relative` times the largest single-step gain and
/// `absolute * n^(1/5)` nats. The gain from an unneeded component shrinks
/// per subject roughly like n^(-4/5), so the absolute term scales with it.
/// Failed entries end the usable prefix.
int elbow_select(const std::vector<SelectKEntry>& table, Index n, double relative = 0.1, double absolute = 6.0);

SelectKResult select_k(const MaskedDataset& data, int k_min, int k_max, const FitConfig& config);

}  // namespace mnarmix
