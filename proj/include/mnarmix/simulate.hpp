#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mnarmix/dataset.hpp"
#include "mnarmix/kpod.hpp"
#include "mnarmix/mm.hpp"

namespace mnarmix {

enum class Noise { Gaussian, Student3, Laplace };
enum class Mechanism { MCAR, MNAR1, MNAR2 };

std::string to_string(Noise noise);
std::string to_string(Mechanism mechanism);
Noise parse_noise(const std::string& s);
Mechanism parse_mechanism(const std::string& s);

/// Two-component generator: label 0 (proportion 1/3) centred at -delta,
/// label 1 (proportion 2/3) at +delta, independent noise per cell, then a
/// per-cell logistic missingness draw. The majority component carries the
/// +1 side of z_i1 - z_i2; with that orientation the tabulated (delta, gamma)
/// pairs reproduce their stated missingness rates.
struct ScenarioSpec {
  std::string id;
  Index n = 100;
  Index d = 4;
  double delta = 1.0;
  double gamma = 0.0;
  Noise noise = Noise::Gaussian;
  Mechanism mechanism = Mechanism::MCAR;
  std::uint64_t seed = 0;

  static constexpr double kProportionFirst = 1.0 / 3.0;

  void validate() const;
  /// z_i1 - z_i2 for a subject with this label.
  static double side(int label) { return label == 0 ? -1.0 : 1.0; }
  double component_mean(int label) const { return side(label) * delta; }
};

struct SimulatedData {
  MaskedDataset data;
  Partition truth;
  Eigen::MatrixXd complete;  // values before masking
};

SimulatedData simulate(const ScenarioSpec& spec);

/// P(R_ij = 0 | x_ij, label) under the scenario's mechanism.
double missing_probability(const ScenarioSpec& spec, int label, double x);

/// Marginal probability that a cell of a subject with this label is observed.
double observed_probability(const ScenarioSpec& spec, int label);

double noise_pdf(Noise noise, double e);
double noise_variance(Noise noise);

/// Bayes-rule labels under the true generating model (given X^obs and R).
Partition bayes_classify(const ScenarioSpec& spec, const MaskedDataset& data);

struct SeparationParams {
  double delta = 0.0;
  double gamma = 0.0;
};

/// Tabulated (delta, gamma) for d = 4 at the given missingness rate
/// (0.1 ... 0.5) and 5% misclassification.
SeparationParams tabulated_params_by_rate(double miss_rate, Noise noise, Mechanism mechanism);

/// Tabulated (delta, gamma) for d in {3, 5, 7, 9} at 30% missingness and 5%
/// misclassification.
SeparationParams tabulated_params_by_dimension(Index d, Noise noise, Mechanism mechanism);

enum class Method { Proposed, Kpod };
std::string to_string(Method method);
Method parse_method(const std::string& s);

struct BenchOptions {
  std::vector<ScenarioSpec> scenarios;
  std::vector<Method> methods{Method::Proposed};
  int replicates = 1;
  std::uint64_t master_seed = 0;
  int components = 2;
  FitConfig fit;
  KpodConfig kpod;
  bool standardize = true;
  bool record_timing = true;
  int threads = 0;  // 0: one per hardware thread
};

struct BenchRow {
  std::string scenario;
  Method method = Method::Proposed;
  int replicate = 0;
  double ari = 0.0;
  double misclassification = 0.0;
  double seconds = 0.0;
  bool ok = true;
  std::string error;
};

struct BenchResult {
  std::vector<ScenarioSpec> scenarios;
  std::vector<BenchRow> rows;

  /// Median ARI over successful replicates of one (scenario, method) cell.
  double median_ari(const std::string& scenario, Method method) const;
};

/// Deterministic seed for one (scenario, replicate, purpose) cell.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario, std::uint64_t replicate,
                          std::uint64_t purpose);

/// simulate -> fit each method -> score against the truth, per replicate.
/// Replicates run on a thread pool; each owns seeds derived from (master
/// seed, scenario, replicate) so results do not depend on scheduling.
/// Method failures become rows with ok = false. Rows are passed to `sink`
/// (serialized, in scenario/replicate/method order) as soon as every earlier
/// row is available.
BenchResult run_bench(const BenchOptions& options, const std::function<void(const BenchRow&)>& sink = {});

double median(std::vector<double> v);

}  // namespace mnarmix
