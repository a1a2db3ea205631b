#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mnarmix/dataset.hpp"
#include "mnarmix/metrics.hpp"
#include "mnarmix/mixture.hpp"
#include "mnarmix/mm.hpp"
#include "mnarmix/simulate.hpp"

namespace mnarmix {

struct CsvOptions {
  bool header = true;
  char delimiter = ',';
  std::vector<std::string> missing_tokens{"", "NA", "?"};
  std::vector<std::string> categorical;  // column names, or 1-based indices, forced categorical
  bool numeric_only = false;  // a non-numeric cell in a non-categorical column is an error
};

/// Numeric columns become continuous, others (and flagged ones) categorical
/// with levels coded in order of first appearance.
MaskedDataset parse_csv(std::istream& in, const CsvOptions& options, const std::string& source = "<stream>");
MaskedDataset read_csv(const std::string& path, const CsvOptions& options = {});

void write_csv(std::ostream& out, const MaskedDataset& data);
void write_csv(const std::string& path, const MaskedDataset& data);

/// One label per line under a "label" header; NA marks a missing label.
Partition read_partition(const std::string& path);
void write_partition(std::ostream& out, const Partition& p);
void write_partition(const std::string& path, const Partition& p);

void write_trace(const std::string& path, const std::vector<double>& trace);

struct FitMetadata {
  FitConfig config;  // observer is not persisted
  Index n_train = 0;
  std::vector<double> loglik_trace;
  bool converged = false;
  int iterations = 0;
  std::vector<std::string> warnings;
};

struct ModelFile {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  MixtureParams params;
  std::vector<VariableSpec> variables;
  FitMetadata fit;

  std::vector<std::optional<Standardization>> standardization() const;
};

/// Maps raw data onto a model's variables: categorical tokens are recoded
/// with the model's level names and stored standardizations are applied.
MaskedDataset conform(const MaskedDataset& raw, const std::vector<VariableSpec>& variables);

ModelFile make_model_file(const FitResult& result, const MaskedDataset& data, const FitConfig& config);

std::string model_to_string(const ModelFile& model);
ModelFile model_from_string(const std::string& text);
void write_model(const std::string& path, const ModelFile& model);
ModelFile read_model(const std::string& path);

/// Declarative `key = value` benchmark description with `[scenario <id>]`
/// sections.
BenchOptions parse_bench_config(std::istream& in, const std::string& source = "<stream>");
BenchOptions read_bench_config(const std::string& path);

/// scenario,method,replicate,ari,misclassification,seconds
void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

std::string format_real(double v);

}  // namespace mnarmix
