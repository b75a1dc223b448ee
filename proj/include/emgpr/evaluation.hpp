#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emgpr/classifiers.hpp"
#include "emgpr/dataset.hpp"
#include "emgpr/dimred.hpp"
#include "emgpr/features.hpp"

namespace emgpr {

enum class ChannelSelect { a, b, ab };
enum class ReducerChoice { pca, lda, none };
enum class ClassifierChoice { svm, ann };

std::string to_string(ChannelSelect c);
std::string to_string(ReducerChoice r);
std::string to_string(ClassifierChoice c);
ChannelSelect channel_from_string(const std::string& name);
ReducerChoice reducer_from_string(const std::string& name);
ClassifierChoice classifier_from_string(const std::string& name);

/// Fraction of exact matches.
double accuracy(const std::vector<int>& predicted, const std::vector<int>& actual);

struct ConfusionResult {
  Matrix raw;         // rows = actual, cols = predicted (counts)
  Matrix normalized;  // row-stochastic; empty actual classes stay all-zero
  std::vector<long> support;
  std::vector<int> empty_classes;
};

ConfusionResult confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual, int n_classes);

struct PipelineConfig {
  ChannelSelect channels = ChannelSelect::ab;
  bool use_features = true;
  ReducerChoice reducer = ReducerChoice::pca;
  int k = 15;
  ClassifierChoice classifier = ClassifierChoice::ann;
  bool standardize = true;
  int raw_decimation = 100;  // keep every Nth sample in the raw baseline
  FeatureConfig features;
  MLPTrainConfig mlp;
  SVMConfig svm;
  SplitSpec split;
};

/// Per-trial design matrix + labels for the configured channel selection:
/// feature blocks when use_features, decimated raw samples otherwise.
std::pair<Matrix, std::vector<int>> vectorize(const Dataset& ds,
                                              const PipelineConfig& cfg);

struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;
};

Standardizer standardizer_fit(const Matrix& x);
Matrix standardizer_apply(const Standardizer& s, const Matrix& x);

/// Everything fitted from the training partition only.
struct FittedPipeline {
  PipelineConfig config;
  std::optional<Standardizer> standardizer;  // reducer == none path
  std::optional<Projector> projector;
  std::optional<MLPTrainResult> mlp;
  std::optional<SVMMulticlass> svm;
};

struct EvaluationReport {
  double accuracy = 0.0;
  Matrix confusion_raw;
  Matrix confusion_normalized;
  std::vector<long> per_class_support;
  PipelineConfig config;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::vector<double> loss_curve;  // ANN only
};

FittedPipeline fit_pipeline(const Dataset& train, const PipelineConfig& cfg);
EvaluationReport evaluate_pipeline(const FittedPipeline& fitted, const Dataset& test);

struct PipelineOutcome {
  EvaluationReport report;
  FittedPipeline fitted;
};

/// Split, fit on train only, evaluate on test.
PipelineOutcome run_pipeline(const Dataset& ds, const PipelineConfig& cfg);

struct SweepPoint {
  int x = 0;
  double accuracy = 0.0;
};

struct SweepResult {
  std::string axis;  // "components" or "split"
  std::vector<SweepPoint> points;
  PipelineConfig config;
};

/// One pipeline run per component count, shared split. LDA points above the
/// class-count rank bound are dropped.
SweepResult sweep_components(const Dataset& ds, const std::vector<int>& ks,
                             const PipelineConfig& base);

/// One pipeline run per training-set size (sizes strictly increasing),
/// shared seed.
SweepResult sweep_split(const Dataset& ds, const std::vector<int>& train_sizes,
                        const PipelineConfig& base);

/// 10x10 shade-character grid, darker = larger, for terminal reports.
std::string ascii_heatmap(const Matrix& m, const std::vector<std::string>& labels);

}  // namespace emgpr
