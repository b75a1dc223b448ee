#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "emgpr/dataset.hpp"
#include "emgpr/linalg.hpp"

namespace emgpr {

struct FeatureConfig {
  double zc_threshold = 0.0;   // mV jump guard for zero crossings
  double ssc_threshold = 0.0;  // mV^2 product guard for slope sign changes
  int ar_order = 4;
  int max_moment_order = 7;
  bool ar_full = false;  // append a_2..a_p after a_1 in the feature vector
};

/// Autoregressive model in the convention x_n = -sum_i a_i x_{n-i} + w_n.
struct ARModel {
  std::vector<double> coefficients;
  double noise_variance = 0.0;
  std::vector<double> reflection;  // Levinson reflection coefficients
};

struct FeatureVector {
  std::vector<double> values;
  int label = 0;
  int subject = 0;
  int trial = 0;
  std::vector<std::string> warnings;  // degenerate-input flags
};

/// sqrt(mean of squares).
double rms(std::span<const double> x);

/// Mean of absolute values (average rectified value).
double mav(std::span<const double> x);

/// Sign changes between consecutive samples whose jump exceeds the
/// threshold. Zero samples inherit the previous sign; leading zeros count
/// as positive.
long zero_crossings(std::span<const double> x, double threshold = 0.0);

/// Interior points where (x_n - x_{n-1}) * (x_n - x_{n+1}) > threshold.
long slope_sign_changes(std::span<const double> x, double threshold = 0.0);

/// Yule-Walker fit via Levinson-Durbin; coefficients reported in the
/// x_n = -sum a_i x_{n-i} + w_n convention.
ARModel ar_fit(std::span<const double> x, int order);

/// Third standardized moment with population estimators; 0 for constant
/// input (the overload reports the degenerate case through `degenerate`).
double skewness(std::span<const double> x);
double skewness(std::span<const double> x, bool& degenerate);

/// Sum of absolute successive differences.
double waveform_length(std::span<const double> x);

/// Sum of absolute values.
double iav(std::span<const double> x);

/// Entry 1 is the raw mean; entries 2..max_order are population central
/// moments. Length = max_order.
std::vector<double> central_moments(std::span<const double> x, int max_order);

std::size_t features_per_channel(const FeatureConfig& cfg = {});
std::vector<std::string> feature_names(const FeatureConfig& cfg = {});

/// Ordered per-recording feature vector: per channel
/// [RMS, MAV, ZC, SSC, AR, skewness, WL, IAV, moments 1..max], channel A
/// block first. 30 entries with the default config.
FeatureVector extract(const Recording& rec, const FeatureConfig& cfg = {});

struct FeatureTable {
  Matrix x;  // one row per recording
  std::vector<int> labels;
  std::vector<std::array<int, 2>> provenance;  // (subject, trial)
  std::vector<std::string> names;
};

FeatureTable extract_table(const Dataset& ds, const FeatureConfig& cfg = {});

}  // namespace emgpr
