#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace emgpr {

inline constexpr int kNumClasses = 10;
inline constexpr std::size_t kCanonicalTrialLength = 20000;
inline constexpr std::size_t kMinTrialLength = 16;

/// One trial: two equal-length channels of EMG samples in millivolts.
struct Recording {
  int subject_id = 0;
  int class_id = 0;  // 0..9: T, I, M, R, L, T-I, T-M, T-R, T-L, HC
  int trial_id = 0;
  std::array<std::vector<double>, 2> channels;

  std::size_t length() const { return channels[0].size(); }
};

/// Throws std::invalid_argument when a Recording invariant is violated.
void validate(const Recording& rec);

struct Dataset {
  std::vector<Recording> recordings;

  std::size_t size() const { return recordings.size(); }
  static const std::array<std::string, kNumClasses>& class_names();
};

struct SplitSpec {
  std::size_t n_train = 450;
  std::size_t n_test = 30;
  std::uint64_t seed = 42;
  bool stratified = true;
};

struct SynthConfig {
  int n_subjects = 8;
  int n_classes = kNumClasses;
  int n_trials = 6;
  int samples_per_trial = static_cast<int>(kCanonicalTrialLength);
  double peak_mv = 10.0;      // samples are clipped to +/- peak_mv / 2
  double noise_sigma = 0.05;  // additive measurement noise, mV
  bool flat_envelope = false;
  std::uint64_t seed = 42;
};

/// Load recordings from `<root>/s<subject>/c<class>/t<trial>.csv` files
/// (two comma-separated mV columns, no header, one row per sample).
Dataset load_dataset(const std::filesystem::path& root);

/// Write a dataset in the same directory layout load_dataset reads.
void write_dataset(const Dataset& ds, const std::filesystem::path& root);

/// Class-specific AR(2) generator in the standard form
/// x_n = phi1 x_{n-1} + phi2 x_{n-2} + e_n.
struct Ar2 {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

Ar2 synth_class_generator(const SynthConfig& cfg, int class_id);
double synth_class_gain(const SynthConfig& cfg, int class_id);

/// Deterministic synthetic surrogate dataset: per-class AR(2) signals with
/// class-specific envelope and channel gain, clipped to +/- peak_mv/2.
Dataset synth_generate(const SynthConfig& cfg);

/// Seeded (optionally stratified) disjoint train/test partition.
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, const SplitSpec& spec);

}  // namespace emgpr
