#include "emgpr/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "emgpr/errors.hpp"
#include "emgpr/rng.hpp"

namespace emgpr {

namespace fs = std::filesystem;

const std::array<std::string, kNumClasses>& Dataset::class_names() {
  static const std::array<std::string, kNumClasses> names = {
      "T", "I", "M", "R", "L", "T-I", "T-M", "T-R", "T-L", "HC"};
  return names;
}

void validate(const Recording& rec) {
  if (rec.class_id < 0 || rec.class_id >= kNumClasses) {
    throw std::invalid_argument("recording: class_id out of range 0..9");
  }
  if (rec.channels[0].size() != rec.channels[1].size()) {
    throw std::invalid_argument("recording: channel lengths differ");
  }
  if (rec.channels[0].size() < kMinTrialLength) {
    throw std::invalid_argument("recording: fewer than 16 samples per channel");
  }
  for (const auto& channel : rec.channels) {
    for (double v : channel) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("recording: non-finite sample");
      }
    }
  }
}

namespace {

// Parses "s12" -> 12; returns -1 when the name does not match.
int parse_indexed_name(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return -1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size() || value < 0) return -1;
  return value;
}

Recording load_trial_file(const fs::path& file, int subject, int cls, int trial) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot open " + file.string());

  Recording rec;
  rec.subject_id = subject;
  rec.class_id = cls;
  rec.trial_id = trial;

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const char* begin = line.data();
    const char* end = begin + line.size();
    double values[2];
    const char* cursor = begin;
    for (int col = 0; col < 2; ++col) {
      auto [ptr, ec] = std::from_chars(cursor, end, values[col]);
      if (ec != std::errc()) {
        throw DataError(file.string() + ":" + std::to_string(line_no) +
                        ": column " + std::to_string(col + 1) +
                        ": malformed number");
      }
      cursor = ptr;
      if (col == 0) {
        if (cursor == end || *cursor != ',') {
          throw DataError(file.string() + ":" + std::to_string(line_no) +
                          ": expected 2 comma-separated columns");
        }
        ++cursor;
      }
    }
    if (cursor != end) {
      throw DataError(file.string() + ":" + std::to_string(line_no) +
                      ": expected exactly 2 columns");
    }
    if (!std::isfinite(values[0]) || !std::isfinite(values[1])) {
      throw DataError(file.string() + ":" + std::to_string(line_no) +
                      ": non-finite sample");
    }
    rec.channels[0].push_back(values[0]);
    rec.channels[1].push_back(values[1]);
  }

  if (rec.channels[0].size() < kMinTrialLength) {
    throw DataError(file.string() + ": fewer than " +
                    std::to_string(kMinTrialLength) + " samples");
  }
  if (rec.class_id < 0 || rec.class_id >= kNumClasses) {
    throw DataError(file.string() + ": class id out of range 0..9");
  }
  return rec;
}

}  // namespace

Dataset load_dataset(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw DataError("dataset directory not found: " + root.string());
  }

  Dataset ds;
  for (const auto& subj_entry : fs::directory_iterator(root)) {
    if (!subj_entry.is_directory()) continue;
    const int subject = parse_indexed_name(subj_entry.path().filename().string(), 's');
    if (subject < 0) continue;
    for (const auto& cls_entry : fs::directory_iterator(subj_entry.path())) {
      if (!cls_entry.is_directory()) continue;
      const int cls = parse_indexed_name(cls_entry.path().filename().string(), 'c');
      if (cls < 0) continue;
      for (const auto& trial_entry : fs::directory_iterator(cls_entry.path())) {
        if (!trial_entry.is_regular_file()) continue;
        const fs::path& p = trial_entry.path();
        if (p.extension() != ".csv") continue;
        const int trial = parse_indexed_name(p.stem().string(), 't');
        if (trial < 0) continue;
        ds.recordings.push_back(load_trial_file(p, subject, cls, trial));
      }
    }
  }

  if (ds.recordings.empty()) {
    throw DataError("no trial files found under " + root.string());
  }

  std::sort(ds.recordings.begin(), ds.recordings.end(),
            [](const Recording& a, const Recording& b) {
              return std::tie(a.subject_id, a.class_id, a.trial_id) <
                     std::tie(b.subject_id, b.class_id, b.trial_id);
            });
  return ds;
}

void write_dataset(const Dataset& ds, const fs::path& root) {
  for (const Recording& rec : ds.recordings) {
    const fs::path dir = root / ("s" + std::to_string(rec.subject_id)) /
                         ("c" + std::to_string(rec.class_id));
    fs::create_directories(dir);
    const fs::path file = dir / ("t" + std::to_string(rec.trial_id) + ".csv");
    std::FILE* out = std::fopen(file.string().c_str(), "wb");
    if (!out) throw DataError("cannot write " + file.string());
    char buf[80];
    for (std::size_t i = 0; i < rec.length(); ++i) {
      int len = std::snprintf(buf, sizeof(buf), "%.10g,%.10g\n",
                              rec.channels[0][i], rec.channels[1][i]);
      std::fwrite(buf, 1, static_cast<std::size_t>(len), out);
    }
    std::fclose(out);
  }
}

Ar2 synth_class_generator(const SynthConfig& cfg, int class_id) {
  const double frac =
      cfg.n_classes > 1
          ? static_cast<double>(class_id) / static_cast<double>(cfg.n_classes - 1)
          : 0.0;
  // Complex pole pair r e^{+-i theta}: radius 0.5..0.9, angle 0.1pi..0.45pi.
  const double r = 0.5 + 0.4 * frac;
  const double theta = std::numbers::pi * (0.1 + 0.35 * frac);
  return {2.0 * r * std::cos(theta), -r * r};
}

double synth_class_gain(const SynthConfig& cfg, int class_id) {
  const double frac =
      cfg.n_classes > 1
          ? static_cast<double>(class_id) / static_cast<double>(cfg.n_classes - 1)
          : 0.0;
  return 1.0 + 2.0 * frac;
}

namespace {

// Stationary standard deviation of x_n = phi1 x_{n-1} + phi2 x_{n-2} + e_n
// with unit-variance innovations.
double ar2_stationary_std(const Ar2& g) {
  const double denom =
      (1.0 + g.phi2) * ((1.0 - g.phi2) * (1.0 - g.phi2) - g.phi1 * g.phi1);
  const double var = (1.0 - g.phi2) / denom;
  return std::sqrt(var);
}

std::vector<double> synth_channel(const SynthConfig& cfg, int class_id,
                                  double amplitude, std::uint64_t seed) {
  const int n = cfg.samples_per_trial;
  const Ar2 gen = synth_class_generator(cfg, class_id);
  const double inv_std = 1.0 / ar2_stationary_std(gen);
  const double clip = cfg.peak_mv / 2.0;

  RandomSource rng(seed);
  std::vector<double> out(static_cast<std::size_t>(n));

  // Class-specific envelope: modulation count and phase vary with the class.
  const int cycles = 1 + class_id % 3;
  const double phase = 2.0 * std::numbers::pi * class_id /
                       std::max(1, cfg.n_classes);
  const double depth = cfg.flat_envelope ? 0.0 : 0.35;

  constexpr int kBurnIn = 200;
  double x1 = 0.0, x2 = 0.0;
  for (int i = -kBurnIn; i < n; ++i) {
    const double x = gen.phi1 * x1 + gen.phi2 * x2 + rng.gaussian();
    x2 = x1;
    x1 = x;
    if (i < 0) continue;
    const double t = static_cast<double>(i) / static_cast<double>(n);
    const double env =
        1.0 + depth * std::sin(2.0 * std::numbers::pi * cycles * t + phase);
    double v = amplitude * env * (x * inv_std);
    if (cfg.noise_sigma > 0.0) v += cfg.noise_sigma * rng.gaussian();
    out[static_cast<std::size_t>(i)] = std::clamp(v, -clip, clip);
  }
  return out;
}

}  // namespace

Dataset synth_generate(const SynthConfig& cfg) {
  if (cfg.n_classes <= 0 || cfg.n_trials <= 0 || cfg.n_subjects <= 0) {
    throw std::invalid_argument("synth: subjects, classes and trials must be positive");
  }
  if (cfg.n_classes > kNumClasses) {
    throw std::invalid_argument("synth: at most 10 classes");
  }
  if (cfg.peak_mv <= 0.0) {
    throw std::invalid_argument("synth: peak_mv must be positive");
  }
  if (cfg.samples_per_trial < static_cast<int>(kMinTrialLength)) {
    throw std::invalid_argument("synth: samples_per_trial below minimum 16");
  }

  const std::uint64_t stream_root = derive_seed(cfg.seed, "synth");
  const double base_amplitude = cfg.peak_mv / 40.0;

  Dataset ds;
  ds.recordings.reserve(static_cast<std::size_t>(cfg.n_subjects) * cfg.n_classes *
                        cfg.n_trials);
  std::uint64_t stream = 0;
  for (int s = 0; s < cfg.n_subjects; ++s) {
    for (int c = 0; c < cfg.n_classes; ++c) {
      const double gain_b = synth_class_gain(cfg, c);
      for (int t = 0; t < cfg.n_trials; ++t) {
        Recording rec;
        rec.subject_id = s;
        rec.class_id = c;
        rec.trial_id = t;
        rec.channels[0] = synth_channel(cfg, c, base_amplitude,
                                        derive_seed(stream_root, "ch", stream++));
        rec.channels[1] = synth_channel(cfg, c, base_amplitude * gain_b,
                                        derive_seed(stream_root, "ch", stream++));
        ds.recordings.push_back(std::move(rec));
      }
    }
  }
  return ds;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, const SplitSpec& spec) {
  const std::size_t n = ds.size();
  if (spec.n_train + spec.n_test != n) {
    throw std::invalid_argument("split: n_train + n_test != dataset size");
  }
  if (spec.n_test == 0) {
    throw std::invalid_argument("split: empty test set");
  }
  if (spec.n_train == 0) {
    throw std::invalid_argument("split: empty training set");
  }

  std::vector<std::size_t> train_idx;
  train_idx.reserve(spec.n_train);

  if (spec.stratified) {
    // Group indices per class, in class-id order.
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      groups[ds.recordings[i].class_id].push_back(i);
    }

    // Largest-remainder quota so per-class train counts stay within 1 of
    // proportionality.
    struct Quota {
      int cls;
      std::size_t count;
      double remainder;
    };
    std::vector<Quota> quotas;
    std::size_t assigned = 0;
    for (const auto& [cls, members] : groups) {
      const double exact = static_cast<double>(spec.n_train) *
                           static_cast<double>(members.size()) /
                           static_cast<double>(n);
      const auto base = static_cast<std::size_t>(exact);
      quotas.push_back({cls, base, exact - static_cast<double>(base)});
      assigned += base;
    }
    std::vector<std::size_t> order(quotas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return quotas[a].remainder > quotas[b].remainder;
    });
    for (std::size_t i = 0; assigned < spec.n_train; ++i) {
      quotas[order[i % order.size()]].count += 1;
      ++assigned;
    }

    for (const Quota& q : quotas) {
      const auto& members = groups[q.cls];
      if (q.count == 0) {
        throw std::invalid_argument(
            "split: class " + std::to_string(q.cls) +
            " would have zero training members");
      }
      if (q.count > members.size()) {
        throw std::invalid_argument(
            "split: class " + std::to_string(q.cls) +
            " has too few recordings for the requested split");
      }
      std::vector<std::size_t> shuffled = members;
      RandomSource rng(derive_seed(spec.seed, "split",
                                   static_cast<std::uint64_t>(q.cls)));
      shuffle_inplace(shuffled, rng);
      train_idx.insert(train_idx.end(), shuffled.begin(),
                       shuffled.begin() + static_cast<std::ptrdiff_t>(q.count));
    }
  } else {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    RandomSource rng(derive_seed(spec.seed, "split"));
    shuffle_inplace(order, rng);
    train_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(spec.n_train));
  }

  std::vector<char> in_train(n, 0);
  for (std::size_t i : train_idx) in_train[i] = 1;

  Dataset train, test;
  train.recordings.reserve(spec.n_train);
  test.recordings.reserve(spec.n_test);
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? train : test).recordings.push_back(ds.recordings[i]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace emgpr
