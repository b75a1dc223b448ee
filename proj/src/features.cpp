#include "emgpr/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "emgpr/errors.hpp"

namespace emgpr {

namespace {

void require_nonempty(std::span<const double> x, const char* op) {
  if (x.empty()) throw std::invalid_argument(std::string(op) + ": empty signal");
}

}  // namespace

double rms(std::span<const double> x) {
  require_nonempty(x, "rms");
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

double mav(std::span<const double> x) {
  require_nonempty(x, "mav");
  double acc = 0.0;
  for (double v : x) acc += std::abs(v);
  return acc / static_cast<double>(x.size());
}

long zero_crossings(std::span<const double> x, double threshold) {
  if (x.size() < 2) {
    throw std::invalid_argument("zero_crossings: need at least 2 samples");
  }
  long count = 0;
  // Zero samples carry the previous sign; leading zeros count as positive.
  double sign = x[0] < 0.0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double next = x[i + 1];
    const double next_sign = next == 0.0 ? sign : (next < 0.0 ? -1.0 : 1.0);
    if (next_sign != sign && std::abs(x[i] - next) > threshold) ++count;
    sign = next_sign;
  }
  return count;
}

long slope_sign_changes(std::span<const double> x, double threshold) {
  if (x.size() < 3) {
    throw std::invalid_argument("slope_sign_changes: need at least 3 samples");
  }
  long count = 0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double left = x[i] - x[i - 1];
    const double right = x[i] - x[i + 1];
    // Local extremum: the sample rises on one side and falls on the other.
    if (left * right > threshold) ++count;
  }
  return count;
}

ARModel ar_fit(std::span<const double> x, int order) {
  if (order < 1) throw std::invalid_argument("ar_fit: order must be >= 1");
  if (x.size() <= static_cast<std::size_t>(order)) {
    throw std::invalid_argument("ar_fit: signal shorter than order + 1");
  }

  const auto n = static_cast<double>(x.size());
  // Biased autocovariance (divide by N) keeps the Toeplitz system
  // positive semi-definite.
  std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
  for (int lag = 0; lag <= order; ++lag) {
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(lag); i < x.size(); ++i) {
      acc += x[i] * x[i - static_cast<std::size_t>(lag)];
    }
    r[static_cast<std::size_t>(lag)] = acc / n;
  }

  if (r[0] <= 0.0) {
    throw NumericError("ar_fit: zero-variance signal");
  }
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double deviation = 0.0;
  for (double v : x) deviation += (v - mean) * (v - mean);
  if (deviation <= 0.0) {
    throw NumericError("ar_fit: zero-variance signal");
  }

  // Levinson-Durbin on x_n = sum_i phi_i x_{n-i} + e_n, then negate:
  // the reported coefficients follow x_n = -sum_i a_i x_{n-i} + w_n.
  std::vector<double> phi(static_cast<std::size_t>(order), 0.0);
  std::vector<double> prev(static_cast<std::size_t>(order), 0.0);
  std::vector<double> reflection(static_cast<std::size_t>(order), 0.0);
  double err = r[0];
  for (int m = 0; m < order; ++m) {
    double acc = r[static_cast<std::size_t>(m) + 1];
    for (int i = 0; i < m; ++i) {
      acc -= phi[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(m - i)];
    }
    if (err <= 0.0) {
      throw NumericError("ar_fit: prediction error collapsed to zero");
    }
    const double k = acc / err;
    reflection[static_cast<std::size_t>(m)] = k;
    prev = phi;
    phi[static_cast<std::size_t>(m)] = k;
    for (int i = 0; i < m; ++i) {
      phi[static_cast<std::size_t>(i)] =
          prev[static_cast<std::size_t>(i)] - k * prev[static_cast<std::size_t>(m - 1 - i)];
    }
    err *= (1.0 - k * k);
  }

  ARModel model;
  model.coefficients.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    model.coefficients[static_cast<std::size_t>(i)] = -phi[static_cast<std::size_t>(i)];
  }
  model.reflection = std::move(reflection);
  model.noise_variance = err;
  return model;
}

double skewness(std::span<const double> x) {
  bool degenerate = false;
  return skewness(x, degenerate);
}

double skewness(std::span<const double> x, bool& degenerate) {
  if (x.size() < 2) throw std::invalid_argument("skewness: need at least 2 samples");
  const auto n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (m2 <= 0.0) {
    degenerate = true;
    return 0.0;
  }
  degenerate = false;
  return m3 / std::pow(m2, 1.5);
}

double waveform_length(std::span<const double> x) {
  if (x.size() < 2) {
    throw std::invalid_argument("waveform_length: need at least 2 samples");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    acc += std::abs(x[i + 1] - x[i]);
  }
  return acc;
}

double iav(std::span<const double> x) {
  require_nonempty(x, "iav");
  double acc = 0.0;
  for (double v : x) acc += std::abs(v);
  return acc;
}

std::vector<double> central_moments(std::span<const double> x, int max_order) {
  if (x.size() < 2) {
    throw std::invalid_argument("central_moments: need at least 2 samples");
  }
  if (max_order < 1) throw std::invalid_argument("central_moments: order must be >= 1");
  const auto n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;

  std::vector<double> moments(static_cast<std::size_t>(max_order), 0.0);
  moments[0] = mean;  // first entry is the raw mean; centered first moment is 0
  for (double v : x) {
    const double d = v - mean;
    double p = d;
    for (int k = 2; k <= max_order; ++k) {
      p *= d;
      moments[static_cast<std::size_t>(k) - 1] += p;
    }
  }
  for (int k = 2; k <= max_order; ++k) {
    moments[static_cast<std::size_t>(k) - 1] /= n;
  }
  return moments;
}

std::size_t features_per_channel(const FeatureConfig& cfg) {
  const int ar_terms = cfg.ar_full ? cfg.ar_order : 1;
  return static_cast<std::size_t>(7 + ar_terms + cfg.max_moment_order);
}

std::vector<std::string> feature_names(const FeatureConfig& cfg) {
  std::vector<std::string> names;
  names.reserve(2 * features_per_channel(cfg));
  for (const char* ch : {"chA", "chB"}) {
    const std::string p = std::string(ch) + "_";
    names.push_back(p + "rms");
    names.push_back(p + "mav");
    names.push_back(p + "zc");
    names.push_back(p + "ssc");
    if (cfg.ar_full) {
      for (int i = 1; i <= cfg.ar_order; ++i) {
        names.push_back(p + "ar" + std::to_string(i));
      }
    } else {
      names.push_back(p + "ar1");
    }
    names.push_back(p + "skew");
    names.push_back(p + "wl");
    names.push_back(p + "iav");
    for (int k = 1; k <= cfg.max_moment_order; ++k) {
      names.push_back(p + "m" + std::to_string(k));
    }
  }
  return names;
}

FeatureVector extract(const Recording& rec, const FeatureConfig& cfg) {
  validate(rec);

  FeatureVector fv;
  fv.label = rec.class_id;
  fv.subject = rec.subject_id;
  fv.trial = rec.trial_id;
  fv.values.reserve(2 * features_per_channel(cfg));

  for (int ch = 0; ch < 2; ++ch) {
    std::span<const double> x(rec.channels[static_cast<std::size_t>(ch)]);
    fv.values.push_back(rms(x));
    fv.values.push_back(mav(x));
    fv.values.push_back(static_cast<double>(zero_crossings(x, cfg.zc_threshold)));
    fv.values.push_back(static_cast<double>(slope_sign_changes(x, cfg.ssc_threshold)));

    ARModel ar;
    try {
      ar = ar_fit(x, cfg.ar_order);
    } catch (const NumericError&) {
      // Constant channel: the Yule-Walker system is degenerate; report zero
      // coefficients instead of failing the whole recording.
      ar.coefficients.assign(static_cast<std::size_t>(cfg.ar_order), 0.0);
      fv.warnings.push_back("channel " + std::string(ch == 0 ? "A" : "B") +
                            ": zero variance, AR coefficients set to 0");
    }
    if (cfg.ar_full) {
      fv.values.insert(fv.values.end(), ar.coefficients.begin(), ar.coefficients.end());
    } else {
      fv.values.push_back(ar.coefficients[0]);
    }

    bool degenerate = false;
    fv.values.push_back(skewness(x, degenerate));
    if (degenerate) {
      fv.warnings.push_back("channel " + std::string(ch == 0 ? "A" : "B") +
                            ": zero variance, skewness set to 0");
    }
    fv.values.push_back(waveform_length(x));
    fv.values.push_back(iav(x));

    const std::vector<double> moments = central_moments(x, cfg.max_moment_order);
    fv.values.insert(fv.values.end(), moments.begin(), moments.end());
  }
  return fv;
}

FeatureTable extract_table(const Dataset& ds, const FeatureConfig& cfg) {
  if (ds.recordings.empty()) throw DataError("extract: empty dataset");

  const std::size_t dim = 2 * features_per_channel(cfg);
  FeatureTable table;
  table.names = feature_names(cfg);
  table.x = Matrix(ds.size(), dim);
  table.labels.reserve(ds.size());
  table.provenance.reserve(ds.size());

  for (std::size_t r = 0; r < ds.size(); ++r) {
    const FeatureVector fv = extract(ds.recordings[r], cfg);
    for (std::size_t c = 0; c < dim; ++c) {
      table.x(r, c) = fv.values[c];
    }
    table.labels.push_back(fv.label);
    table.provenance.push_back({fv.subject, fv.trial});
  }
  return table;
}

}  // namespace emgpr
