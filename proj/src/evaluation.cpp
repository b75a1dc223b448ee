#include "emgpr/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "emgpr/errors.hpp"

namespace emgpr {

std::string to_string(ChannelSelect c) {
  switch (c) {
    case ChannelSelect::a: return "A";
    case ChannelSelect::b: return "B";
    case ChannelSelect::ab: return "AB";
  }
  return "?";
}

std::string to_string(ReducerChoice r) {
  switch (r) {
    case ReducerChoice::pca: return "pca";
    case ReducerChoice::lda: return "lda";
    case ReducerChoice::none: return "none";
  }
  return "?";
}

std::string to_string(ClassifierChoice c) {
  return c == ClassifierChoice::svm ? "svm" : "ann";
}

ChannelSelect channel_from_string(const std::string& s) {
  if (s == "A" || s == "a") return ChannelSelect::a;
  if (s == "B" || s == "b") return ChannelSelect::b;
  if (s == "AB" || s == "ab") return ChannelSelect::ab;
  throw std::invalid_argument("unknown channel selection: " + s);
}

ReducerChoice reducer_from_string(const std::string& s) {
  if (s == "pca") return ReducerChoice::pca;
  if (s == "lda") return ReducerChoice::lda;
  if (s == "none") return ReducerChoice::none;
  throw std::invalid_argument("unknown reducer: " + s);
}

ClassifierChoice classifier_from_string(const std::string& s) {
  if (s == "svm") return ClassifierChoice::svm;
  if (s == "ann" || s == "mlp") return ClassifierChoice::ann;
  throw std::invalid_argument("unknown classifier: " + s);
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& actual) {
  if (predicted.size() != actual.size()) {
    throw std::invalid_argument("accuracy: size mismatch");
  }
  if (predicted.empty()) throw std::invalid_argument("accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == actual[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

ConfusionResult confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual, int n_classes) {
  if (predicted.size() != actual.size()) {
    throw std::invalid_argument("confusion: size mismatch");
  }
  if (n_classes < 1) throw std::invalid_argument("confusion: n_classes must be >= 1");
  const auto nc = static_cast<std::size_t>(n_classes);

  ConfusionResult result;
  result.raw = Matrix(nc, nc);
  result.support.assign(nc, 0);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const int a = actual[i];
    const int p = predicted[i];
    if (a < 0 || a >= n_classes || p < 0 || p >= n_classes) {
      throw std::invalid_argument("confusion: label out of range");
    }
    result.raw(static_cast<std::size_t>(a), static_cast<std::size_t>(p)) += 1.0;
    result.support[static_cast<std::size_t>(a)] += 1;
  }

  // Row-normalize; a class with no test samples keeps an all-zero row and
  // is flagged instead of dividing by zero.
  result.normalized = Matrix(nc, nc);
  for (std::size_t row = 0; row < nc; ++row) {
    if (result.support[row] == 0) {
      result.empty_classes.push_back(static_cast<int>(row));
      continue;
    }
    for (std::size_t j = 0; j < nc; ++j) {
      result.normalized(row, j) =
          result.raw(row, j) / static_cast<double>(result.support[row]);
    }
  }
  return result;
}

namespace {

std::vector<double> raw_vector(const Recording& rec, const PipelineConfig& cfg) {
  const auto step = static_cast<std::size_t>(std::max(cfg.raw_decimation, 1));
  std::vector<double> out;
  const auto take = [&](const std::vector<double>& ch) {
    for (std::size_t i = 0; i < ch.size(); i += step) out.push_back(ch[i]);
  };
  switch (cfg.channels) {
    case ChannelSelect::a:
      take(rec.channels[0]);
      break;
    case ChannelSelect::b:
      take(rec.channels[1]);
      break;
    case ChannelSelect::ab:
      take(rec.channels[0]);
      take(rec.channels[1]);
      break;
  }
  return out;
}

}  // namespace

std::pair<Matrix, std::vector<int>> vectorize(const Dataset& ds,
                                              const PipelineConfig& cfg) {
  if (ds.recordings.empty()) throw DataError("vectorize: empty dataset");

  std::vector<int> labels;
  labels.reserve(ds.size());

  if (cfg.use_features) {
    FeatureTable table = extract_table(ds, cfg.features);
    if (cfg.channels == ChannelSelect::ab) {
      return {std::move(table.x), std::move(table.labels)};
    }
    // Per-channel blocks are laid out [chA | chB]; keep one of them.
    const std::size_t half = table.x.cols() / 2;
    const std::size_t offset = cfg.channels == ChannelSelect::a ? 0 : half;
    Matrix out(table.x.rows(), half);
    for (std::size_t i = 0; i < table.x.rows(); ++i) {
      for (std::size_t j = 0; j < half; ++j) out(i, j) = table.x(i, offset + j);
    }
    return {std::move(out), std::move(table.labels)};
  }

  // Raw mode: decimated samples; trials must share a length.
  const std::size_t len = ds.recordings.front().length();
  for (const Recording& rec : ds.recordings) {
    if (rec.length() != len) {
      throw DataError("vectorize: raw mode needs equal-length trials");
    }
  }
  const std::vector<double> first = raw_vector(ds.recordings.front(), cfg);
  Matrix out(ds.size(), first.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::vector<double> v = raw_vector(ds.recordings[i], cfg);
    std::copy(v.begin(), v.end(), out.row(i).begin());
    labels.push_back(ds.recordings[i].class_id);
  }
  return {std::move(out), std::move(labels)};
}

Standardizer standardizer_fit(const Matrix& x) {
  Standardizer st;
  st.mean = column_means(x);
  st.scale.assign(x.cols(), 1.0);
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const double d = x(i, j) - st.mean[j];
      acc += d * d;
    }
    const double sd =
        std::sqrt(acc / static_cast<double>(x.rows() > 1 ? x.rows() - 1 : 1));
    st.scale[j] = sd > 1e-12 ? sd : 1.0;
  }
  return st;
}

Matrix standardizer_apply(const Standardizer& st, const Matrix& x) {
  if (x.cols() != st.mean.size()) {
    throw std::invalid_argument("standardizer: dimension mismatch");
  }
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      out(i, j) = (x(i, j) - st.mean[j]) / st.scale[j];
    }
  }
  return out;
}

FittedPipeline fit_pipeline(const Dataset& train, const PipelineConfig& cfg) {
  FittedPipeline fitted;
  fitted.config = cfg;

  auto [x, labels] = vectorize(train, cfg);

  if (cfg.standardize) {
    fitted.standardizer = standardizer_fit(x);
    x = standardizer_apply(*fitted.standardizer, x);
  }

  if (cfg.reducer != ReducerChoice::none) {
    // Standardization already happened at the pipeline level, so the
    // reducer-level flag stays off.
    fitted.projector = cfg.reducer == ReducerChoice::pca
                           ? pca_fit(x, cfg.k, false)
                           : lda_fit(x, labels, cfg.k, false);
    x = transform(*fitted.projector, x);
  }

  if (cfg.classifier == ClassifierChoice::ann) {
    fitted.mlp = mlp_train(x, labels, kNumClasses, cfg.mlp);
  } else {
    fitted.svm = svm_train_multiclass(x, labels, kNumClasses, cfg.svm);
  }
  return fitted;
}

EvaluationReport evaluate_pipeline(const FittedPipeline& fitted, const Dataset& test) {
  auto [x, labels] = vectorize(test, fitted.config);
  if (fitted.standardizer) x = standardizer_apply(*fitted.standardizer, x);
  if (fitted.projector) x = transform(*fitted.projector, x);

  const std::vector<int> predicted =
      fitted.mlp ? predict(fitted.mlp->model, x) : predict(*fitted.svm, x);

  EvaluationReport report;
  report.config = fitted.config;
  report.n_test = test.size();
  report.accuracy = accuracy(predicted, labels);
  ConfusionResult cm = confusion(predicted, labels, kNumClasses);
  report.confusion_raw = std::move(cm.raw);
  report.confusion_normalized = std::move(cm.normalized);
  report.per_class_support = std::move(cm.support);
  if (fitted.mlp) report.loss_curve = fitted.mlp->loss_curve;
  return report;
}

PipelineOutcome run_pipeline(const Dataset& ds, const PipelineConfig& cfg) {
  if (cfg.split.n_train + cfg.split.n_test != ds.size()) {
    throw std::invalid_argument(
        "pipeline: split sizes do not match the dataset (" +
        std::to_string(cfg.split.n_train) + "+" + std::to_string(cfg.split.n_test) +
        " vs " + std::to_string(ds.size()) + ")");
  }
  auto [train, test] = stratified_split(ds, cfg.split);

  PipelineOutcome outcome;
  outcome.fitted = fit_pipeline(train, cfg);
  outcome.report = evaluate_pipeline(outcome.fitted, test);
  outcome.report.n_train = train.size();
  return outcome;
}

namespace {

void require_strictly_increasing(const std::vector<int>& xs, const char* what) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] <= xs[i]) {
      throw std::invalid_argument(std::string("sweep: ") + what +
                                  " must be strictly increasing");
    }
  }
}

}  // namespace

SweepResult sweep_components(const Dataset& ds, const std::vector<int>& ks,
                             const PipelineConfig& base) {
  if (ks.empty()) throw std::invalid_argument("sweep: no component counts");
  require_strictly_increasing(ks, "component counts");
  if (base.reducer == ReducerChoice::none) {
    throw std::invalid_argument("sweep: component sweep needs a reducer");
  }

  std::vector<int> usable = ks;
  if (base.reducer == ReducerChoice::lda) {
    // The Fisher criterion caps the output dimension at C - 1.
    std::erase_if(usable, [](int k) { return k > kNumClasses - 1; });
    if (usable.empty()) {
      throw std::invalid_argument("sweep: no component counts within the LDA rank bound");
    }
  }

  SweepResult result;
  result.axis = "components";
  result.config = base;
  for (int k : usable) {
    if (k < 1) throw std::invalid_argument("sweep: component counts must be >= 1");
    PipelineConfig cfg = base;
    cfg.k = k;
    const PipelineOutcome out = run_pipeline(ds, cfg);
    result.points.push_back({k, out.report.accuracy});
  }
  return result;
}

SweepResult sweep_split(const Dataset& ds, const std::vector<int>& train_sizes,
                        const PipelineConfig& base) {
  if (train_sizes.empty()) throw std::invalid_argument("sweep: no train sizes");
  require_strictly_increasing(train_sizes, "train sizes");

  SweepResult result;
  result.axis = "split";
  result.config = base;
  for (int n_train : train_sizes) {
    if (n_train < 1 || static_cast<std::size_t>(n_train) >= ds.size()) {
      throw std::invalid_argument("sweep: train size out of range");
    }
    PipelineConfig cfg = base;
    cfg.split.n_train = static_cast<std::size_t>(n_train);
    cfg.split.n_test = ds.size() - cfg.split.n_train;
    const PipelineOutcome out = run_pipeline(ds, cfg);
    result.points.push_back({n_train, out.report.accuracy});
  }
  return result;
}

std::string ascii_heatmap(const Matrix& normalized,
                          const std::vector<std::string>& names) {
  if (normalized.rows() != normalized.cols() || normalized.rows() != names.size()) {
    throw std::invalid_argument("heatmap: shape mismatch");
  }
  // Shade buckets from empty to full; darker = larger.
  const char* shades = " .:-=+*#%@";

  std::size_t width = 0;
  for (const auto& n : names) width = std::max(width, n.size());

  std::string out;
  out.append(width, ' ');
  out += " | ";
  for (const auto& name : names) {
    out += name[0];
    out += ' ';
  }
  out += "\n";
  out.append(width, ' ');
  out += "-+-";
  out.append(2 * names.size(), '-');
  out += "\n";
  for (std::size_t i = 0; i < normalized.rows(); ++i) {
    out += names[i];
    out.append(width - names[i].size(), ' ');
    out += " | ";
    for (std::size_t j = 0; j < normalized.cols(); ++j) {
      const double v = std::clamp(normalized(i, j), 0.0, 1.0);
      const int bucket = std::min(9, static_cast<int>(v * 10.0));
      out += shades[bucket];
      out += ' ';
    }
    char pct[16];
    std::snprintf(pct, sizeof(pct), "%5.1f%%", 100.0 * normalized(i, i));
    out += ' ';
    out += pct;
    out += "\n";
  }
  return out;
}

}  // namespace emgpr
