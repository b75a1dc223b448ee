#include "emgpr/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "emgpr/errors.hpp"
#include "emgpr/rng.hpp"

namespace emgpr {

std::string to_string(Activation a) {
  switch (a) {
    case Activation::sigmoid: return "sigmoid";
    case Activation::tanh: return "tanh";
    case Activation::relu: return "relu";
    case Activation::leaky_relu: return "leaky_relu";
    case Activation::swish: return "swish";
  }
  return "?";
}

Activation activation_from_string(const std::string& name) {
  if (name == "sigmoid") return Activation::sigmoid;
  if (name == "tanh") return Activation::tanh;
  if (name == "relu") return Activation::relu;
  if (name == "leaky_relu") return Activation::leaky_relu;
  if (name == "swish") return Activation::swish;
  throw std::invalid_argument("unknown activation: " + name);
}

double activate(Activation fn, double x) {
  switch (fn) {
    case Activation::sigmoid:
      return 1.0 / (1.0 + std::exp(-x));
    case Activation::tanh:
      // tanh(x) = 2 sigmoid(2x) - 1
      return 2.0 / (1.0 + std::exp(-2.0 * x)) - 1.0;
    case Activation::relu:
      return x > 0.0 ? x : 0.0;
    case Activation::leaky_relu:
      return x > 0.0 ? x : 0.01 * x;
    case Activation::swish:
      return x / (1.0 + std::exp(-x));
  }
  throw std::invalid_argument("unknown activation");
}

double activate_derivative(Activation fn, double x) {
  switch (fn) {
    case Activation::sigmoid: {
      const double s = activate(Activation::sigmoid, x);
      return s * (1.0 - s);
    }
    case Activation::tanh: {
      const double t = activate(Activation::tanh, x);
      return 1.0 - t * t;
    }
    case Activation::relu:
      return x > 0.0 ? 1.0 : 0.0;
    case Activation::leaky_relu:
      return x > 0.0 ? 1.0 : 0.01;
    case Activation::swish: {
      const double s = 1.0 / (1.0 + std::exp(-x));
      return s + x * s * (1.0 - s);
    }
  }
  throw std::invalid_argument("unknown activation");
}

std::vector<double> softmax(std::span<const double> z) {
  if (z.empty()) throw std::invalid_argument("softmax: empty input");
  const double zmax = *std::max_element(z.begin(), z.end());
  std::vector<double> out(z.size());
  double total = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = std::exp(z[i] - zmax);
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

int perceptron_predict(const Perceptron& p, std::span<const double> x) {
  if (x.size() != p.weights.size()) {
    throw std::invalid_argument("perceptron: dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += p.weights[i] * x[i];
  return acc > p.threshold ? 1 : 0;
}

// ---------------------------------------------------------------------------
// MLP

MLPModel mlp_init(const std::vector<int>& layer_sizes, std::uint64_t seed,
                  Activation hidden_activation) {
  if (layer_sizes.size() < 2) {
    throw std::invalid_argument("mlp: need at least input and output layers");
  }
  for (int s : layer_sizes) {
    if (s < 1) throw std::invalid_argument("mlp: zero-width layer");
  }

  MLPModel model;
  model.layer_sizes = layer_sizes;
  model.hidden_activation = hidden_activation;
  model.seed = seed;

  RandomSource rng(derive_seed(seed, "init"));
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const auto fan_in = static_cast<std::size_t>(layer_sizes[l]);
    const auto fan_out = static_cast<std::size_t>(layer_sizes[l + 1]);
    // Xavier-uniform: U(-b, b) with b = sqrt(6 / (fan_in + fan_out)).
    const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Matrix w(fan_out, fan_in);
    for (double& v : w.data()) v = rng.uniform(-bound, bound);
    model.weights.push_back(std::move(w));
    model.biases.emplace_back(fan_out, 0.0);
  }
  return model;
}

namespace {

// Forward pass keeping the pre-activations; activations.back() is the
// softmax output.
void forward_cached(const MLPModel& model, std::span<const double> x,
                    std::vector<std::vector<double>>& activations,
                    std::vector<std::vector<double>>& pre) {
  activations.clear();
  pre.clear();
  activations.emplace_back(x.begin(), x.end());
  const std::size_t n_layers = model.weights.size();
  for (std::size_t l = 0; l < n_layers; ++l) {
    const Matrix& w = model.weights[l];
    std::vector<double> z(w.rows());
    for (std::size_t i = 0; i < w.rows(); ++i) {
      double acc = model.biases[l][i];
      for (std::size_t j = 0; j < w.cols(); ++j) acc += w(i, j) * activations[l][j];
      z[i] = acc;
    }
    pre.push_back(z);
    if (l + 1 == n_layers) {
      activations.push_back(softmax(z));
    } else {
      for (double& v : z) v = activate(model.hidden_activation, v);
      activations.push_back(std::move(z));
    }
  }
}

}  // namespace

std::vector<double> mlp_forward(const MLPModel& model, std::span<const double> x) {
  if (model.layer_sizes.empty() ||
      x.size() != static_cast<std::size_t>(model.layer_sizes.front())) {
    throw std::invalid_argument("mlp: input dimension mismatch");
  }
  std::vector<std::vector<double>> activations, pre;
  forward_cached(model, x, activations, pre);
  for (double v : activations.back()) {
    if (!std::isfinite(v)) throw NumericError("mlp: non-finite forward output");
  }
  return activations.back();
}

MLPGradients mlp_gradients(const MLPModel& model, const Matrix& x,
                           const std::vector<int>& y) {
  if (x.rows() != y.size()) throw std::invalid_argument("mlp: label count mismatch");
  if (x.rows() == 0) throw std::invalid_argument("mlp: empty batch");
  const std::size_t n_layers = model.weights.size();
  const int n_out = model.layer_sizes.back();

  MLPGradients grads;
  for (std::size_t l = 0; l < n_layers; ++l) {
    grads.dw.emplace_back(model.weights[l].rows(), model.weights[l].cols());
    grads.db.emplace_back(model.biases[l].size(), 0.0);
  }

  std::vector<std::vector<double>> activations, pre;
  for (std::size_t idx = 0; idx < x.rows(); ++idx) {
    forward_cached(model, x.row(idx), activations, pre);

    const int label = y[idx];
    if (label < 0 || label >= n_out) {
      throw std::invalid_argument("mlp: label out of range for output layer");
    }
    const double p = activations.back()[static_cast<std::size_t>(label)];
    grads.loss += -std::log(std::max(p, 1e-300));

    // Softmax + cross-entropy: top-layer delta is p - onehot(label).
    std::vector<double> delta = activations.back();
    delta[static_cast<std::size_t>(label)] -= 1.0;
    for (std::size_t l = n_layers; l-- > 0;) {
      for (std::size_t i = 0; i < delta.size(); ++i) {
        grads.db[l][i] += delta[i];
        for (std::size_t j = 0; j < model.weights[l].cols(); ++j) {
          grads.dw[l](i, j) += delta[i] * activations[l][j];
        }
      }
      if (l == 0) break;
      std::vector<double> prev(model.weights[l].cols(), 0.0);
      for (std::size_t j = 0; j < prev.size(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
          acc += model.weights[l](i, j) * delta[i];
        }
        prev[j] = acc * activate_derivative(model.hidden_activation, pre[l - 1][j]);
      }
      delta = std::move(prev);
    }
  }

  const double inv = 1.0 / static_cast<double>(x.rows());
  grads.loss *= inv;
  for (std::size_t l = 0; l < n_layers; ++l) {
    for (double& v : grads.dw[l].data()) v *= inv;
    for (double& v : grads.db[l]) v *= inv;
  }
  return grads;
}

double mlp_loss(const MLPModel& model, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() != y.size()) throw std::invalid_argument("mlp: label count mismatch");
  if (x.rows() == 0) throw std::invalid_argument("mlp: empty input");
  double total = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const std::vector<double> p = mlp_forward(model, x.row(i));
    total += -std::log(std::max(p[static_cast<std::size_t>(y[i])], 1e-300));
  }
  return total / static_cast<double>(x.rows());
}

MLPTrainResult mlp_train(const Matrix& x, const std::vector<int>& y,
                         int n_classes, const MLPTrainConfig& cfg) {
  if (x.rows() != y.size()) throw std::invalid_argument("mlp: label count mismatch");
  if (x.rows() == 0) throw std::invalid_argument("mlp: empty training set");
  if (n_classes < 2) throw std::invalid_argument("mlp: need at least 2 classes");
  if (cfg.epochs < 0) throw std::invalid_argument("mlp: negative epoch count");
  if (cfg.hidden_size < 1) throw std::invalid_argument("mlp: hidden size must be >= 1");
  if (cfg.learning_rate <= 0.0) {
    throw std::invalid_argument("mlp: learning rate must be positive");
  }
  if (cfg.momentum < 0.0 || cfg.momentum >= 1.0) {
    throw std::invalid_argument("mlp: momentum must be in [0, 1)");
  }
  if (cfg.batch_size < 1) throw std::invalid_argument("mlp: batch size must be >= 1");
  for (int label : y) {
    if (label < 0 || label >= n_classes) {
      throw std::invalid_argument("mlp: label out of range");
    }
  }

  MLPTrainResult result;
  result.model = mlp_init({static_cast<int>(x.cols()), cfg.hidden_size, n_classes},
                          cfg.seed, cfg.hidden_activation);
  MLPModel& model = result.model;

  result.loss_curve.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
  result.loss_curve.push_back(mlp_loss(model, x, y));

  // Momentum buffers mirror the parameter shapes.
  std::vector<Matrix> vel_w;
  std::vector<std::vector<double>> vel_b;
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    vel_w.emplace_back(model.weights[l].rows(), model.weights[l].cols());
    vel_b.emplace_back(model.biases[l].size(), 0.0);
  }

  RandomSource shuffle_rng(derive_seed(cfg.seed, "shuffle"));
  std::vector<std::size_t> order(x.rows());
  std::iota(order.begin(), order.end(), 0);

  const std::size_t batch_size =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.batch_size), x.rows());
  Matrix batch_x(batch_size, x.cols());
  std::vector<int> batch_y(batch_size);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffle_inplace(order, shuffle_rng);
    double epoch_loss = 0.0;
    std::size_t n_batches = 0;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t count = std::min(batch_size, order.size() - start);
      if (batch_x.rows() != count) {
        batch_x = Matrix(count, x.cols());
        batch_y.resize(count);
      }
      for (std::size_t r = 0; r < count; ++r) {
        const std::size_t src = order[start + r];
        std::copy(x.row(src).begin(), x.row(src).end(), batch_x.row(r).begin());
        batch_y[r] = y[src];
      }

      const MLPGradients grads = mlp_gradients(model, batch_x, batch_y);
      if (!std::isfinite(grads.loss)) {
        throw NumericError("mlp: loss diverged at epoch " + std::to_string(epoch));
      }
      epoch_loss += grads.loss;
      ++n_batches;
      for (std::size_t l = 0; l < model.weights.size(); ++l) {
        auto& vw = vel_w[l].data();
        const auto& gw = grads.dw[l].data();
        auto& w = model.weights[l].data();
        for (std::size_t i = 0; i < w.size(); ++i) {
          vw[i] = cfg.momentum * vw[i] - cfg.learning_rate * gw[i];
          w[i] += vw[i];
        }
        for (std::size_t i = 0; i < model.biases[l].size(); ++i) {
          vel_b[l][i] = cfg.momentum * vel_b[l][i] - cfg.learning_rate * grads.db[l][i];
          model.biases[l][i] += vel_b[l][i];
        }
      }
    }
    result.loss_curve.push_back(epoch_loss / static_cast<double>(n_batches));
  }
  return result;
}

// ---------------------------------------------------------------------------
// SVM

std::string to_string(Kernel k) {
  return k == Kernel::linear ? "linear" : "rbf";
}

Kernel kernel_from_string(const std::string& name) {
  if (name == "linear") return Kernel::linear;
  if (name == "rbf") return Kernel::rbf;
  throw std::invalid_argument("unknown kernel: " + name);
}

double kernel_eval(Kernel kernel, double gamma, std::span<const double> a,
                   std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("kernel: dimension mismatch");
  if (kernel == Kernel::linear) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  }
  double dist2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    dist2 += d * d;
  }
  return std::exp(-gamma * dist2);
}

namespace {

double resolve_gamma(const SVMConfig& cfg, const Matrix& x) {
  if (cfg.gamma > 0.0) return cfg.gamma;
  // gamma = 1 / (d * Var(X)), variance pooled over every entry.
  double mean = 0.0;
  for (double v : x.data()) mean += v;
  mean /= static_cast<double>(x.data().size());
  double var = 0.0;
  for (double v : x.data()) var += (v - mean) * (v - mean);
  var /= static_cast<double>(x.data().size());
  if (var <= 1e-12) var = 1.0;
  return 1.0 / (static_cast<double>(x.cols()) * var);
}

}  // namespace

SVMBinary svm_train_binary(const Matrix& x, const std::vector<int>& y,
                           const SVMConfig& cfg) {
  const std::size_t n = x.rows();
  if (n != y.size()) throw std::invalid_argument("svm: label count mismatch");
  if (n < 2) throw std::invalid_argument("svm: need at least 2 samples");
  bool has_pos = false, has_neg = false;
  for (int label : y) {
    if (label == 1) has_pos = true;
    else if (label == -1) has_neg = true;
    else throw std::invalid_argument("svm: labels must be +1/-1");
  }
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("svm: need both classes present");
  }
  if (cfg.c <= 0.0) throw std::invalid_argument("svm: C must be positive");
  if (cfg.max_passes < 1) throw std::invalid_argument("svm: max_passes must be >= 1");

  const double gamma = resolve_gamma(cfg, x);
  const double c = cfg.c;
  const double tol = cfg.tolerance;

  // Gram matrix up front: n stays small here, and O(n^2) memory beats
  // re-evaluating rbf kernels inside the SMO loop.
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double kij = kernel_eval(cfg.kernel, gamma, x.row(i), x.row(j));
      gram(i, j) = kij;
      gram(j, i) = kij;
    }
  }

  std::vector<double> alpha(n, 0.0);
  double b = 0.0;
  const auto f = [&](std::size_t i) {
    double acc = b;
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] != 0.0) acc += alpha[j] * y[j] * gram(j, i);
    }
    return acc;
  };

  RandomSource rng(derive_seed(cfg.seed, "smo"));

  // One constrained coordinate-pair step; true when alpha actually moved.
  const auto try_pair = [&](std::size_t i, std::size_t j, double ei) {
    const double ej = f(j) - y[j];
    const double ai_old = alpha[i];
    const double aj_old = alpha[j];

    double lo, hi;
    if (y[i] != y[j]) {
      lo = std::max(0.0, aj_old - ai_old);
      hi = std::min(c, c + aj_old - ai_old);
    } else {
      lo = std::max(0.0, ai_old + aj_old - c);
      hi = std::min(c, ai_old + aj_old);
    }
    if (hi - lo < 1e-12) return false;

    const double eta = 2.0 * gram(i, j) - gram(i, i) - gram(j, j);
    if (eta >= 0.0) return false;

    double aj = aj_old - y[j] * (ei - ej) / eta;
    aj = std::clamp(aj, lo, hi);
    if (std::abs(aj - aj_old) < 1e-7) return false;

    const double ai = ai_old + y[i] * y[j] * (aj_old - aj);

    const double b1 = b - ei - y[i] * (ai - ai_old) * gram(i, i) -
                      y[j] * (aj - aj_old) * gram(i, j);
    const double b2 = b - ej - y[i] * (ai - ai_old) * gram(i, j) -
                      y[j] * (aj - aj_old) * gram(j, j);
    if (ai > 0.0 && ai < c) {
      b = b1;
    } else if (aj > 0.0 && aj < c) {
      b = b2;
    } else {
      b = 0.5 * (b1 + b2);
    }

    alpha[i] = ai;
    alpha[j] = aj;
    return true;
  };

  // Recenter the bias on the margin vectors (0 < alpha < C), for which the
  // optimum demands y*f = 1 exactly; keeps the violation checks honest.
  const auto settle_bias = [&] {
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] > 1e-9 && alpha[i] < c - 1e-9) {
        acc += y[i] - (f(i) - b);
        ++count;
      }
    }
    if (count > 0) b = acc / static_cast<double>(count);
  };

  // Simplified SMO: sweep every first index, draw the partner at random,
  // stop after max_passes consecutive sweeps without an alpha update. A
  // stalled draw (degenerate box, eta >= 0, sub-threshold step) must not
  // silence a live violation, so it falls back to scanning the partners.
  int quiet_passes = 0;
  long sweeps = 0;
  const long max_sweeps = 200L * std::max(cfg.max_passes, 1);
  while (quiet_passes < cfg.max_passes) {
    int changed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ei = f(i) - y[i];
      const bool violates = (y[i] * ei < -tol && alpha[i] < c) ||
                            (y[i] * ei > tol && alpha[i] > 0.0);
      if (!violates) continue;

      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;  // uniform over the other n-1 indices

      bool moved = try_pair(i, j, ei);
      for (std::size_t k = 0; !moved && k < n; ++k) {
        if (k == i || k == j) continue;
        moved = try_pair(i, k, ei);
      }
      if (moved) ++changed;
    }
    settle_bias();
    quiet_passes = changed == 0 ? quiet_passes + 1 : 0;
    if (++sweeps > max_sweeps) {
      throw NumericError("svm: SMO failed to converge");
    }
  }

  std::vector<std::size_t> sv;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] > 1e-9) sv.push_back(i);
  }

  SVMBinary model;
  model.kernel = cfg.kernel;
  model.gamma = gamma;
  model.c = c;
  model.bias = b;
  model.support_vectors = Matrix(sv.size(), x.cols());
  model.dual_coefficients.resize(sv.size());
  for (std::size_t r = 0; r < sv.size(); ++r) {
    std::copy(x.row(sv[r]).begin(), x.row(sv[r]).end(),
              model.support_vectors.row(r).begin());
    model.dual_coefficients[r] = alpha[sv[r]] * y[sv[r]];
  }
  return model;
}

double svm_decision(const SVMBinary& model, std::span<const double> x) {
  double acc = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.rows(); ++i) {
    acc += model.dual_coefficients[i] *
           kernel_eval(model.kernel, model.gamma, model.support_vectors.row(i), x);
  }
  return acc;
}

SVMMulticlass svm_train_multiclass(const Matrix& x, const std::vector<int>& y,
                                   int n_classes, const SVMConfig& cfg) {
  if (n_classes < 2) throw std::invalid_argument("svm: need at least 2 classes");
  if (x.rows() != y.size()) throw std::invalid_argument("svm: label count mismatch");
  std::vector<char> present(static_cast<std::size_t>(n_classes), 0);
  for (int label : y) {
    if (label < 0 || label >= n_classes) {
      throw std::invalid_argument("svm: label out of range");
    }
    present[static_cast<std::size_t>(label)] = 1;
  }
  for (int c = 0; c < n_classes; ++c) {
    if (!present[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("svm: class " + std::to_string(c) +
                                  " absent from training data");
    }
  }

  SVMMulticlass mc;
  mc.n_classes = n_classes;

  if (cfg.one_vs_rest) {
    std::vector<int> ovr_y(y.size());
    for (int c = 0; c < n_classes; ++c) {
      for (std::size_t i = 0; i < y.size(); ++i) ovr_y[i] = y[i] == c ? 1 : -1;
      SVMConfig sub_cfg = cfg;
      sub_cfg.seed = derive_seed(cfg.seed, "ovr", static_cast<std::uint64_t>(c));
      mc.models.push_back(svm_train_binary(x, ovr_y, sub_cfg));
      mc.pairs.emplace_back(c, -1);
    }
    return mc;
  }

  std::uint64_t pair_index = 0;
  for (int a = 0; a < n_classes; ++a) {
    for (int b = a + 1; b < n_classes; ++b, ++pair_index) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == a || y[i] == b) rows.push_back(i);
      }

      Matrix sub(rows.size(), x.cols());
      std::vector<int> sub_y(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::copy(x.row(rows[r]).begin(), x.row(rows[r]).end(), sub.row(r).begin());
        sub_y[r] = y[rows[r]] == a ? 1 : -1;
      }

      SVMConfig pair_cfg = cfg;
      pair_cfg.seed = derive_seed(cfg.seed, "pair", pair_index);
      mc.models.push_back(svm_train_binary(sub, sub_y, pair_cfg));
      mc.pairs.emplace_back(a, b);
    }
  }
  return mc;
}

int predict_one(const SVMMulticlass& model, std::span<const double> x) {
  const auto n = static_cast<std::size_t>(model.n_classes);

  if (!model.pairs.empty() && model.pairs.front().second < 0) {
    // One-vs-rest: the class whose machine is most confident wins.
    int best = 0;
    double best_decision = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < model.models.size(); ++m) {
      const double d = svm_decision(model.models[m], x);
      if (d > best_decision) {
        best_decision = d;
        best = model.pairs[m].first;
      }
    }
    return best;
  }

  std::vector<int> votes(n, 0);
  std::vector<double> magnitude(n, 0.0);
  for (std::size_t m = 0; m < model.models.size(); ++m) {
    const double d = svm_decision(model.models[m], x);
    const auto [a, b] = model.pairs[m];
    const int winner = d >= 0.0 ? a : b;
    votes[static_cast<std::size_t>(winner)] += 1;
    magnitude[static_cast<std::size_t>(winner)] += std::abs(d);
  }
  // Most votes; ties break on accumulated |decision|, then lowest index.
  std::size_t best = 0;
  for (std::size_t c = 1; c < n; ++c) {
    if (votes[c] > votes[best] ||
        (votes[c] == votes[best] && magnitude[c] > magnitude[best])) {
      best = c;
    }
  }
  return static_cast<int>(best);
}

int predict_one(const MLPModel& model, std::span<const double> x) {
  const std::vector<double> p = mlp_forward(model, x);
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

std::vector<int> predict(const SVMMulticlass& model, const Matrix& x) {
  std::vector<int> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_one(model, x.row(i));
  return out;
}

std::vector<int> predict(const MLPModel& model, const Matrix& x) {
  std::vector<int> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_one(model, x.row(i));
  return out;
}

}  // namespace emgpr
