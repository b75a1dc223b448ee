#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emgpr/linalg.hpp"

namespace emgpr {

// ---------------------------------------------------------------------------
// Activations

enum class Activation { sigmoid, tanh, relu, leaky_relu, swish };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

double activate(Activation a, double x);
/// Derivative with respect to the pre-activation input.
double activate_derivative(Activation a, double x);

/// Numerically stable softmax (max subtraction); sums to 1.
std::vector<double> softmax(std::span<const double> z);

// ---------------------------------------------------------------------------
// Single-layer perceptron

struct Perceptron {
  std::vector<double> weights;
  double threshold = 0.0;
};

/// Fires (returns 1) iff weights . x > threshold.
int perceptron_predict(const Perceptron& p, std::span<const double> x);

// ---------------------------------------------------------------------------
// Multi-layer perceptron

struct MLPModel {
  std::vector<int> layer_sizes;  // input, hidden..., output
  std::vector<Matrix> weights;   // weights[l] is layer_sizes[l+1] x layer_sizes[l]
  std::vector<std::vector<double>> biases;
  Activation hidden_activation = Activation::tanh;
  std::uint64_t seed = 42;
};

struct MLPTrainConfig {
  int hidden_size = 32;
  int epochs = 200;
  double learning_rate = 0.05;
  double momentum = 0.9;
  int batch_size = 16;
  Activation hidden_activation = Activation::tanh;
  std::uint64_t seed = 42;
};

/// Xavier-uniform weights (bound sqrt(6/(fan_in+fan_out))), zero biases.
MLPModel mlp_init(const std::vector<int>& layer_sizes, std::uint64_t seed,
                  Activation hidden_activation = Activation::tanh);

/// Class-probability vector (softmax output).
std::vector<double> mlp_forward(const MLPModel& m, std::span<const double> x);

struct MLPGradients {
  double loss = 0.0;  // mean cross-entropy over the batch
  std::vector<Matrix> dw;
  std::vector<std::vector<double>> db;
};

/// Mean cross-entropy and its gradients over a batch; the backprop core.
MLPGradients mlp_gradients(const MLPModel& m, const Matrix& x,
                           const std::vector<int>& y);

double mlp_loss(const MLPModel& m, const Matrix& x, const std::vector<int>& y);

struct MLPTrainResult {
  MLPModel model;
  std::vector<double> loss_curve;  // entry 0 is the pre-training loss
};

/// Mini-batch gradient descent with momentum on cross-entropy.
MLPTrainResult mlp_train(const Matrix& x, const std::vector<int>& y,
                         int n_classes, const MLPTrainConfig& cfg);

// ---------------------------------------------------------------------------
// Support vector machine

enum class Kernel { linear, rbf };

std::string to_string(Kernel k);
Kernel kernel_from_string(const std::string& name);

/// K(a, b): dot product for linear, exp(-gamma |a-b|^2) for rbf.
double kernel_eval(Kernel k, double gamma, std::span<const double> a,
                   std::span<const double> b);

struct SVMConfig {
  double c = 10.0;
  Kernel kernel = Kernel::rbf;
  double gamma = 0.0;  // <= 0: resolved to 1 / (d * Var(X)) at training time
  double tolerance = 1e-3;
  int max_passes = 10;
  bool one_vs_rest = false;  // default scheme is one-vs-one voting
  std::uint64_t seed = 42;
};

struct SVMBinary {
  Matrix support_vectors;
  std::vector<double> dual_coefficients;  // alpha_i * y_i
  double bias = 0.0;
  Kernel kernel = Kernel::rbf;
  double gamma = 0.0;  // resolved value
  double c = 1.0;
};

/// Soft-margin SVM trained by simplified SMO (random second index, seeded);
/// stops after `max_passes` sweeps without an alpha update. Labels are +/-1.
SVMBinary svm_train_binary(const Matrix& x, const std::vector<int>& y,
                           const SVMConfig& cfg);

/// f(x) = sum_i alpha_i y_i K(s_i, x) + b.
double svm_decision(const SVMBinary& m, std::span<const double> x);

struct SVMMulticlass {
  int n_classes = 0;
  std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b; (c, -1) when
                                           // trained one-vs-rest
  std::vector<SVMBinary> models;           // one per pair
};

/// One-vs-one: C(C-1)/2 binary machines, majority vote, ties broken by
/// summed |decision| then lowest class index.
SVMMulticlass svm_train_multiclass(const Matrix& x, const std::vector<int>& y,
                                   int n_classes, const SVMConfig& cfg);

int predict_one(const SVMMulticlass& m, std::span<const double> x);
int predict_one(const MLPModel& m, std::span<const double> x);

std::vector<int> predict(const SVMMulticlass& m, const Matrix& x);
std::vector<int> predict(const MLPModel& m, const Matrix& x);

}  // namespace emgpr
