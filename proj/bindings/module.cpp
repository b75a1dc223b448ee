#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "emgpr/classifiers.hpp"
#include "emgpr/dataset.hpp"
#include "emgpr/dimred.hpp"
#include "emgpr/errors.hpp"
#include "emgpr/evaluation.hpp"
#include "emgpr/features.hpp"
#include "emgpr/linalg.hpp"

namespace py = pybind11;
using namespace emgpr;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix matrix_from_rows(const Rows& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rows matrix_to_rows(const Matrix& m) {
  Rows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].assign(m.row(i).begin(), m.row(i).end());
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "EMG pattern-recognition core: time-domain features, PCA/LDA "
      "projections, SVM and MLP classifiers, and evaluation pipelines.";
  m.attr("__version__") = "0.1.0";
  m.attr("NUM_CLASSES") = kNumClasses;

  py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  // ---------------------------------------------------------------------
  // Dataset

  py::class_<Recording>(m, "Recording",
                        "One trial: two equal-length channels of EMG samples "
                        "in millivolts.")
      .def(py::init([](int subject, int label, int trial,
                       std::vector<double> channel_a,
                       std::vector<double> channel_b) {
             Recording rec;
             rec.subject_id = subject;
             rec.class_id = label;
             rec.trial_id = trial;
             rec.channels[0] = std::move(channel_a);
             rec.channels[1] = std::move(channel_b);
             validate(rec);
             return rec;
           }),
           py::arg("subject"), py::arg("label"), py::arg("trial"),
           py::arg("channel_a"), py::arg("channel_b"))
      .def_readwrite("subject_id", &Recording::subject_id)
      .def_readwrite("class_id", &Recording::class_id)
      .def_readwrite("trial_id", &Recording::trial_id)
      .def_property(
          "channel_a", [](const Recording& r) { return r.channels[0]; },
          [](Recording& r, std::vector<double> v) { r.channels[0] = std::move(v); })
      .def_property(
          "channel_b", [](const Recording& r) { return r.channels[1]; },
          [](Recording& r, std::vector<double> v) { r.channels[1] = std::move(v); })
      .def("__len__", &Recording::length);

  py::class_<Dataset>(m, "Dataset",
                      "Recording collection; `recordings` copies on access, "
                      "so mutate a list and assign it back.")
      .def(py::init<>())
      .def(py::init([](std::vector<Recording> recordings) {
             Dataset ds;
             ds.recordings = std::move(recordings);
             return ds;
           }),
           py::arg("recordings"))
      .def_readwrite("recordings", &Dataset::recordings)
      .def("__len__", &Dataset::size)
      .def_static("class_names", [] {
        const auto& names = Dataset::class_names();
        return std::vector<std::string>(names.begin(), names.end());
      });

  m.def(
      "synth_dataset",
      [](int subjects, int trials, int samples, std::uint64_t seed,
         double peak_mv, double noise_sigma, bool flat_envelope) {
        SynthConfig cfg;
        cfg.n_subjects = subjects;
        cfg.n_trials = trials;
        cfg.samples_per_trial = samples;
        cfg.seed = seed;
        cfg.peak_mv = peak_mv;
        cfg.noise_sigma = noise_sigma;
        cfg.flat_envelope = flat_envelope;
        return synth_generate(cfg);
      },
      py::arg("subjects") = 8, py::arg("trials") = 6,
      py::arg("samples") = 20000, py::arg("seed") = 42,
      py::arg("peak_mv") = 10.0, py::arg("noise_sigma") = 0.05,
      py::arg("flat_envelope") = false,
      "Deterministic synthetic surrogate dataset (10 classes).");

  m.def("load_dataset", &load_dataset, py::arg("root"),
        "Load `<root>/s<subject>/c<class>/t<trial>.csv` recordings.");
  m.def("write_dataset", &write_dataset, py::arg("dataset"), py::arg("root"),
        "Write a dataset in the same layout load_dataset reads.");

  m.def(
      "split",
      [](const Dataset& ds, std::size_t n_train, std::size_t n_test,
         std::uint64_t seed, bool stratified) {
        SplitSpec spec;
        spec.n_train = n_train;
        spec.n_test = n_test;
        spec.seed = seed;
        spec.stratified = stratified;
        return stratified_split(ds, spec);
      },
      py::arg("dataset"), py::arg("n_train"), py::arg("n_test"),
      py::arg("seed") = 42, py::arg("stratified") = true,
      "Seeded disjoint train/test partition; returns (train, test).");

  // ---------------------------------------------------------------------
  // Features

  m.def("rms", [](const std::vector<double>& x) { return rms(x); }, py::arg("x"));
  m.def("mav", [](const std::vector<double>& x) { return mav(x); }, py::arg("x"));
  m.def("iav", [](const std::vector<double>& x) { return iav(x); }, py::arg("x"));
  m.def(
      "waveform_length",
      [](const std::vector<double>& x) { return waveform_length(x); },
      py::arg("x"));
  m.def(
      "zero_crossings",
      [](const std::vector<double>& x, double threshold) {
        return zero_crossings(x, threshold);
      },
      py::arg("x"), py::arg("threshold") = 0.0);
  m.def(
      "slope_sign_changes",
      [](const std::vector<double>& x, double threshold) {
        return slope_sign_changes(x, threshold);
      },
      py::arg("x"), py::arg("threshold") = 0.0);
  m.def(
      "skewness", [](const std::vector<double>& x) { return skewness(x); },
      py::arg("x"));
  m.def(
      "central_moments",
      [](const std::vector<double>& x, int max_order) {
        return central_moments(x, max_order);
      },
      py::arg("x"), py::arg("max_order") = 7,
      "Entry 1 is the raw mean; entries 2..max_order are population central "
      "moments.");

  py::class_<ARModel>(m, "ARModel",
                      "Autoregressive fit in the x_n = -sum a_i x_{n-i} + w_n "
                      "convention.")
      .def_readonly("coefficients", &ARModel::coefficients)
      .def_readonly("noise_variance", &ARModel::noise_variance)
      .def_readonly("reflection", &ARModel::reflection);
  m.def(
      "ar_fit",
      [](const std::vector<double>& x, int order) { return ar_fit(x, order); },
      py::arg("x"), py::arg("order"),
      "Yule-Walker autoregressive fit via Levinson-Durbin.");

  m.def("feature_names", [] { return feature_names(); },
        "Column names of the 30-entry canonical feature vector.");

  py::class_<FeatureVector>(m, "FeatureVector")
      .def_readonly("values", &FeatureVector::values)
      .def_readonly("label", &FeatureVector::label)
      .def_readonly("subject", &FeatureVector::subject)
      .def_readonly("trial", &FeatureVector::trial)
      .def_readonly("warnings", &FeatureVector::warnings);
  m.def(
      "extract", [](const Recording& rec) { return extract(rec); },
      py::arg("recording"),
      "Per-recording feature vector: per channel [RMS, MAV, ZC, SSC, AR, "
      "skewness, WL, IAV, moments 1..7], channel A block first.");

  py::class_<FeatureTable>(m, "FeatureTable")
      .def_property_readonly(
          "x", [](const FeatureTable& t) { return matrix_to_rows(t.x); })
      .def_readonly("labels", &FeatureTable::labels)
      .def_readonly("names", &FeatureTable::names);
  m.def(
      "extract_table", [](const Dataset& ds) { return extract_table(ds); },
      py::arg("dataset"), "One canonical feature row per recording.");

  // ---------------------------------------------------------------------
  // Dimensionality reduction

  m.def(
      "symmetric_eig",
      [](const Rows& rows) {
        const EigenResult e = symmetric_eig(matrix_from_rows(rows));
        Rows vectors(e.values.size());
        for (std::size_t j = 0; j < e.values.size(); ++j) {
          vectors[j].resize(e.values.size());
          for (std::size_t i = 0; i < e.values.size(); ++i) {
            vectors[j][i] = e.vectors(i, j);
          }
        }
        return std::make_pair(e.values, vectors);
      },
      py::arg("matrix"),
      "Jacobi eigendecomposition of a symmetric matrix; returns "
      "(values, vectors) with values descending and vectors[i] the unit "
      "eigenvector for values[i].");

  py::class_<Projector>(m, "Projector", "Fitted linear projection.")
      .def_property_readonly(
          "kind", [](const Projector& p) { return to_string(p.kind); })
      .def_readonly("k", &Projector::k)
      .def_readonly("mean", &Projector::mean)
      .def_readonly("scale", &Projector::scale)
      .def_readonly("standardized", &Projector::standardized)
      .def_property_readonly(
          "components",
          [](const Projector& p) { return matrix_to_rows(p.components); },
          "One direction per row.")
      .def_readonly("explained_ratio", &Projector::explained_ratio)
      .def(
          "transform",
          [](const Projector& p, const Rows& rows) {
            return matrix_to_rows(transform(p, matrix_from_rows(rows)));
          },
          py::arg("x"))
      .def(
          "transform_row",
          [](const Projector& p, const std::vector<double>& x) {
            return transform_row(p, x);
          },
          py::arg("x"));

  m.def(
      "pca_fit",
      [](const Rows& x, int k, bool standardize) {
        return pca_fit(matrix_from_rows(x), k, standardize);
      },
      py::arg("x"), py::arg("k"), py::arg("standardize") = false);
  m.def(
      "lda_fit",
      [](const Rows& x, const std::vector<int>& y, int k, bool standardize) {
        return lda_fit(matrix_from_rows(x), y, k, standardize);
      },
      py::arg("x"), py::arg("y"), py::arg("k"), py::arg("standardize") = false);
  m.def(
      "explained_variance_curve",
      [](const Rows& x, bool standardize) {
        return explained_variance_curve(matrix_from_rows(x), standardize);
      },
      py::arg("x"), py::arg("standardize") = false,
      "Cumulative explained-variance ratios for k = 1..d.");

  // ---------------------------------------------------------------------
  // Classifiers

  py::class_<MLPTrainConfig>(m, "MLPTrainConfig")
      .def(py::init<>())
      .def_readwrite("hidden_size", &MLPTrainConfig::hidden_size)
      .def_readwrite("epochs", &MLPTrainConfig::epochs)
      .def_readwrite("learning_rate", &MLPTrainConfig::learning_rate)
      .def_readwrite("momentum", &MLPTrainConfig::momentum)
      .def_readwrite("batch_size", &MLPTrainConfig::batch_size)
      .def_readwrite("seed", &MLPTrainConfig::seed)
      .def_property(
          "activation",
          [](const MLPTrainConfig& c) { return to_string(c.hidden_activation); },
          [](MLPTrainConfig& c, const std::string& name) {
            c.hidden_activation = activation_from_string(name);
          });

  py::class_<MLPModel>(m, "MLPModel")
      .def_readonly("layer_sizes", &MLPModel::layer_sizes)
      .def_property_readonly(
          "activation",
          [](const MLPModel& model) { return to_string(model.hidden_activation); })
      .def(
          "predict_proba",
          [](const MLPModel& model, const std::vector<double>& x) {
            return mlp_forward(model, x);
          },
          py::arg("x"), "Class-probability vector (softmax output).")
      .def(
          "predict",
          [](const MLPModel& model, const Rows& x) {
            return predict(model, matrix_from_rows(x));
          },
          py::arg("x"));

  py::class_<MLPTrainResult>(m, "MLPTrainResult")
      .def_readonly("model", &MLPTrainResult::model)
      .def_readonly("loss_curve", &MLPTrainResult::loss_curve,
                    "Entry 0 is the pre-training loss.");

  m.def(
      "mlp_train",
      [](const Rows& x, const std::vector<int>& y, int n_classes,
         const MLPTrainConfig& cfg) {
        return mlp_train(matrix_from_rows(x), y, n_classes, cfg);
      },
      py::arg("x"), py::arg("y"), py::arg("n_classes"),
      py::arg("config") = MLPTrainConfig{},
      "Mini-batch gradient descent with momentum on cross-entropy.");

  py::class_<SVMConfig>(m, "SVMConfig")
      .def(py::init<>())
      .def_readwrite("c", &SVMConfig::c)
      .def_readwrite("gamma", &SVMConfig::gamma,
                     "<= 0 resolves to 1 / (d * Var(X)) at training time.")
      .def_readwrite("tolerance", &SVMConfig::tolerance)
      .def_readwrite("max_passes", &SVMConfig::max_passes)
      .def_readwrite("one_vs_rest", &SVMConfig::one_vs_rest)
      .def_readwrite("seed", &SVMConfig::seed)
      .def_property(
          "kernel", [](const SVMConfig& c) { return to_string(c.kernel); },
          [](SVMConfig& c, const std::string& name) {
            c.kernel = kernel_from_string(name);
          });

  py::class_<SVMBinary>(m, "SVMBinary")
      .def_property_readonly(
          "support_vectors",
          [](const SVMBinary& model) { return matrix_to_rows(model.support_vectors); })
      .def_readonly("dual_coefficients", &SVMBinary::dual_coefficients)
      .def_readonly("bias", &SVMBinary::bias)
      .def_readonly("gamma", &SVMBinary::gamma)
      .def_property_readonly(
          "kernel", [](const SVMBinary& model) { return to_string(model.kernel); })
      .def(
          "decision",
          [](const SVMBinary& model, const std::vector<double>& x) {
            return svm_decision(model, x);
          },
          py::arg("x"), "f(x) = sum_i alpha_i y_i K(s_i, x) + b.");

  py::class_<SVMMulticlass>(m, "SVMMulticlass")
      .def_readonly("n_classes", &SVMMulticlass::n_classes)
      .def_readonly("pairs", &SVMMulticlass::pairs)
      .def_readonly("models", &SVMMulticlass::models)
      .def(
          "predict",
          [](const SVMMulticlass& model, const Rows& x) {
            return predict(model, matrix_from_rows(x));
          },
          py::arg("x"));

  m.def(
      "svm_train",
      [](const Rows& x, const std::vector<int>& y, int n_classes,
         const SVMConfig& cfg) {
        return svm_train_multiclass(matrix_from_rows(x), y, n_classes, cfg);
      },
      py::arg("x"), py::arg("y"), py::arg("n_classes"),
      py::arg("config") = SVMConfig{},
      "One-vs-one majority vote over simplified-SMO binary machines "
      "(one-vs-rest behind config.one_vs_rest).");

  // ---------------------------------------------------------------------
  // Evaluation

  m.def("accuracy", &accuracy, py::arg("predicted"), py::arg("actual"));

  py::class_<ConfusionResult>(m, "ConfusionResult")
      .def_property_readonly(
          "raw", [](const ConfusionResult& c) { return matrix_to_rows(c.raw); },
          "Counts; rows = actual, cols = predicted.")
      .def_property_readonly(
          "normalized",
          [](const ConfusionResult& c) { return matrix_to_rows(c.normalized); },
          "Row-stochastic; empty actual classes stay all-zero.")
      .def_readonly("support", &ConfusionResult::support)
      .def_readonly("empty_classes", &ConfusionResult::empty_classes);
  m.def("confusion", &confusion, py::arg("predicted"), py::arg("actual"),
        py::arg("n_classes"));

  py::class_<FeatureConfig>(m, "FeatureConfig")
      .def(py::init<>())
      .def_readwrite("zc_threshold", &FeatureConfig::zc_threshold)
      .def_readwrite("ssc_threshold", &FeatureConfig::ssc_threshold)
      .def_readwrite("ar_order", &FeatureConfig::ar_order)
      .def_readwrite("max_moment_order", &FeatureConfig::max_moment_order)
      .def_readwrite("ar_full", &FeatureConfig::ar_full);

  py::class_<SplitSpec>(m, "SplitSpec")
      .def(py::init<>())
      .def_readwrite("n_train", &SplitSpec::n_train)
      .def_readwrite("n_test", &SplitSpec::n_test)
      .def_readwrite("seed", &SplitSpec::seed)
      .def_readwrite("stratified", &SplitSpec::stratified);

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_property(
          "channels",
          [](const PipelineConfig& c) { return to_string(c.channels); },
          [](PipelineConfig& c, const std::string& name) {
            c.channels = channel_from_string(name);
          },
          "\"a\", \"b\" or \"ab\"")
      .def_readwrite("use_features", &PipelineConfig::use_features)
      .def_property(
          "reducer",
          [](const PipelineConfig& c) { return to_string(c.reducer); },
          [](PipelineConfig& c, const std::string& name) {
            c.reducer = reducer_from_string(name);
          },
          "\"pca\", \"lda\" or \"none\"")
      .def_readwrite("k", &PipelineConfig::k)
      .def_property(
          "classifier",
          [](const PipelineConfig& c) { return to_string(c.classifier); },
          [](PipelineConfig& c, const std::string& name) {
            c.classifier = classifier_from_string(name);
          },
          "\"svm\" or \"ann\"")
      .def_readwrite("standardize", &PipelineConfig::standardize)
      .def_readwrite("raw_decimation", &PipelineConfig::raw_decimation)
      .def_readwrite("features", &PipelineConfig::features)
      .def_readwrite("mlp", &PipelineConfig::mlp)
      .def_readwrite("svm", &PipelineConfig::svm)
      .def_readwrite("split", &PipelineConfig::split);

  py::class_<EvaluationReport>(m, "EvaluationReport")
      .def_readonly("accuracy", &EvaluationReport::accuracy)
      .def_property_readonly(
          "confusion_raw",
          [](const EvaluationReport& r) { return matrix_to_rows(r.confusion_raw); })
      .def_property_readonly(
          "confusion_normalized",
          [](const EvaluationReport& r) {
            return matrix_to_rows(r.confusion_normalized);
          })
      .def_readonly("per_class_support", &EvaluationReport::per_class_support)
      .def_readonly("n_train", &EvaluationReport::n_train)
      .def_readonly("n_test", &EvaluationReport::n_test)
      .def_readonly("loss_curve", &EvaluationReport::loss_curve);

  m.def(
      "run_pipeline",
      [](const Dataset& ds, const PipelineConfig& cfg) {
        return run_pipeline(ds, cfg).report;
      },
      py::arg("dataset"), py::arg("config") = PipelineConfig{},
      "Split, fit on the training partition only, evaluate on the test "
      "partition.");

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("axis", &SweepResult::axis)
      .def_property_readonly("points", [](const SweepResult& s) {
        std::vector<std::pair<int, double>> points;
        points.reserve(s.points.size());
        for (const auto& p : s.points) points.emplace_back(p.x, p.accuracy);
        return points;
      });

  m.def(
      "sweep_components",
      [](const Dataset& ds, const std::vector<int>& ks,
         const PipelineConfig& base) {
        return sweep_components(ds, ks, base);
      },
      py::arg("dataset"), py::arg("ks"), py::arg("config") = PipelineConfig{},
      "One pipeline run per component count; LDA points above the rank "
      "bound are dropped.");
  m.def(
      "sweep_split",
      [](const Dataset& ds, const std::vector<int>& sizes,
         const PipelineConfig& base) {
        return sweep_split(ds, sizes, base);
      },
      py::arg("dataset"), py::arg("train_sizes"),
      py::arg("config") = PipelineConfig{},
      "One pipeline run per training-set size (strictly increasing).");

  m.def(
      "ascii_heatmap",
      [](const Rows& rows, const std::vector<std::string>& labels) {
        return ascii_heatmap(matrix_from_rows(rows), labels);
      },
      py::arg("matrix"), py::arg("labels"),
      "Shade-character confusion grid for terminal reports.");
}
