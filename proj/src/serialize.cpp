#include "emgpr/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "emgpr/errors.hpp"

namespace emgpr {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

namespace {

nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json to_json(const Projector& p) {
  nlohmann::ordered_json j;
  j["kind"] = p.kind == ReducerKind::pca ? "pca" : "lda";
  j["k"] = p.k;
  j["standardized"] = p.standardized;
  j["mean"] = p.mean;
  j["scale"] = p.scale;
  j["components"] = matrix_json(p.components);
  j["explained_ratio"] = p.explained_ratio;
  return j;
}

nlohmann::ordered_json to_json(const MLPModel& m) {
  nlohmann::ordered_json j;
  j["layer_sizes"] = m.layer_sizes;
  j["hidden_activation"] = to_string(m.hidden_activation);
  j["seed"] = m.seed;
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const Matrix& w : m.weights) weights.push_back(matrix_json(w));
  j["weights"] = std::move(weights);
  j["biases"] = m.biases;
  return j;
}

nlohmann::ordered_json to_json(const SVMMulticlass& m) {
  nlohmann::ordered_json j;
  j["n_classes"] = m.n_classes;
  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.models.size(); ++i) {
    const SVMBinary& b = m.models[i];
    nlohmann::ordered_json mj;
    mj["classes"] = {m.pairs[i].first, m.pairs[i].second};
    mj["kernel"] = to_string(b.kernel);
    mj["gamma"] = b.gamma;
    mj["c"] = b.c;
    mj["bias"] = b.bias;
    mj["dual_coefficients"] = b.dual_coefficients;
    mj["support_vectors"] = matrix_json(b.support_vectors);
    models.push_back(std::move(mj));
  }
  j["models"] = std::move(models);
  return j;
}

nlohmann::ordered_json to_json(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["channels"] = to_string(c.channels);
  j["use_features"] = c.use_features;
  j["reducer"] = to_string(c.reducer);
  j["k"] = c.k;
  j["classifier"] = to_string(c.classifier);
  j["standardize"] = c.standardize;
  j["raw_decimation"] = c.raw_decimation;
  j["features"] = {{"zc_threshold", c.features.zc_threshold},
                   {"ssc_threshold", c.features.ssc_threshold},
                   {"ar_order", c.features.ar_order},
                   {"max_moment_order", c.features.max_moment_order},
                   {"ar_full", c.features.ar_full}};
  j["mlp"] = {{"hidden_size", c.mlp.hidden_size},
              {"epochs", c.mlp.epochs},
              {"learning_rate", c.mlp.learning_rate},
              {"momentum", c.mlp.momentum},
              {"batch_size", c.mlp.batch_size},
              {"seed", c.mlp.seed}};
  j["svm"] = {{"c", c.svm.c},
              {"kernel", to_string(c.svm.kernel)},
              {"gamma", c.svm.gamma},
              {"tolerance", c.svm.tolerance},
              {"max_passes", c.svm.max_passes},
              {"one_vs_rest", c.svm.one_vs_rest},
              {"seed", c.svm.seed}};
  j["split"] = {{"n_train", c.split.n_train},
                {"n_test", c.split.n_test},
                {"seed", c.split.seed},
                {"stratified", c.split.stratified}};
  return j;
}

nlohmann::ordered_json to_json(const EvaluationReport& r) {
  nlohmann::ordered_json j;
  j["accuracy"] = r.accuracy;
  j["n_train"] = r.n_train;
  j["n_test"] = r.n_test;
  j["per_class_support"] = r.per_class_support;
  j["confusion_raw"] = matrix_json(r.confusion_raw);
  j["confusion_normalized"] = matrix_json(r.confusion_normalized);
  j["config"] = to_json(r.config);
  if (!r.loss_curve.empty()) j["loss_curve"] = r.loss_curve;
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_feature_csv(const std::filesystem::path& path, const FeatureTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    if (i) out += ',';
    out += table.names[i];
  }
  out += ",label\n";
  for (std::size_t r = 0; r < table.x.rows(); ++r) {
    for (std::size_t c = 0; c < table.x.cols(); ++c) {
      if (c) out += ',';
      out += csv_number(table.x(r, c));
    }
    out += ',';
    out += std::to_string(table.labels[r]);
    out += '\n';
  }
  write_text_file(path, out);
}

void write_confusion_csv(const std::filesystem::path& path, const Matrix& m,
                         const std::vector<std::string>& names) {
  std::string out = "actual\\predicted";
  for (const auto& n : names) {
    out += ',';
    out += n;
  }
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += names[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out += ',';
      out += csv_number(m(i, j));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
  std::string out = sweep.axis == "components" ? "components,accuracy\n"
                                               : "n_train,accuracy\n";
  for (const SweepPoint& p : sweep.points) {
    out += std::to_string(p.x);
    out += ',';
    out += csv_number(p.accuracy);
    out += '\n';
  }
  write_text_file(path, out);
}

void write_curve_csv(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<double>& y) {
  std::string out = x_name + "," + y_name + "\n";
  for (std::size_t i = 0; i < y.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += csv_number(y[i]);
    out += '\n';
  }
  write_text_file(path, out);
}

void write_loss_csv(const std::filesystem::path& path, const std::vector<double>& loss) {
  // Entry 0 is the pre-training loss, so epochs count from zero.
  std::string out = "epoch,loss\n";
  for (std::size_t i = 0; i < loss.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += csv_number(loss[i]);
    out += '\n';
  }
  write_text_file(path, out);
}

}  // namespace emgpr
