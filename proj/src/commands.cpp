#include "emgpr/commands.hpp"

#include <algorithm>
#include <stdexcept>

#include "emgpr/errors.hpp"
#include "emgpr/rng.hpp"
#include "emgpr/serialize.hpp"

namespace emgpr {

namespace fs = std::filesystem;

void RunConfig::resolve_seeds() {
  synth.seed = derive_seed(seed, "synth");
  pipeline.split.seed = derive_seed(seed, "split");
  pipeline.mlp.seed = derive_seed(seed, "init");
  pipeline.svm.seed = derive_seed(seed, "smo");
}

namespace {

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["data"] = cfg.data_dir;
  j["out"] = cfg.out_dir;
  j["seed"] = cfg.seed;
  j["n_train"] = cfg.n_train;
  j["synth"] = {{"n_subjects", cfg.synth.n_subjects},
                {"n_classes", cfg.synth.n_classes},
                {"n_trials", cfg.synth.n_trials},
                {"samples_per_trial", cfg.synth.samples_per_trial},
                {"peak_mv", cfg.synth.peak_mv},
                {"noise_sigma", cfg.synth.noise_sigma},
                {"flat_envelope", cfg.synth.flat_envelope},
                {"seed", cfg.synth.seed}};
  j["pipeline"] = to_json(cfg.pipeline);
  j["k_values"] = cfg.k_values;
  j["train_sizes"] = cfg.train_sizes;
  return j;
}

fs::path require_out(const RunConfig& cfg) {
  if (cfg.out_dir.empty()) {
    throw std::invalid_argument(cfg.command + ": --out is required");
  }
  return cfg.out_dir;
}

// Commands that consume recordings either load them from --data or fall
// back to the synthetic generator.
Dataset acquire_dataset(const RunConfig& cfg) {
  if (!cfg.data_dir.empty()) return load_dataset(cfg.data_dir);
  return synth_generate(cfg.synth);
}

// Fill in split sizes for the dataset at hand and sanity-check them.
PipelineConfig pipeline_for(const RunConfig& cfg, const Dataset& ds) {
  PipelineConfig p = cfg.pipeline;
  if (cfg.n_train == 0 || cfg.n_train >= ds.size()) {
    throw std::invalid_argument("eval: --n-train must be in 1.." +
                                std::to_string(ds.size() - 1));
  }
  p.split.n_train = cfg.n_train;
  p.split.n_test = ds.size() - cfg.n_train;
  return p;
}

}  // namespace

void cmd_synth(const RunConfig& cfg) {
  const fs::path out = require_out(cfg);
  const Dataset ds = synth_generate(cfg.synth);
  write_dataset(ds, out);
  write_json_file(out / "config_echo.json", config_echo(cfg));
}

void cmd_extract(const RunConfig& cfg) {
  const fs::path out = require_out(cfg);
  const Dataset ds = acquire_dataset(cfg);
  const FeatureTable table = extract_table(ds, cfg.pipeline.features);
  write_feature_csv(out / "features.csv", table);
  write_json_file(out / "config_echo.json", config_echo(cfg));
}

void cmd_eval(const RunConfig& cfg) {
  const fs::path out = require_out(cfg);
  const Dataset ds = acquire_dataset(cfg);
  const PipelineConfig pipeline = pipeline_for(cfg, ds);

  const PipelineOutcome outcome = run_pipeline(ds, pipeline);
  const auto& names_arr = Dataset::class_names();
  const std::vector<std::string> names(names_arr.begin(), names_arr.end());

  write_json_file(out / "report.json", to_json(outcome.report));
  write_confusion_csv(out / "confusion_raw.csv", outcome.report.confusion_raw, names);
  write_confusion_csv(out / "confusion_normalized.csv",
                      outcome.report.confusion_normalized, names);
  write_text_file(out / "heatmap.txt",
                  ascii_heatmap(outcome.report.confusion_normalized, names));
  if (outcome.fitted.mlp) {
    write_loss_csv(out / "loss.csv", outcome.fitted.mlp->loss_curve);
    write_json_file(out / "model.json", to_json(outcome.fitted.mlp->model));
  } else {
    write_json_file(out / "model.json", to_json(*outcome.fitted.svm));
  }
  if (outcome.fitted.projector) {
    write_json_file(out / "projector.json", to_json(*outcome.fitted.projector));
  }
  write_json_file(out / "config_echo.json", config_echo(cfg));
}

void cmd_sweep(const RunConfig& cfg, const std::string& axis) {
  const fs::path out = require_out(cfg);
  const Dataset ds = acquire_dataset(cfg);
  const PipelineConfig pipeline = pipeline_for(cfg, ds);

  if (axis == "components") {
    std::vector<int> ks = cfg.k_values;
    if (ks.empty()) ks = {1, 2, 5, 10, 15, 20, 25, 30};
    const SweepResult sweep = sweep_components(ds, ks, pipeline);
    write_sweep_csv(out / "sweep_components.csv", sweep);

    // Cumulative explained-variance curve of the full feature matrix, for
    // reading the sweep against how much variance each k retains.
    auto [x, labels] = vectorize(ds, pipeline);
    (void)labels;
    if (pipeline.standardize) {
      x = standardizer_apply(standardizer_fit(x), x);
    }
    write_curve_csv(out / "explained_variance.csv", "components",
                    "cumulative_ratio", explained_variance_curve(x, false));
  } else if (axis == "split") {
    std::vector<int> sizes = cfg.train_sizes;
    if (sizes.empty()) {
      // Table-style ramp toward the canonical 450/30 split, scaled down for
      // smaller datasets.
      const std::size_t n = ds.size();
      for (std::size_t frac : {70u, 75u, 80u, 85u, 90u}) {
        const int sz = static_cast<int>(std::max<std::size_t>(1, n * frac / 96));
        if (static_cast<std::size_t>(sz) < n &&
            (sizes.empty() || sz > sizes.back())) {
          sizes.push_back(sz);
        }
      }
    }
    const SweepResult sweep = sweep_split(ds, sizes, pipeline);
    write_sweep_csv(out / "sweep_split.csv", sweep);
  } else {
    throw std::invalid_argument("sweep: axis must be components or split");
  }
  write_json_file(out / "config_echo.json", config_echo(cfg));
}

void cmd_grid(const RunConfig& cfg) {
  const fs::path out = require_out(cfg);
  const Dataset ds = acquire_dataset(cfg);
  const PipelineConfig base = pipeline_for(cfg, ds);

  const ChannelSelect channels[] = {ChannelSelect::a, ChannelSelect::b,
                                    ChannelSelect::ab};
  const ReducerChoice reducers[] = {ReducerChoice::pca, ReducerChoice::lda};
  const ClassifierChoice classifiers[] = {ClassifierChoice::svm,
                                          ClassifierChoice::ann};

  std::string long_csv = "channels,features,reducer,classifier,accuracy\n";
  std::string table2 = "channel,reducer,svm_features,ann_features,svm_raw,ann_raw\n";

  for (ChannelSelect ch : channels) {
    for (ReducerChoice red : reducers) {
      // Table row: four cells, features on then off, SVM then ANN.
      double cell[2][2];  // [features? 0=on 1=off][classifier 0=svm 1=ann]
      for (int feat = 0; feat < 2; ++feat) {
        for (int cls = 0; cls < 2; ++cls) {
          PipelineConfig p = base;
          p.channels = ch;
          p.reducer = red;
          // LDA rank-bounds the projection at C - 1 dimensions.
          if (red == ReducerChoice::lda) p.k = std::min(base.k, kNumClasses - 1);
          p.use_features = feat == 0;
          p.classifier = cls == 0 ? ClassifierChoice::svm : ClassifierChoice::ann;
          const PipelineOutcome outcome = run_pipeline(ds, p);
          cell[feat][cls] = outcome.report.accuracy;
          long_csv += to_string(ch);
          long_csv += ',';
          long_csv += feat == 0 ? "on" : "off";
          long_csv += ',';
          long_csv += to_string(red);
          long_csv += ',';
          long_csv += to_string(p.classifier);
          long_csv += ',';
          long_csv += csv_number(outcome.report.accuracy);
          long_csv += '\n';
        }
      }
      table2 += to_string(ch);
      table2 += ',';
      table2 += to_string(red);
      for (int feat = 0; feat < 2; ++feat) {
        for (int cls = 0; cls < 2; ++cls) {
          table2 += ',';
          table2 += csv_number(cell[feat][cls]);
        }
      }
      table2 += '\n';
    }
  }

  write_text_file(out / "grid.csv", long_csv);
  write_text_file(out / "grid_table2.csv", table2);
  write_json_file(out / "config_echo.json", config_echo(cfg));
}

}  // namespace emgpr
