#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emgpr/commands.hpp"
#include "emgpr/errors.hpp"

namespace {

struct CliOptions {
  emgpr::RunConfig run;
  std::string channels = "AB";
  std::string reducer = "pca";
  std::string classifier = "ann";
  std::string kernel = "rbf";
  std::string activation = "tanh";
  std::string axis;
};

void apply_strings(CliOptions& opt) {
  emgpr::PipelineConfig& p = opt.run.pipeline;
  p.channels = emgpr::channel_from_string(opt.channels);
  p.reducer = emgpr::reducer_from_string(opt.reducer);
  p.classifier = emgpr::classifier_from_string(opt.classifier);
  p.svm.kernel = emgpr::kernel_from_string(opt.kernel);
  p.mlp.hidden_activation = emgpr::activation_from_string(opt.activation);
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;
  emgpr::RunConfig& run = opt.run;

  CLI::App app{"EMG hand-gesture pattern recognition pipeline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "Read options from a key=value file; explicit command-line "
                 "flags take precedence over file values");

  app.add_option("--data", run.data_dir,
                 "Dataset root (s<subject>/c<class>/t<trial>.csv); synthetic "
                 "data is generated when omitted");
  app.add_option("--out", run.out_dir, "Output directory");
  app.add_option("--seed", run.seed, "Root seed for every random draw");

  // Synthetic generator, also the fallback data source of every command.
  app.add_option("--subjects", run.synth.n_subjects, "Synthetic subjects");
  app.add_option("--classes", run.synth.n_classes, "Synthetic classes (max 10)");
  app.add_option("--trials", run.synth.n_trials, "Synthetic trials per class");
  app.add_option("--samples", run.synth.samples_per_trial, "Samples per trial");
  app.add_option("--peak-mv", run.synth.peak_mv, "Peak-to-peak range in mV");
  app.add_option("--noise-sigma", run.synth.noise_sigma, "Additive noise sigma");
  app.add_flag("--flat-envelope", run.synth.flat_envelope,
               "Disable the class-specific amplitude envelope");

  // Pipeline.
  app.add_option("--channels", opt.channels, "Channel selection: A, B or AB")
      ->check(CLI::IsMember({"A", "B", "AB", "a", "b", "ab"}));
  app.add_option("--reducer", opt.reducer, "Dimensionality reducer")
      ->check(CLI::IsMember({"pca", "lda", "none"}));
  app.add_option("--classifier", opt.classifier, "Classifier")
      ->check(CLI::IsMember({"svm", "ann", "mlp"}));
  app.add_option("--k", run.pipeline.k, "Number of retained components");
  app.add_flag("--features,!--no-features", run.pipeline.use_features,
               "Use the time-domain feature vector (default) or raw samples");
  app.add_flag("--standardize,!--no-standardize", run.pipeline.standardize,
               "Z-score columns before reduction (default on)");
  app.add_option("--raw-decimation", run.pipeline.raw_decimation,
                 "Keep every n-th sample in raw mode");
  app.add_option("--n-train", run.n_train, "Training-set size for the split");
  app.add_flag("--stratified,!--no-stratified", run.pipeline.split.stratified,
               "Stratify the train/test split by class (default on)");

  // Feature extraction knobs.
  app.add_option("--zc-threshold", run.pipeline.features.zc_threshold,
                 "Zero-crossing noise threshold");
  app.add_option("--ssc-threshold", run.pipeline.features.ssc_threshold,
                 "Slope-sign-change threshold");
  app.add_option("--ar-order", run.pipeline.features.ar_order, "AR model order");
  app.add_flag("--ar-full", run.pipeline.features.ar_full,
               "Keep all AR coefficients instead of the first");

  // MLP.
  app.add_option("--hidden", run.pipeline.mlp.hidden_size, "Hidden layer width");
  app.add_option("--epochs", run.pipeline.mlp.epochs, "Training epochs");
  app.add_option("--lr", run.pipeline.mlp.learning_rate, "Learning rate");
  app.add_option("--momentum", run.pipeline.mlp.momentum, "SGD momentum");
  app.add_option("--batch", run.pipeline.mlp.batch_size, "Mini-batch size");
  app.add_option("--activation", opt.activation, "Hidden activation")
      ->check(CLI::IsMember({"sigmoid", "tanh", "relu", "leaky_relu", "swish"}));

  // SVM.
  app.add_option("--svm-c", run.pipeline.svm.c, "Soft-margin C");
  app.add_option("--kernel", opt.kernel, "SVM kernel")
      ->check(CLI::IsMember({"linear", "rbf"}));
  app.add_option("--gamma", run.pipeline.svm.gamma,
                 "RBF gamma; 0 selects 1/(d*Var(X))");
  app.add_option("--tolerance", run.pipeline.svm.tolerance, "KKT tolerance");
  app.add_option("--max-passes", run.pipeline.svm.max_passes,
                 "Unchanged sweeps before SMO stops");
  app.add_flag("--one-vs-rest", run.pipeline.svm.one_vs_rest,
               "Train one-vs-rest SVMs instead of one-vs-one");

  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
  CLI::App* extract = app.add_subcommand("extract", "Write the feature matrix CSV");
  CLI::App* eval = app.add_subcommand(
      "eval", "Train and score one pipeline, with confusion matrix");
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one pipeline axis");
  CLI::App* grid = app.add_subcommand(
      "grid", "Run the channel x reducer x classifier x features grid");

  sweep->add_option("--axis", opt.axis, "Sweep axis: components or split")
      ->required()
      ->check(CLI::IsMember({"components", "split"}));
  sweep->add_option("--ks", run.k_values, "Component counts for --axis components");
  sweep->add_option("--train-sizes", run.train_sizes,
                    "Training sizes for --axis split");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    apply_strings(opt);
    run.resolve_seeds();
    if (synth->parsed()) {
      run.command = "synth";
      emgpr::cmd_synth(run);
    } else if (extract->parsed()) {
      run.command = "extract";
      emgpr::cmd_extract(run);
    } else if (eval->parsed()) {
      run.command = "eval";
      emgpr::cmd_eval(run);
    } else if (sweep->parsed()) {
      run.command = "sweep";
      emgpr::cmd_sweep(run, opt.axis);
    } else if (grid->parsed()) {
      run.command = "grid";
      emgpr::cmd_grid(run);
    }
  } catch (const emgpr::DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const emgpr::NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
