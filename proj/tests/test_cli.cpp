#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EMGPR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

int run_shell(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

// Small, fast synthetic source shared by the CLI cases.
const char* kSmall = "--subjects 2 --trials 2 --samples 64";

}  // namespace

TEST_CASE("cli: synth writes the dataset tree and an echo of the run") {
  testutil::TempDir tmp("synth");
  CHECK(run_cli(std::string("synth ") + kSmall + " --out " +
                (tmp.path / "d").string()) == 0);

  std::size_t n_csv = 0;
  for (const auto& e : fs::recursive_directory_iterator(tmp.path / "d")) {
    if (e.path().extension() == ".csv") ++n_csv;
  }
  CHECK(n_csv == 2 * 10 * 2);
  CHECK(fs::exists(tmp.path / "d" / "s0" / "c0" / "t0.csv"));
  CHECK(fs::exists(tmp.path / "d" / "s1" / "c9" / "t1.csv"));
  CHECK(fs::exists(tmp.path / "d" / "config_echo.json"));

  const std::string echo = slurp(tmp.path / "d" / "config_echo.json");
  CHECK(echo.find("\"command\": \"synth\"") != std::string::npos);
  CHECK(echo.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("cli: synth is reproducible run to run") {
  testutil::TempDir tmp("repro");
  const std::string a = (tmp.path / "a").string();
  const std::string b = (tmp.path / "b").string();
  CHECK(run_cli(std::string("synth ") + kSmall + " --seed 5 --out " + a) == 0);
  CHECK(run_cli(std::string("synth ") + kSmall + " --seed 5 --out " + b) == 0);
  // The echo records the output path itself, so compare everything else.
  CHECK(run_shell("diff -r -x config_echo.json " + a + " " + b) == 0);

  const std::string c = (tmp.path / "c").string();
  CHECK(run_cli(std::string("synth ") + kSmall + " --seed 6 --out " + c) == 0);
  CHECK(run_shell("diff -r -x config_echo.json " + a + " " + c) != 0);
}

TEST_CASE("cli: extract emits one labeled feature row per recording") {
  testutil::TempDir tmp("extract");
  CHECK(run_cli(std::string("extract ") + kSmall + " --out " + tmp.path.string()) == 0);

  const auto lines = lines_of(slurp(tmp.path / "features.csv"));
  REQUIRE(lines.size() == 1 + 2 * 10 * 2);

  std::vector<std::string> header;
  std::stringstream ss(lines[0]);
  std::string cell;
  while (std::getline(ss, cell, ',')) header.push_back(cell);
  REQUIRE(header.size() == 31);
  CHECK(header.front() == "chA_rms");
  CHECK(header[15] == "chB_rms");
  CHECK(header.back() == "label");

  // Every data row carries 31 cells and an integer class label.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto n_commas =
        static_cast<std::size_t>(std::count(lines[i].begin(), lines[i].end(), ','));
    CHECK(n_commas == 30);
    const int label = std::stoi(lines[i].substr(lines[i].rfind(',') + 1));
    CHECK(label >= 0);
    CHECK(label <= 9);
  }
}

TEST_CASE("cli: loading from disk matches the in-process synthetic source") {
  testutil::TempDir tmp("roundtrip");
  const std::string data = (tmp.path / "data").string();
  CHECK(run_cli(std::string("synth ") + kSmall + " --out " + data) == 0);
  CHECK(run_cli(std::string("extract ") + kSmall + " --out " +
                (tmp.path / "from_synth").string()) == 0);
  CHECK(run_cli("extract --data " + data + " --out " +
                (tmp.path / "from_disk").string()) == 0);

  // Samples survive the on-disk format to ~1e-9, so features agree to high
  // relative precision but not bitwise. Same order, same labels, close cells.
  const auto a = lines_of(slurp(tmp.path / "from_synth" / "features.csv"));
  const auto b = lines_of(slurp(tmp.path / "from_disk" / "features.csv"));
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == 41);
  CHECK(a[0] == b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    std::stringstream sa(a[i]);
    std::stringstream sb(b[i]);
    std::string ca;
    std::string cb;
    int field = 0;
    while (std::getline(sa, ca, ',') && std::getline(sb, cb, ',')) {
      if (field == 30) {
        CHECK(ca == cb);  // label column is exact
      } else {
        const double va = std::stod(ca);
        const double vb = std::stod(cb);
        CHECK(std::abs(va - vb) <=
              1e-8 + 1e-6 * std::max(std::abs(va), std::abs(vb)));
      }
      ++field;
    }
    CHECK(field == 31);
  }
}

TEST_CASE("cli: exit codes") {
  testutil::TempDir tmp("codes");

  // Usage errors -> 1.
  CHECK(run_cli("eval --reducer ica --out " + tmp.path.string()) == 1);
  CHECK(run_cli("sweep --axis sideways --out " + tmp.path.string()) == 1);
  CHECK(run_cli("nonsense") == 1);
  CHECK(run_cli(std::string("synth ") + kSmall) == 1);  // --out missing
  CHECK(run_cli(std::string("eval ") + kSmall + " --n-train 40 --out " +
                tmp.path.string()) == 1);  // split leaves no test data

  // Data errors -> 2.
  CHECK(run_cli("eval --data " + (tmp.path / "missing").string() + " --out " +
                tmp.path.string()) == 2);
  const fs::path blocker = tmp.path / "file";
  std::ofstream(blocker) << "x";
  CHECK(run_cli(std::string("synth ") + kSmall + " --out " +
                (blocker / "sub").string()) == 2);

  // --help exits cleanly.
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("cli: eval writes report, confusion matrices and model") {
  testutil::TempDir tmp("eval");
  CHECK(run_cli(std::string("eval ") + kSmall +
                " --n-train 30 --k 5 --classifier svm --kernel linear --out " +
                tmp.path.string()) == 0);
  for (const char* name : {"report.json", "confusion_raw.csv",
                           "confusion_normalized.csv", "heatmap.txt", "model.json",
                           "projector.json", "config_echo.json"}) {
    CHECK(fs::exists(tmp.path / name));
  }
  const std::string report = slurp(tmp.path / "report.json");
  CHECK(report.find("\"accuracy\"") != std::string::npos);
  CHECK(report.find("\"n_train\": 30") != std::string::npos);
  CHECK(report.find("\"n_test\": 10") != std::string::npos);

  // The ANN path adds the loss curve, epoch zero first.
  testutil::TempDir tmp2("eval_ann");
  CHECK(run_cli(std::string("eval ") + kSmall +
                " --n-train 30 --k 5 --classifier ann --epochs 20 --hidden 8 "
                "--out " +
                tmp2.path.string()) == 0);
  const auto loss = lines_of(slurp(tmp2.path / "loss.csv"));
  REQUIRE(loss.size() == 1 + 21);
  CHECK(loss[0] == "epoch,loss");
  CHECK(loss[1].rfind("0,", 0) == 0);
  CHECK(loss[2].rfind("1,", 0) == 0);
}

TEST_CASE("cli: config file supplies defaults, flags override") {
  testutil::TempDir tmp("config");
  const fs::path cfg = tmp.path / "run.cfg";
  std::ofstream(cfg) << "seed=1\nsubjects=2\ntrials=2\nsamples=64\n";

  const std::string out1 = (tmp.path / "o1").string();
  CHECK(run_cli("synth --config " + cfg.string() + " --out " + out1) == 0);
  CHECK(slurp(fs::path(out1) / "config_echo.json").find("\"seed\": 1") !=
        std::string::npos);

  const std::string out2 = (tmp.path / "o2").string();
  CHECK(run_cli("synth --config " + cfg.string() + " --seed 7 --out " + out2) == 0);
  const std::string echo = slurp(fs::path(out2) / "config_echo.json");
  CHECK(echo.find("\"seed\": 7") != std::string::npos);
  CHECK(echo.find("\"n_subjects\": 2") != std::string::npos);
}

TEST_CASE("cli: sweep CSVs keep the x axis strictly increasing") {
  testutil::TempDir tmp("sweep");
  CHECK(run_cli(std::string("sweep --axis split ") + kSmall +
                " --n-train 30 --k 5 --classifier svm --kernel linear --out " +
                tmp.path.string()) == 0);
  const auto lines = lines_of(slurp(tmp.path / "sweep_split.csv"));
  REQUIRE(lines.size() > 2);
  CHECK(lines[0] == "n_train,accuracy");
  int prev = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int x = std::stoi(lines[i]);
    CHECK(x > prev);
    prev = x;
  }

  testutil::TempDir tmp2("sweepk");
  CHECK(run_cli(std::string("sweep --axis components --ks 1 --ks 3 --ks 5 ") +
                kSmall +
                " --n-train 30 --classifier svm --kernel linear --out " +
                tmp2.path.string()) == 0);
  const auto klines = lines_of(slurp(tmp2.path / "sweep_components.csv"));
  REQUIRE(klines.size() == 4);
  CHECK(klines[0] == "components,accuracy");
  CHECK(klines[1].rfind("1,", 0) == 0);
  CHECK(klines[2].rfind("3,", 0) == 0);
  CHECK(klines[3].rfind("5,", 0) == 0);
  CHECK(fs::exists(tmp2.path / "explained_variance.csv"));
}

TEST_CASE("cli: grid emits 24 runs and the 6x4 table") {
  testutil::TempDir tmp("grid");
  CHECK(run_cli(std::string("grid ") + kSmall +
                " --n-train 30 --k 5 --epochs 20 --hidden 8 --kernel linear "
                "--raw-decimation 8 --out " +
                tmp.path.string()) == 0);
  const auto lines = lines_of(slurp(tmp.path / "grid.csv"));
  REQUIRE(lines.size() == 1 + 24);
  CHECK(lines[0] == "channels,features,reducer,classifier,accuracy");
  CHECK(lines[1].rfind("A,on,pca,svm,", 0) == 0);
  CHECK(lines[24].rfind("AB,off,lda,ann,", 0) == 0);

  const auto table = lines_of(slurp(tmp.path / "grid_table2.csv"));
  REQUIRE(table.size() == 1 + 6);
  CHECK(table[0] == "channel,reducer,svm_features,ann_features,svm_raw,ann_raw");
  CHECK(table[1].rfind("A,pca,", 0) == 0);
  CHECK(table[6].rfind("AB,lda,", 0) == 0);
}
