#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "emgpr/errors.hpp"
#include "emgpr/features.hpp"
#include "emgpr/rng.hpp"
#include "test_util.hpp"

using namespace emgpr;

namespace {

std::vector<double> simulate_ar2(double phi1, double phi2, std::size_t n,
                                 std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<double> x;
  x.reserve(n);
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < n + 500; ++i) {
    const double v = phi1 * a + phi2 * b + rng.gaussian();
    b = a;
    a = v;
    if (i >= 500) x.push_back(v);
  }
  return x;
}

}  // namespace

TEST_CASE("rms") {
  const std::vector<double> c(17, 2.0);
  CHECK(rms(c) == doctest::Approx(2.0).epsilon(1e-12));
  const std::vector<double> xy = {3.0, 4.0};
  CHECK(rms(xy) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
  const std::vector<double> z(5, 0.0);
  CHECK(rms(z) == 0.0);
  CHECK_THROWS_AS(rms({}), std::invalid_argument);
}

TEST_CASE("mav") {
  const std::vector<double> v = {1.0, -2.0, 3.0};
  CHECK(mav(v) == doctest::Approx(2.0).epsilon(1e-12));
  const std::vector<double> c(9, -3.5);
  CHECK(mav(c) == doctest::Approx(3.5).epsilon(1e-12));
  const std::vector<double> z(4, 0.0);
  CHECK(mav(z) == 0.0);
  CHECK_THROWS_AS(mav({}), std::invalid_argument);
}

TEST_CASE("power-mean inequality mav <= rms <= max") {
  RandomSource rng(11);
  for (int t = 0; t < 1000; ++t) {
    const auto x = testutil::random_vector(rng, 1 + rng.index(64), -5.0, 5.0);
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, std::abs(v));
    const double m = mav(x);
    const double r = rms(x);
    CHECK(m <= r + 1e-12);
    CHECK(r <= mx + 1e-12);
  }
}

TEST_CASE("zero_crossings") {
  CHECK(zero_crossings(std::vector<double>{1, -1, 1, -1}, 0.0) == 3);
  CHECK(zero_crossings(std::vector<double>{0.2, -0.2}, 0.5) == 0);  // jump 0.4
  CHECK(zero_crossings(std::vector<double>{2, 2, 2}, 0.0) == 0);

  // Zeros inherit the previous sign; leading zeros count as positive.
  CHECK(zero_crossings(std::vector<double>{1, 0, -1}, 0.0) == 1);
  CHECK(zero_crossings(std::vector<double>{0, 0, 1}, 0.0) == 0);
  CHECK(zero_crossings(std::vector<double>{0, -1}, 0.0) == 1);
  CHECK(zero_crossings(std::vector<double>{-1, 0, 1}, 0.0) == 1);

  CHECK_THROWS_AS(zero_crossings(std::vector<double>{1.0}, 0.0),
                  std::invalid_argument);

  // Non-increasing in the threshold.
  RandomSource rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto x = testutil::random_vector(rng, 32);
    long prev = zero_crossings(x, 0.0);
    for (double thr : {0.2, 0.5, 1.0, 2.0}) {
      const long cur = zero_crossings(x, thr);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("slope_sign_changes") {
  CHECK(slope_sign_changes(std::vector<double>{0, 1, 0, 1, 0}, 0.0) == 3);
  CHECK(slope_sign_changes(std::vector<double>{0, 1, 2, 3}, 0.0) == 0);
  CHECK(slope_sign_changes(std::vector<double>{0, 1, 0}, 2.0) == 0);  // product 1
  CHECK_THROWS_AS(slope_sign_changes(std::vector<double>{1, 2}, 0.0),
                  std::invalid_argument);

  RandomSource rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto x = testutil::random_vector(rng, 32);
    long prev = slope_sign_changes(x, 0.0);
    for (double thr : {0.1, 0.5, 1.0}) {
      const long cur = slope_sign_changes(x, thr);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("ar_fit recovers an AR(2) generator") {
  // x_n = 0.5 x_{n-1} - 0.3 x_{n-2} + w_n; reported coefficients follow
  // x_n = -sum a_i x_{n-i} + w_n, so a_1 = -0.5, a_2 = +0.3.
  const auto x = simulate_ar2(0.5, -0.3, 20000, 101);
  const ARModel m = ar_fit(x, 2);
  REQUIRE(m.coefficients.size() == 2);
  CHECK(m.coefficients[0] == doctest::Approx(-0.5).epsilon(0.1));
  CHECK(std::abs(m.coefficients[0] + 0.5) <= 0.05);
  CHECK(std::abs(m.coefficients[1] - 0.3) <= 0.05);
  CHECK(m.noise_variance >= 0.0);
  for (double k : m.reflection) CHECK(std::abs(k) <= 1.0 + 1e-9);
}

TEST_CASE("ar_fit on white noise") {
  RandomSource rng(102);
  std::vector<double> x(20000);
  for (double& v : x) v = rng.gaussian();
  const ARModel m = ar_fit(x, 2);
  CHECK(std::abs(m.coefficients[0]) <= 0.05);
  CHECK(std::abs(m.coefficients[1]) <= 0.05);
}

TEST_CASE("ar_fit error cases") {
  CHECK_THROWS_AS(ar_fit(std::vector<double>{1.0, 2.0}, 2), std::invalid_argument);
  const std::vector<double> c(64, 1.0);
  CHECK_THROWS_AS(ar_fit(c, 2), NumericError);  // zero variance
}

TEST_CASE("skewness") {
  CHECK(skewness(std::vector<double>{-1, 0, 1}) == doctest::Approx(0.0).epsilon(1e-12));
  // M_3 = 2/27, M_2 = 2/9 -> 1/sqrt(2).
  CHECK(skewness(std::vector<double>{0, 0, 1}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  bool degenerate = false;
  CHECK(skewness(std::vector<double>(8, 3.0), degenerate) == 0.0);
  CHECK(degenerate);

  RandomSource rng(14);
  const auto x = testutil::random_vector(rng, 40);
  std::vector<double> neg(x.size()), shifted(x.size()), scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    neg[i] = -x[i];
    shifted[i] = x[i] + 2.5;
    scaled[i] = 3.0 * x[i];
  }
  CHECK(skewness(neg) == doctest::Approx(-skewness(x)).epsilon(1e-9));
  CHECK(skewness(shifted) == doctest::Approx(skewness(x)).epsilon(1e-7));
  CHECK(skewness(scaled) == doctest::Approx(skewness(x)).epsilon(1e-9));
}

TEST_CASE("waveform_length") {
  CHECK(waveform_length(std::vector<double>{0, 1, 0, 1}) == doctest::Approx(3.0));
  CHECK(waveform_length(std::vector<double>(6, 2.0)) == 0.0);

  RandomSource rng(15);
  const auto x = testutil::random_vector(rng, 25);
  std::vector<double> rev(x.rbegin(), x.rend());
  CHECK(waveform_length(rev) == doctest::Approx(waveform_length(x)).epsilon(1e-12));
  std::vector<double> scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = -2.0 * x[i];
  CHECK(waveform_length(scaled) ==
        doctest::Approx(2.0 * waveform_length(x)).epsilon(1e-12));
}

TEST_CASE("iav") {
  CHECK(iav(std::vector<double>{1, -2, 3}) == doctest::Approx(6.0));
  CHECK(iav(std::vector<double>(7, 0.0)) == 0.0);
  RandomSource rng(16);
  for (int t = 0; t < 20; ++t) {
    const auto x = testutil::random_vector(rng, 1 + rng.index(50));
    CHECK(iav(x) ==
          doctest::Approx(static_cast<double>(x.size()) * mav(x)).epsilon(1e-12));
  }
}

TEST_CASE("central_moments") {
  const auto constant = central_moments(std::vector<double>(10, 4.0), 7);
  REQUIRE(constant.size() == 7);
  CHECK(constant[0] == doctest::Approx(4.0));
  for (std::size_t k = 1; k < 7; ++k) CHECK(constant[k] == doctest::Approx(0.0));

  const auto pm = central_moments(std::vector<double>{-1, 1}, 7);
  const std::vector<double> expected = {0, 1, 0, 1, 0, 1, 0};
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(pm[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }

  RandomSource rng(17);
  const auto x = testutil::random_vector(rng, 30);
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] + 1.75;
  const auto mx = central_moments(x, 7);
  const auto ms = central_moments(shifted, 7);
  CHECK(ms[0] == doctest::Approx(mx[0] + 1.75).epsilon(1e-9));
  for (std::size_t k = 1; k < 7; ++k) {
    CHECK(ms[k] == doctest::Approx(mx[k]).epsilon(1e-7));
  }

  CHECK_THROWS_AS(central_moments(std::vector<double>{1.0}, 7),
                  std::invalid_argument);
}

TEST_CASE("extract on constant recording") {
  Recording rec;
  rec.subject_id = 1;
  rec.class_id = 2;
  rec.trial_id = 0;
  rec.channels[0].assign(32, 1.0);
  rec.channels[1].assign(32, 1.0);

  const FeatureVector fv = extract(rec);
  REQUIRE(fv.values.size() == 30);
  CHECK(fv.label == 2);
  CHECK(fv.subject == 1);

  // Per channel: [rms, mav, zc, ssc, ar1, skew, wl, iav, m1..m7].
  for (std::size_t ch = 0; ch < 2; ++ch) {
    const std::size_t o = ch * 15;
    CHECK(fv.values[o + 0] == doctest::Approx(1.0));   // rms
    CHECK(fv.values[o + 1] == doctest::Approx(1.0));   // mav
    CHECK(fv.values[o + 2] == 0.0);                    // zc
    CHECK(fv.values[o + 3] == 0.0);                    // ssc
    CHECK(fv.values[o + 4] == 0.0);                    // ar1 (degenerate)
    CHECK(fv.values[o + 5] == 0.0);                    // skewness (degenerate)
    CHECK(fv.values[o + 6] == 0.0);                    // wl
    CHECK(fv.values[o + 7] == doctest::Approx(32.0));  // iav
    CHECK(fv.values[o + 8] == doctest::Approx(1.0));   // m1 = raw mean
    for (std::size_t k = 9; k < 15; ++k) CHECK(fv.values[o + k] == 0.0);
  }
  // Degenerate AR and skewness are flagged per channel.
  CHECK(fv.warnings.size() == 4);
}

TEST_CASE("extract: vector length, scaling invariance, determinism") {
  RandomSource rng(18);
  Recording rec;
  rec.class_id = 0;
  rec.channels[0] = testutil::random_vector(rng, 64);
  rec.channels[1] = testutil::random_vector(rng, 64);

  const FeatureVector fv = extract(rec);
  CHECK(fv.values.size() == 30);
  CHECK(fv.values.size() == 2 * features_per_channel());

  Recording scaled = rec;
  for (auto& ch : scaled.channels) {
    for (double& v : ch) v *= 3.7;
  }
  const FeatureVector fs = extract(scaled);
  // ZC and SSC counts are scale-invariant at zero thresholds.
  for (std::size_t o : {std::size_t{0}, std::size_t{15}}) {
    CHECK(fs.values[o + 2] == fv.values[o + 2]);
    CHECK(fs.values[o + 3] == fv.values[o + 3]);
  }

  const FeatureVector again = extract(rec);
  CHECK(again.values == fv.values);
}

TEST_CASE("ar_full flag grows the vector") {
  FeatureConfig cfg;
  cfg.ar_full = true;
  CHECK(features_per_channel(cfg) == 18);  // 7 + 4 + 7
  CHECK(feature_names(cfg).size() == 36);
}

TEST_CASE("feature names match the ordering contract") {
  const auto names = feature_names();
  REQUIRE(names.size() == 30);
  CHECK(names.front() == "chA_rms");
  CHECK(names[1] == "chA_mav");
  CHECK(names[2] == "chA_zc");
  CHECK(names[3] == "chA_ssc");
  CHECK(names[4] == "chA_ar1");
  CHECK(names[5] == "chA_skew");
  CHECK(names[6] == "chA_wl");
  CHECK(names[7] == "chA_iav");
  CHECK(names[8] == "chA_m1");
  CHECK(names[15] == "chB_rms");
  CHECK(names.back() == "chB_m7");
}
