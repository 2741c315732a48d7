#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cpboot/errors.hpp"
#include "cpboot/model.hpp"
#include "cpboot/resampling.hpp"
#include "cpboot/stats.hpp"

using namespace cpboot;

namespace {

DataSet sample_data(std::uint64_t seed, std::size_t n) {
  const ModelConfig m{-1.0, 1.0, 0.0, -1.959963984540054, 1.959963984540054,
                      DistributionSpec::normal(0.0, 1.0),
                      DistributionSpec::normal(0.0, 1.0)};
  RandomStream s = derive_stream(StreamKey{seed, {}}.child("data", 0));
  return generate(m, n, s);
}

}  // namespace

TEST_SUITE("resampling") {

TEST_CASE("normal reference bandwidth") {
  std::vector<double> z;
  // sd exactly 2: alternate -2, 2 -> mean 0, sample variance 4*n/(n-1)... use
  // a direct check against the formula instead of a magic sequence
  RandomStream s = derive_stream(StreamKey{21, {}});
  for (int i = 0; i < 100; ++i) z.push_back(s.normal());
  const double sd = std::sqrt(variance(z));
  CHECK(bandwidth_normal_reference(z) ==
        doctest::Approx(1.06 * sd * std::pow(100.0, -0.2)).epsilon(1e-12));

  // n=100, sd=2 pins h to 2.12/100^(1/5)
  std::vector<double> scaled = z;
  const double m = mean(z);
  for (double& v : scaled) v = (v - m) * (2.0 / sd);
  CHECK(bandwidth_normal_reference(scaled) == doctest::Approx(0.84398689407050679).epsilon(1e-6));

  CHECK_THROWS_AS(bandwidth_normal_reference(std::vector<double>{1.0}), ZeroSpreadError);
  CHECK_THROWS_AS(bandwidth_normal_reference(std::vector<double>{1.0, 1.0, 1.0}),
                  ZeroSpreadError);
}

TEST_CASE("bandwidth scales with the data") {
  RandomStream s = derive_stream(StreamKey{22, {}});
  std::vector<double> z(64);
  for (double& v : z) v = s.normal();
  const double h = bandwidth_normal_reference(z);
  std::vector<double> z2 = z;
  for (double& v : z2) v *= 2.0;  // power of two: sums scale exactly
  CHECK(bandwidth_normal_reference(z2) == 2.0 * h);
}

TEST_CASE("kde closed forms") {
  KdeModel kde{{0.0}, 1.0};
  CHECK(kde_cdf(kde, 0.0) == doctest::Approx(0.5));
  CHECK(kde_pdf(kde, 0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-12));
}

TEST_CASE("kde sampling matches the mixture") {
  const DataSet d = sample_data(23, 200);
  const KdeModel kde = make_kde(d.z);
  RandomStream s = derive_stream(StreamKey{23, {}}.child("kde", 0));
  std::vector<double> x(100000);
  for (double& v : x) v = kde_sample(kde, s);

  const double center_mean = mean(kde.centers);
  const double center_var = variance(kde.centers);  // divisor n-1
  const double n = static_cast<double>(kde.centers.size());
  CHECK(std::abs(mean(x) - center_mean) < 4.0 * std::sqrt(variance(x) / 100000.0));
  CHECK(variance(x) ==
        doctest::Approx(center_var * (n - 1.0) / n + kde.bandwidth * kde.bandwidth)
            .epsilon(0.03));

  CHECK(ks_distance(x, [&](double v) { return kde_cdf(kde, v); }) < 0.01);
}

TEST_CASE("kde density approaches the covariate density as n grows") {
  const ModelConfig m{-1.0, 1.0, 0.0, -3.919927969080108, 3.919927969080108,
                      DistributionSpec::normal(0.0, 2.0),
                      DistributionSpec::normal(0.0, 1.0)};
  auto sup_error = [&](std::size_t n, std::uint64_t seed) {
    RandomStream s = derive_stream(StreamKey{seed, {}}.child("kdeconv", n));
    const DataSet d = generate(m, n, s);
    const KdeModel kde = make_kde(d.z);
    double sup = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = -1.0 + 0.02 * i;
      sup = std::max(sup, std::abs(kde_pdf(kde, x) - pdf(m.covariate, x)));
    }
    return sup;
  };
  std::vector<double> small, large;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    small.push_back(sup_error(200, seed));
    large.push_back(sup_error(5000, seed));
  }
  CHECK(median(large) < median(small));
}

TEST_CASE("scheme parsing and resample sizes") {
  CHECK(BootstrapScheme::parse("ecdf").kind == BootstrapScheme::Kind::Ecdf);
  CHECK(BootstrapScheme::parse("fdr").kind == BootstrapScheme::Kind::Residual);
  CHECK(BootstrapScheme::parse("moon:0.8").exponent == doctest::Approx(0.8));
  CHECK_THROWS(BootstrapScheme::parse("moon:1.5"));
  CHECK_THROWS(BootstrapScheme::parse("jackknife"));
  CHECK(BootstrapScheme::parse("moon:0.8").name() == "moon:0.8");

  const BootstrapScheme moon = BootstrapScheme::m_out_of_n(0.8);
  CHECK(moon.resample_size(50) == 23);
  CHECK(moon.resample_size(200) == 70);
  CHECK(moon.resample_size(500) == 145);
  CHECK(BootstrapScheme::ecdf().resample_size(200) == 200);
}

TEST_CASE("residual scheme keeps the design fixed") {
  const DataSet d = sample_data(24, 80);
  const FitResult f = fit(d, -1.96, 1.96);
  RandomStream s = derive_stream(StreamKey{24, {}}.child("res", 0));
  const DataSet star = resample(d, f, BootstrapScheme::residual(), s);
  CHECK(star.z == d.z);
  // bootstrapped responses differ from the stump by resampled centered
  // residuals (up to the one rounded addition in y* = stump + eps)
  for (std::size_t j = 0; j < star.size(); ++j) {
    const double eps =
        star.y[j] - (star.z[j] <= f.theta_hat.zeta ? f.theta_hat.alpha : f.theta_hat.beta);
    double nearest = 1e300;
    for (double r : f.centered_residuals)
      nearest = std::min(nearest, std::abs(r - eps));
    CHECK(nearest <= 1e-12);
  }
}

TEST_CASE("pairs schemes only replay observed pairs") {
  const DataSet d = sample_data(25, 60);
  const FitResult f = fit(d, -1.96, 1.96);
  std::set<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < d.size(); ++i) pairs.insert({d.z[i], d.y[i]});
  for (const auto& scheme : {BootstrapScheme::ecdf(), BootstrapScheme::m_out_of_n(0.8)}) {
    RandomStream s = derive_stream(StreamKey{25, {}}.child(scheme.name(), 0));
    const DataSet star = resample(d, f, scheme, s);
    CHECK(star.size() == scheme.resample_size(d.size()));
    for (std::size_t j = 0; j < star.size(); ++j)
      CHECK(pairs.count({star.z[j], star.y[j]}) == 1);
  }
}

TEST_CASE("smoothed scheme with zero residuals reproduces the stump") {
  DataSet d;
  for (int i = 0; i < 40; ++i) {
    const double z = -2.0 + 0.1 * i;
    d.z.push_back(z);
    d.y.push_back(z <= 0.0 ? -1.0 : 1.0);
  }
  const FitResult f = fit(d, -1.5, 1.5);
  REQUIRE(f.objective == 0.0);
  RandomStream s = derive_stream(StreamKey{26, {}}.child("smooth", 0));
  const DataSet star = resample(d, f, BootstrapScheme::smoothed(), s);
  for (std::size_t j = 0; j < star.size(); ++j)
    CHECK(star.y[j] == (star.z[j] <= f.theta_hat.zeta ? f.theta_hat.alpha : f.theta_hat.beta));
}

TEST_CASE("residual resample mean identity") {
  const DataSet d = sample_data(27, 100);
  const FitResult f = fit(d, -1.96, 1.96);
  RandomStream s = derive_stream(StreamKey{27, {}}.child("res", 0));
  const DataSet star = resample(d, f, BootstrapScheme::residual(), s);
  KahanSum shifted;
  for (std::size_t j = 0; j < star.size(); ++j)
    shifted.add(star.y[j] -
                (star.z[j] <= f.theta_hat.zeta ? f.theta_hat.alpha : f.theta_hat.beta));
  // equals the mean of the resampled centered residuals up to fp dust
  KahanSum probe_mean;
  RandomStream s2 = derive_stream(StreamKey{27, {}}.child("res", 0));
  for (std::size_t j = 0; j < star.size(); ++j)
    probe_mean.add(f.centered_residuals[s2.uniform_index(d.size())]);
  CHECK(shifted.value() / static_cast<double>(star.size()) ==
        doctest::Approx(probe_mean.value() / static_cast<double>(star.size()))
            .epsilon(1e-12));
}

TEST_CASE("noiseless residual roots are exactly zero") {
  DataSet d;
  for (int i = 0; i < 30; ++i) {
    const double z = -1.5 + 0.1 * i;
    d.z.push_back(z);
    d.y.push_back(z <= 0.05 ? -1.0 : 1.0);  // integer stump levels: exact sums
  }
  const FitResult f = fit(d, -1.0, 1.0);
  REQUIRE(f.objective == 0.0);
  const RootSamples roots = bootstrap_roots(d, f, BootstrapScheme::residual(), 1, -1.0,
                                            1.0, StreamKey{28, {}});
  CHECK(roots.zeta_roots[0] == 0.0);
  CHECK(roots.alpha_roots[0] == 0.0);
  CHECK(roots.beta_roots[0] == 0.0);
}

TEST_CASE("bootstrap roots are deterministic and scheme-scaled") {
  const DataSet d = sample_data(29, 50);
  const FitResult f = fit(d, -1.96, 1.96);
  const BootstrapScheme moon = BootstrapScheme::m_out_of_n(0.8);
  const RootSamples r1 = bootstrap_roots(d, f, moon, 40, -1.96, 1.96, StreamKey{29, {}});
  const RootSamples r2 = bootstrap_roots(d, f, moon, 40, -1.96, 1.96, StreamKey{29, {}});
  CHECK(r1.zeta_roots == r2.zeta_roots);
  CHECK(r1.alpha_roots == r2.alpha_roots);
  CHECK(r1.m == 23);
  CHECK(r1.B == 40);
  CHECK(r1.zeta_roots.size() == 40);
}

}  // TEST_SUITE
