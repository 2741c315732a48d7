#include <doctest.h>

#include <cmath>
#include <vector>

#include "cpboot/errors.hpp"
#include "cpboot/inference.hpp"
#include "cpboot/model.hpp"
#include "cpboot/stats.hpp"

using namespace cpboot;

namespace {

RootSamples fixed_roots(std::vector<double> zeta) {
  RootSamples r;
  r.scheme = BootstrapScheme::ecdf();
  r.B = zeta.size();
  r.m = 10;
  r.alpha_roots.assign(zeta.size(), 0.0);
  r.beta_roots.assign(zeta.size(), 0.0);
  r.zeta_roots = std::move(zeta);
  return r;
}

FitResult fixed_fit(double alpha, double beta, double zeta) {
  FitResult f;
  f.theta_hat = {alpha, beta, zeta};
  return f;
}

}  // namespace

TEST_SUITE("inference") {

TEST_CASE("order-statistic quantiles") {
  const std::vector<double> s{-2.0, -1.0, 0.0, 1.0, 2.0};
  CHECK(empirical_quantile(s, 0.975) == 2.0);
  CHECK(empirical_quantile(s, 0.025) == -2.0);
  CHECK(empirical_quantile(s, 0.0) == -2.0);
  CHECK(empirical_quantile(s, 0.5) == 0.0);
  CHECK(empirical_quantile(s, 1.0) == 2.0);
  CHECK_THROWS_AS(empirical_quantile(std::vector<double>{}, 0.5), EmptySamplesError);
  CHECK_THROWS(empirical_quantile(s, 1.5));
}

TEST_CASE("quantile sandwich") {
  RandomStream st = derive_stream(StreamKey{31, {}});
  std::vector<double> s(173);
  for (double& v : s) v = st.normal();
  for (int j = 1; j < 200; ++j) {
    const double p = j / 200.0;
    const double q = empirical_quantile(s, p);
    std::size_t at_most = 0;
    for (double v : s) at_most += v <= q ? 1 : 0;
    CHECK(static_cast<double>(at_most) / static_cast<double>(s.size()) + 1e-12 >= p);
  }
}

TEST_CASE("root inversion by hand") {
  const auto roots = fixed_roots({-2.0, -1.0, 0.0, 1.0, 2.0});
  const ConfidenceInterval ci = root_ci(fixed_fit(0, 0, 0.5), roots, 10, 0.95, Target::zeta);
  CHECK(ci.lo == doctest::Approx(0.3));
  CHECK(ci.hi == doctest::Approx(0.7));
  CHECK(covers(ci, 0.5));
  CHECK(covers(ci, 0.7));  // closed interval
  CHECK(!covers(ci, 0.71));
  CHECK(length(ci) == doctest::Approx(0.4));
}

TEST_CASE("degenerate and symmetric roots") {
  const auto zeros = fixed_roots(std::vector<double>(25, 0.0));
  const ConfidenceInterval point = root_ci(fixed_fit(0, 0, 0.37), zeros, 50, 0.95, Target::zeta);
  CHECK(point.lo == 0.37);
  CHECK(point.hi == 0.37);

  std::vector<double> sym;
  for (int i = -10; i <= 10; ++i) sym.push_back(i);
  const ConfidenceInterval ci = root_ci(fixed_fit(0, 0, 1.0), fixed_roots(sym), 20, 0.9, Target::zeta);
  CHECK(ci.hi - 1.0 == doctest::Approx(1.0 - ci.lo));
}

TEST_CASE("level validation and monotonicity") {
  const auto roots = fixed_roots({-2, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 2, 3,
                                  -3, 0.1, -0.1, 0.2, -0.2, 0.3, -0.3, 1.2, -1.2, 0.7});
  const FitResult f = fixed_fit(0, 0, 0);
  CHECK_THROWS_AS(root_ci(f, roots, 10, 0.0, Target::zeta), InvalidLevelError);
  CHECK_THROWS_AS(root_ci(f, roots, 10, 1.0, Target::zeta), InvalidLevelError);
  CHECK_THROWS_AS(root_ci(f, fixed_roots({}), 10, 0.5, Target::zeta), EmptySamplesError);

  double prev = -1.0;
  for (double level : {0.5, 0.8, 0.9, 0.95, 0.99}) {
    const double len = length(root_ci(f, roots, 10, level, Target::zeta));
    CHECK(len >= prev);
    prev = len;
  }
}

TEST_CASE("alpha and beta intervals scale by sqrt(n)") {
  RootSamples r = fixed_roots(std::vector<double>(30, 0.0));
  for (std::size_t i = 0; i < 30; ++i) {
    r.alpha_roots[i] = static_cast<double>(i) - 15.0;
    r.beta_roots[i] = 2.0 * (static_cast<double>(i) - 15.0);
  }
  const FitResult f = fixed_fit(-1.0, 1.0, 0.0);
  const ConfidenceInterval ca = root_ci(f, r, 100, 0.9, Target::alpha);
  CHECK(ca.target == Target::alpha);
  // quantiles of alpha roots at levels .05/.95 are -14 and +13 -> /sqrt(100)
  CHECK(ca.lo == doctest::Approx(-1.0 - 13.0 / 10.0));
  CHECK(ca.hi == doctest::Approx(-1.0 + 14.0 / 10.0));
  const ConfidenceInterval cb = root_ci(f, r, 100, 0.9, Target::beta);
  CHECK(length(cb) == doctest::Approx(2.0 * length(ca)));
}

TEST_CASE("shifting the data shifts level intervals and fixes the zeta interval") {
  const ModelConfig m{-1.0, 1.0, 0.0, -1.959963984540054, 1.959963984540054,
                      DistributionSpec::normal(0.0, 1.0),
                      DistributionSpec::normal(0.0, 1.0)};
  RandomStream gen = derive_stream(StreamKey{32, {}}.child("data", 0));
  const DataSet d = generate(m, 120, gen);
  DataSet shifted = d;
  for (double& y : shifted.y) y += 2.0;

  const FitResult f1 = fit(d, m.a, m.b);
  const FitResult f2 = fit(shifted, m.a, m.b);
  const StreamKey key = StreamKey{32, {}}.child("boot", 0);
  const auto scheme = BootstrapScheme::ecdf();
  const RootSamples r1 = bootstrap_roots(d, f1, scheme, 200, m.a, m.b, key);
  const RootSamples r2 = bootstrap_roots(shifted, f2, scheme, 200, m.a, m.b, key);

  const ConfidenceInterval z1 = root_ci(f1, r1, 120, 0.95, Target::zeta);
  const ConfidenceInterval z2 = root_ci(f2, r2, 120, 0.95, Target::zeta);
  CHECK(z2.lo == doctest::Approx(z1.lo).epsilon(1e-9));
  CHECK(z2.hi == doctest::Approx(z1.hi).epsilon(1e-9));

  const ConfidenceInterval a1 = root_ci(f1, r1, 120, 0.95, Target::alpha);
  const ConfidenceInterval a2 = root_ci(f2, r2, 120, 0.95, Target::alpha);
  CHECK(a2.lo == doctest::Approx(a1.lo + 2.0).epsilon(1e-9));
  CHECK(a2.hi == doctest::Approx(a1.hi + 2.0).epsilon(1e-9));
}

}  // TEST_SUITE
