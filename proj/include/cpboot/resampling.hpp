#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cpboot/dataset.hpp"
#include "cpboot/estimator.hpp"
#include "cpboot/stream.hpp"

namespace cpboot {

// Resampling schemes for the change-point roots:
//   ecdf     - pairs (y,z) with replacement, resample size n
//   residual - fixed design, centered residuals onto the fitted stump
//   smoothed - covariate from a Gaussian KDE, residuals independently
//   moon     - m-out-of-n pairs with replacement, m = ceil(n^exponent)
struct BootstrapScheme {
  enum class Kind { Ecdf, Residual, Smoothed, MOutOfN };

  Kind kind = Kind::Ecdf;
  double exponent = 0.8;  // MOutOfN only, in (0,1)

  static BootstrapScheme ecdf() { return {Kind::Ecdf, 0.0}; }
  static BootstrapScheme residual() { return {Kind::Residual, 0.0}; }
  static BootstrapScheme smoothed() { return {Kind::Smoothed, 0.0}; }
  static BootstrapScheme m_out_of_n(double exponent);

  std::size_t resample_size(std::size_t n) const;
  std::string name() const;
  static BootstrapScheme parse(const std::string& text);
};

// Gaussian kernel density estimate over the observed covariates.
struct KdeModel {
  std::vector<double> centers;
  double bandwidth = 0.0;
};

// Normal reference rule: 1.06 * sd(z) * n^(-1/5), sd with divisor n-1.
double bandwidth_normal_reference(std::span<const double> z);

KdeModel make_kde(std::span<const double> z);

// One draw: uniformly chosen center plus bandwidth * standard normal.
double kde_sample(const KdeModel& kde, RandomStream& stream);
double kde_cdf(const KdeModel& kde, double x);
double kde_pdf(const KdeModel& kde, double x);

// One bootstrap dataset under the given scheme. `fit` must come from `data`.
DataSet resample(const DataSet& data, const FitResult& fit, const BootstrapScheme& scheme,
                 RandomStream& stream);

// Scaled bootstrap roots for the three parameters.
struct RootSamples {
  BootstrapScheme scheme;
  std::size_t m = 0;  // resample size
  std::vector<double> zeta_roots;   // m * (zeta* - zeta_hat)
  std::vector<double> alpha_roots;  // sqrt(m) * (alpha* - alpha_hat)
  std::vector<double> beta_roots;   // sqrt(m) * (beta* - beta_hat)
  std::size_t B = 0;
};

// B replicates of resample-then-refit on the same [a,b]; replicate k draws
// from the child stream ("boot", k), so results do not depend on evaluation
// order.
RootSamples bootstrap_roots(const DataSet& data, const FitResult& fit,
                            const BootstrapScheme& scheme, std::size_t B, double a,
                            double b, const StreamKey& key);

}  // namespace cpboot
