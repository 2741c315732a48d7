#pragma once

#include <cstddef>
#include <utility>

#include "cpboot/dataset.hpp"
#include "cpboot/distributions.hpp"
#include "cpboot/stream.hpp"

namespace cpboot {

// One-jump regression truth: E[Y|Z=z] = alpha0 for z <= zeta0, beta0 above,
// with additive zero-mean error independent of Z. The search interval [a,b]
// must contain zeta0 in its interior and leave covariate mass on both sides.
struct ModelConfig {
  double alpha0;
  double beta0;
  double zeta0;
  double a;
  double b;
  DistributionSpec covariate;
  DistributionSpec error;

  void validate() const;  // throws std::invalid_argument on violations
};

// Central 95% interval of the covariate law; the default search interval
// when a configuration does not pin [a,b] explicitly.
std::pair<double, double> default_interval(const DistributionSpec& covariate);

double regression_mean(const ModelConfig& config, double z);

// n i.i.d. observations; per observation the draw order is z then error.
DataSet generate(const ModelConfig& config, std::size_t n, RandomStream& stream);

}  // namespace cpboot
