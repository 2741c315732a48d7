#pragma once

#include <span>
#include <string>

#include "cpboot/estimator.hpp"
#include "cpboot/resampling.hpp"

namespace cpboot {

enum class Target { zeta, alpha, beta };

std::string target_name(Target target);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.0;
  Target target = Target::zeta;
};

// Order-statistic quantile: the ceil(p*B)-th smallest sample (the smallest
// for p = 0).
double empirical_quantile(std::span<const double> samples, double p);

// Root-inversion interval. Roots at scale m approximate the sampling law of
// the n-scaled estimation error, so the quantiles are always inverted
// against n: that is what makes the m-out-of-n roots usable directly.
ConfidenceInterval root_ci(const FitResult& fit, const RootSamples& roots,
                           std::size_t n, double level, Target target);

bool covers(const ConfidenceInterval& ci, double truth);
double length(const ConfidenceInterval& ci);

}  // namespace cpboot
