#include "cpboot/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cpboot/errors.hpp"

namespace cpboot {

std::string target_name(Target target) {
  switch (target) {
    case Target::zeta:
      return "zeta";
    case Target::alpha:
      return "alpha";
    case Target::beta:
      return "beta";
  }
  return "?";
}

double empirical_quantile(std::span<const double> samples, double p) {
  if (samples.empty()) throw EmptySamplesError("empirical_quantile: no samples");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("empirical_quantile: p must be in [0,1]");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (p == 0.0) return sorted.front();
  const double scaled = p * static_cast<double>(sorted.size());
  // tiny downward nudge so that p*B lands on the intended order statistic
  // when the product picks up float dust (e.g. 0.95*2000)
  std::size_t rank = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

ConfidenceInterval root_ci(const FitResult& fit, const RootSamples& roots,
                           std::size_t n, double level, Target target) {
  if (!(level > 0.0 && level < 1.0))
    throw InvalidLevelError("root_ci: level must be in (0,1)");
  const std::vector<double>* samples = nullptr;
  double estimate = 0.0;
  double scale = 0.0;
  switch (target) {
    case Target::zeta:
      samples = &roots.zeta_roots;
      estimate = fit.theta_hat.zeta;
      scale = static_cast<double>(n);
      break;
    case Target::alpha:
      samples = &roots.alpha_roots;
      estimate = fit.theta_hat.alpha;
      scale = std::sqrt(static_cast<double>(n));
      break;
    case Target::beta:
      samples = &roots.beta_roots;
      estimate = fit.theta_hat.beta;
      scale = std::sqrt(static_cast<double>(n));
      break;
  }
  const double gamma = 1.0 - level;
  const double q_hi = empirical_quantile(*samples, 1.0 - gamma / 2.0);
  const double q_lo = empirical_quantile(*samples, gamma / 2.0);
  ConfidenceInterval ci;
  ci.lo = estimate - q_hi / scale;
  ci.hi = estimate - q_lo / scale;
  ci.level = level;
  ci.target = target;
  return ci;
}

bool covers(const ConfidenceInterval& ci, double truth) {
  return ci.lo <= truth && truth <= ci.hi;
}

double length(const ConfidenceInterval& ci) { return ci.hi - ci.lo; }

}  // namespace cpboot
