#pragma once

#include <string>
#include <variant>

#include "cpboot/stream.hpp"

namespace cpboot {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// Continuous distribution families used for the covariate and error laws.
// All parameterizations are validated at construction.
class DistributionSpec {
 public:
  struct Normal {
    double mu, sigma;  // sigma > 0 (standard deviation)
  };
  struct Uniform {
    double lo, hi;  // lo < hi
  };
  // scale * Beta(a, b) + shift, scale > 0
  struct ScaledBeta {
    double a, b, scale, shift;
  };
  // Gamma(shape, rate) + shift; rate parameterization, mean shape/rate
  struct ShiftedGamma {
    double shape, rate, shift;
  };

  static DistributionSpec normal(double mu, double sigma);
  static DistributionSpec uniform(double lo, double hi);
  static DistributionSpec scaled_beta(double a, double b, double scale, double shift);
  static DistributionSpec shifted_gamma(double shape, double rate, double shift);

  const std::variant<Normal, Uniform, ScaledBeta, ShiftedGamma>& variant() const {
    return v_;
  }
  std::string describe() const;

 private:
  template <typename T>
  explicit DistributionSpec(T v) : v_(v) {}
  std::variant<Normal, Uniform, ScaledBeta, ShiftedGamma> v_;
};

Moments moments(const DistributionSpec& dist);
double pdf(const DistributionSpec& dist, double x);
double cdf(const DistributionSpec& dist, double x);
double sample(const DistributionSpec& dist, RandomStream& stream);

// Solves cdf(x) = p by bracket expansion and bisection.
double quantile(const DistributionSpec& dist, double p);

}  // namespace cpboot
