#include "cpboot/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cpboot {

void ModelConfig::validate() const {
  if (!(alpha0 != beta0))
    throw std::invalid_argument("model: alpha0 and beta0 must differ");
  if (!(a < zeta0 && zeta0 < b))
    throw std::invalid_argument("model: zeta0 must lie strictly inside [a,b]");
  const Moments em = moments(error);
  if (std::abs(em.mean) > 1e-12)
    throw std::invalid_argument("model: error law must have zero mean");
  if (!(em.variance > 0.0))
    throw std::invalid_argument("model: error law must have positive variance");
  if (!(cdf(covariate, a) > 0.0 && 1.0 - cdf(covariate, b) > 0.0))
    throw std::invalid_argument(
        "model: covariate must put mass below a and above b");
}

std::pair<double, double> default_interval(const DistributionSpec& covariate) {
  return {quantile(covariate, 0.025), quantile(covariate, 0.975)};
}

double regression_mean(const ModelConfig& config, double z) {
  return z <= config.zeta0 ? config.alpha0 : config.beta0;
}

DataSet generate(const ModelConfig& config, std::size_t n, RandomStream& stream) {
  if (n < 2) throw std::invalid_argument("generate: need n >= 2");
  config.validate();
  DataSet data;
  data.z.resize(n);
  data.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = sample(config.covariate, stream);
    const double eps = sample(config.error, stream);
    data.z[i] = z;
    data.y[i] = regression_mean(config, z) + eps;
  }
  return data;
}

}  // namespace cpboot
