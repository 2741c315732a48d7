#include "cpboot/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cpboot {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kSqrt2 = 1.4142135623730950488;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

}  // namespace

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
  require(std::isfinite(mu) && std::isfinite(sigma), "normal: parameters must be finite");
  require(sigma > 0.0, "normal: sigma must be > 0");
  return DistributionSpec(Normal{mu, sigma});
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi), "uniform: bounds must be finite");
  require(lo < hi, "uniform: lo must be < hi");
  return DistributionSpec(Uniform{lo, hi});
}

DistributionSpec DistributionSpec::scaled_beta(double a, double b, double scale,
                                               double shift) {
  require(std::isfinite(a) && std::isfinite(b) && std::isfinite(scale) &&
              std::isfinite(shift),
          "scaled_beta: parameters must be finite");
  require(a > 0.0 && b > 0.0, "scaled_beta: shape parameters must be > 0");
  require(scale > 0.0, "scaled_beta: scale must be > 0");
  return DistributionSpec(ScaledBeta{a, b, scale, shift});
}

DistributionSpec DistributionSpec::shifted_gamma(double shape, double rate,
                                                 double shift) {
  require(std::isfinite(shape) && std::isfinite(rate) && std::isfinite(shift),
          "shifted_gamma: parameters must be finite");
  require(shape > 0.0 && rate > 0.0, "shifted_gamma: shape and rate must be > 0");
  return DistributionSpec(ShiftedGamma{shape, rate, shift});
}

std::string DistributionSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Normal>)
          os << "normal(mu=" << d.mu << ", sigma=" << d.sigma << ")";
        else if constexpr (std::is_same_v<T, Uniform>)
          os << "uniform(" << d.lo << ", " << d.hi << ")";
        else if constexpr (std::is_same_v<T, ScaledBeta>)
          os << d.scale << "*beta(" << d.a << ", " << d.b << ")+" << d.shift;
        else
          os << "gamma(" << d.shape << ", " << d.rate << ")+" << d.shift;
      },
      v_);
  return os.str();
}

Moments moments(const DistributionSpec& dist) {
  return std::visit(
      [](const auto& d) -> Moments {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DistributionSpec::Normal>) {
          return {d.mu, d.sigma * d.sigma};
        } else if constexpr (std::is_same_v<T, DistributionSpec::Uniform>) {
          const double w = d.hi - d.lo;
          return {0.5 * (d.lo + d.hi), w * w / 12.0};
        } else if constexpr (std::is_same_v<T, DistributionSpec::ScaledBeta>) {
          const double s = d.a + d.b;
          const double m = d.a / s;
          const double v = d.a * d.b / (s * s * (s + 1.0));
          return {d.scale * m + d.shift, d.scale * d.scale * v};
        } else {
          return {d.shape / d.rate + d.shift, d.shape / (d.rate * d.rate)};
        }
      },
      dist.variant());
}

double pdf(const DistributionSpec& dist, double x) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DistributionSpec::Normal>) {
          const double z = (x - d.mu) / d.sigma;
          return kInvSqrt2Pi / d.sigma * std::exp(-0.5 * z * z);
        } else if constexpr (std::is_same_v<T, DistributionSpec::Uniform>) {
          return (x >= d.lo && x <= d.hi) ? 1.0 / (d.hi - d.lo) : 0.0;
        } else if constexpr (std::is_same_v<T, DistributionSpec::ScaledBeta>) {
          const double u = (x - d.shift) / d.scale;
          if (u <= 0.0 || u >= 1.0) return 0.0;
          const double log_norm = std::lgamma(d.a + d.b) - std::lgamma(d.a) -
                                  std::lgamma(d.b);
          return std::exp(log_norm + (d.a - 1.0) * std::log(u) +
                          (d.b - 1.0) * std::log1p(-u)) /
                 d.scale;
        } else {
          const double t = x - d.shift;
          if (t <= 0.0) return 0.0;
          return std::exp(d.shape * std::log(d.rate) + (d.shape - 1.0) * std::log(t) -
                          d.rate * t - std::lgamma(d.shape));
        }
      },
      dist.variant());
}

double cdf(const DistributionSpec& dist, double x) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DistributionSpec::Normal>) {
          return normal_cdf((x - d.mu) / d.sigma);
        } else if constexpr (std::is_same_v<T, DistributionSpec::Uniform>) {
          if (x <= d.lo) return 0.0;
          if (x >= d.hi) return 1.0;
          return (x - d.lo) / (d.hi - d.lo);
        } else if constexpr (std::is_same_v<T, DistributionSpec::ScaledBeta>) {
          const double u = (x - d.shift) / d.scale;
          if (u <= 0.0) return 0.0;
          if (u >= 1.0) return 1.0;
          return boost::math::ibeta(d.a, d.b, u);
        } else {
          const double t = x - d.shift;
          if (t <= 0.0) return 0.0;
          return boost::math::gamma_p(d.shape, d.rate * t);
        }
      },
      dist.variant());
}

double sample(const DistributionSpec& dist, RandomStream& stream) {
  return std::visit(
      [&stream](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DistributionSpec::Normal>) {
          return d.mu + d.sigma * stream.normal();
        } else if constexpr (std::is_same_v<T, DistributionSpec::Uniform>) {
          return d.lo + (d.hi - d.lo) * stream.next_unit();
        } else if constexpr (std::is_same_v<T, DistributionSpec::ScaledBeta>) {
          return d.scale * stream.beta(d.a, d.b) + d.shift;
        } else {
          return stream.gamma(d.shape) / d.rate + d.shift;
        }
      },
      dist.variant());
}

double quantile(const DistributionSpec& dist, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("quantile: p must be in (0,1)");
  const Moments m = moments(dist);
  const double sd = std::sqrt(m.variance);
  double lo = m.mean - 10.0 * sd;
  double hi = m.mean + 10.0 * sd;
  while (cdf(dist, lo) > p) lo -= 10.0 * sd;
  while (cdf(dist, hi) < p) hi += 10.0 * sd;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(dist, mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cpboot
