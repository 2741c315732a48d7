#include "cpboot/limitlaw.hpp"

#include <cmath>
#include <stdexcept>

#include "cpboot/errors.hpp"
#include "cpboot/parallel.hpp"
#include "cpboot/stats.hpp"

namespace cpboot {

void LimitSpec::validate() const {
  if (!(f_zeta0 > 0.0)) throw std::invalid_argument("limit spec: f_zeta0 must be > 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("limit spec: sigma2 must be > 0");
  if (!(p_left > 0.0 && p_left < 1.0))
    throw std::invalid_argument("limit spec: p_left must be in (0,1)");
  if (!(alpha0 != beta0))
    throw std::invalid_argument("limit spec: alpha0 and beta0 must differ");
  const Moments m = moments(error);
  if (std::abs(m.mean) > 1e-9 || std::abs(m.variance - sigma2) > 1e-9)
    throw std::invalid_argument(
        "limit spec: error law must have mean 0 and variance sigma2");
}

namespace detail {

// The jump component of the limit process, after profiling out the two
// quadratic coordinates, is a two-sided step function:
//
//   right, h >= 0: value sum_{j<=k} (2*(alpha0-beta0)*u_j - gap^2) * mark_j
//                  on [s_k, s_{k+1}), jump times s_k ~ partial Exp(f) sums
//   left,  h < 0:  value sum_{j<=k} (2*(beta0-alpha0)*v_j - gap^2) * mark_j
//                  on [-t_{k+1}, -t_k)   (the left counting process is
//                  left-continuous, so stretch k opens at -t_{k+1})
//
// with u_j, v_j i.i.d. error draws and gap = alpha0 - beta0. Both sides
// share the stretch value 0 around the origin, so a global maximum at level
// 0 resolves to -t_1. The smallest argmax is the left endpoint of the
// leftmost maximizing stretch: on the right that means strict improvement
// keeps the earliest stretch, on the left ties move further out.
double sample_jump_argmax(const LimitSpec& spec, RandomStream& stream,
                          bool poisson_marks, JumpSignConvention convention,
                          double stop_scale, JumpWalkTrace* trace) {
  const double gap = spec.alpha0 - spec.beta0;
  const double gap2 = gap * gap;
  const double sigma = std::sqrt(spec.sigma2);
  const double rate = spec.f_zeta0;
  // Deficit beyond which a rebound of the negative-drift walk is negligible;
  // validated by the stop-doubling diagnostic in the tests.
  const double stop_deficit =
      30.0 * (gap2 + 4.0 * sigma * std::abs(gap)) * (poisson_marks ? 3.0 : 1.0) *
      stop_scale;
  const std::size_t cap = 100000;

  const double coef_right = convention == JumpSignConvention::standard ? 2.0 * gap : -2.0 * gap;
  const double coef_left = -coef_right;

  RandomStream right_stream = stream.split();
  RandomStream left_stream = stream.split();

  // right side: stretch 0 is [0, s_1) at value 0
  double best_right = 0.0;
  double best_right_pos = 0.0;
  {
    double t = 0.0;
    double value = 0.0;
    std::size_t k = 0;
    for (;; ++k) {
      if (k >= cap)
        throw TruncationOverflowError("jump walk: right side exceeded jump cap");
      t += right_stream.exponential(rate);
      const double mark =
          poisson_marks ? static_cast<double>(right_stream.poisson_unit()) : 1.0;
      const double u = sample(spec.error, right_stream);
      value += (coef_right * u - gap2) * mark;
      if (trace) trace->right_values.push_back(value);
      if (value > best_right) {
        best_right = value;
        best_right_pos = t;
      }
      if (value <= best_right - stop_deficit) break;
    }
  }

  // left side: stretch 0 is [-t_1, 0) at value 0
  double best_left = 0.0;
  double best_left_pos = 0.0;
  {
    double t = left_stream.exponential(rate);  // t_1
    best_left_pos = -t;
    double value = 0.0;
    std::size_t k = 0;
    for (;; ++k) {
      if (k >= cap)
        throw TruncationOverflowError("jump walk: left side exceeded jump cap");
      const double mark =
          poisson_marks ? static_cast<double>(left_stream.poisson_unit()) : 1.0;
      const double v = sample(spec.error, left_stream);
      value += (coef_left * v - gap2) * mark;
      t += left_stream.exponential(rate);
      if (trace) trace->left_values.push_back(value);
      if (value >= best_left) {
        best_left = value;
        best_left_pos = -t;
      }
      if (value <= best_left - stop_deficit) break;
    }
  }

  const double best_value = best_left >= best_right ? best_left : best_right;
  const double best_pos = best_left >= best_right ? best_left_pos : best_right_pos;
  if (trace) {
    trace->best_value = best_value;
    trace->best_position = best_pos;
  }
  return best_pos;
}

}  // namespace detail

namespace {

LimitDraw sample_draw(const LimitSpec& spec, RandomStream& stream, bool poisson_marks,
                      JumpSignConvention convention) {
  spec.validate();
  RandomStream gauss = stream.split();
  LimitDraw draw;
  const double p = spec.p_left;
  draw.phi1 = std::sqrt(spec.sigma2 * p) * gauss.normal() / p;
  draw.phi2 = std::sqrt(spec.sigma2 * (1.0 - p)) * gauss.normal() / (1.0 - p);
  draw.phi3 =
      detail::sample_jump_argmax(spec, stream, poisson_marks, convention, 1.0, nullptr);
  return draw;
}

}  // namespace

LimitDraw sample_E_star(const LimitSpec& spec, RandomStream& stream,
                        JumpSignConvention convention) {
  return sample_draw(spec, stream, false, convention);
}

LimitDraw sample_E_tilde_star(const LimitSpec& spec, RandomStream& stream,
                              JumpSignConvention convention) {
  return sample_draw(spec, stream, true, convention);
}

LimitSpec limit_spec_from_model(const ModelConfig& config) {
  config.validate();
  LimitSpec spec{pdf(config.covariate, config.zeta0), moments(config.error).variance,
                 cdf(config.covariate, config.zeta0), config.alpha0, config.beta0,
                 config.error};
  spec.validate();
  return spec;
}

std::pair<double, double> variance_report(const LimitSpec& spec, std::size_t count,
                                          const StreamKey& key, int threads) {
  if (count < 1000) throw std::invalid_argument("variance_report: need count >= 1000");
  spec.validate();
  std::vector<double> phi3_e(count), phi3_tilde(count);
  parallel_for(count, threads, [&](std::size_t i) {
    RandomStream se = derive_stream(key.child("estar", i));
    phi3_e[i] = sample_E_star(spec, se).phi3;
    RandomStream st = derive_stream(key.child("etilde", i));
    phi3_tilde[i] = sample_E_tilde_star(spec, st).phi3;
  });
  return {variance(phi3_e), variance(phi3_tilde)};
}

}  // namespace cpboot
