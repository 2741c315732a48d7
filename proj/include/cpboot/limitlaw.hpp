#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cpboot/distributions.hpp"
#include "cpboot/model.hpp"
#include "cpboot/stream.hpp"

namespace cpboot {

// Nuisance parameters of the limiting criterion process: the covariate
// density and left-tail mass at the change-point, the error variance and
// law, and the two stump levels.
struct LimitSpec {
  double f_zeta0 = 0.0;  // covariate density at the change-point, > 0
  double sigma2 = 0.0;   // error variance, > 0
  double p_left = 0.0;   // P(Z <= zeta0), in (0,1)
  double alpha0 = 0.0;
  double beta0 = 0.0;
  DistributionSpec error;

  void validate() const;
};

// One draw of the smallest argmax of the limiting criterion.
struct LimitDraw {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

// The two jump parts of the limit process carry level-gap coefficients with
// opposite signs on the two sides; `swapped` exchanges them (this only
// changes the law for asymmetric error distributions).
enum class JumpSignConvention { standard, swapped };

namespace detail {

// Per-side record of the stretch values visited by the jump walk; test hook
// for the argmax certificate.
struct JumpWalkTrace {
  std::vector<double> left_values;   // value of left stretch k = 1, 2, ...
  std::vector<double> right_values;  // value of right stretch k = 1, 2, ...
  double best_value = 0.0;
  double best_position = 0.0;
};

// Smallest argmax of the two-sided piecewise-constant jump process. Jump
// times per side are partial sums of Exp(f_zeta0) gaps; jump values are the
// running sums described in limitlaw.cpp. `poisson_marks` multiplies every
// jump by an independent Poisson(1) mark. Each side stops once its running
// value falls stop_scale * D below its running maximum, where D bounds any
// realistic rebound; a hard cap of 1e5 jumps per side throws
// TruncationOverflowError.
double sample_jump_argmax(const LimitSpec& spec, RandomStream& stream,
                          bool poisson_marks, JumpSignConvention convention,
                          double stop_scale, JumpWalkTrace* trace);

}  // namespace detail

LimitDraw sample_E_star(const LimitSpec& spec, RandomStream& stream,
                        JumpSignConvention convention = JumpSignConvention::standard);

// Variant with Poisson(1)-multiplied jumps: the unconditional limit of the
// pairs-resampling root. Heavier jump tails, hence a 3x stopping margin.
LimitDraw sample_E_tilde_star(const LimitSpec& spec, RandomStream& stream,
                              JumpSignConvention convention = JumpSignConvention::standard);

LimitSpec limit_spec_from_model(const ModelConfig& config);

// Sample variances (divisor count-1) of phi3 under both samplers, from
// `count` draws each on per-draw child streams.
std::pair<double, double> variance_report(const LimitSpec& spec, std::size_t count,
                                          const StreamKey& key, int threads = 0);

}  // namespace cpboot
