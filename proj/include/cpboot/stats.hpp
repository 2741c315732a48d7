#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cpboot/errors.hpp"

namespace cpboot {

// Compensated accumulator. The running value after each add() is a pure
// function of the add order, which the estimator relies on for the
// fast-path / brute-force equivalence.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

inline double mean(std::span<const double> x) {
  if (x.empty()) throw EmptySamplesError("mean of empty sample");
  KahanSum s;
  for (double v : x) s.add(v);
  return s.value() / static_cast<double>(x.size());
}

// Sample variance, divisor n-1.
inline double variance(std::span<const double> x) {
  if (x.size() < 2) throw EmptySamplesError("variance needs at least 2 points");
  const double m = mean(x);
  KahanSum s;
  for (double v : x) s.add((v - m) * (v - m));
  return s.value() / static_cast<double>(x.size() - 1);
}

inline double correlation(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x), my = mean(y);
  KahanSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy.add((x[i] - mx) * (y[i] - my));
    sxx.add((x[i] - mx) * (x[i] - mx));
    syy.add((y[i] - my) * (y[i] - my));
  }
  return sxy.value() / std::sqrt(sxx.value() * syy.value());
}

inline double median(std::vector<double> x) {
  if (x.empty()) throw EmptySamplesError("median of empty sample");
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  return (n % 2 == 1) ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

// Kolmogorov distance between the empirical CDF of a sample and a reference
// CDF.
inline double ks_distance(std::vector<double> sample,
                          const std::function<double(double)>& cdf) {
  if (sample.empty()) throw EmptySamplesError("ks_distance of empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw EmptySamplesError("ks_two_sample of empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace cpboot
