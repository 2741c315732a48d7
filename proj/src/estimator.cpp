#include "cpboot/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cpboot/errors.hpp"
#include "cpboot/stats.hpp"

namespace cpboot {

namespace detail {

SortedData sort_by_z(const DataSet& data) {
  const std::size_t n = data.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (data.z[i] != data.z[j]) return data.z[i] < data.z[j];
    return i < j;
  });
  SortedData sorted;
  sorted.z.resize(n);
  sorted.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted.z[i] = data.z[order[i]];
    sorted.y[i] = data.y[order[i]];
  }
  return sorted;
}

std::vector<Candidate> candidate_splits(const SortedData& sorted, double a, double b) {
  const std::size_t n = sorted.z.size();
  std::vector<Candidate> cands;
  const std::size_t k_a = static_cast<std::size_t>(
      std::upper_bound(sorted.z.begin(), sorted.z.end(), a) - sorted.z.begin());
  cands.push_back({a, k_a});
  for (std::size_t i = 0; i < n; ++i) {
    // last occurrence of each distinct z value
    if (i + 1 < n && sorted.z[i + 1] == sorted.z[i]) continue;
    if (sorted.z[i] > a && sorted.z[i] <= b) cands.push_back({sorted.z[i], i + 1});
  }
  return cands;
}

double split_value(const SplitSums& sums, std::size_t k, std::size_t n) {
  double sse_left = 0.0;
  double sse_right = 0.0;
  if (k > 0)
    sse_left = sums.sumsq_left - (sums.sum_left * sums.sum_left) / static_cast<double>(k);
  if (k < n)
    sse_right =
        sums.sumsq_right - (sums.sum_right * sums.sum_right) / static_cast<double>(n - k);
  return -(sse_left + sse_right) / static_cast<double>(n);
}

namespace {

// Unconstrained sides (k == 0 or k == n) take coefficient 0.
Theta theta_at(const SplitSums& sums, const Candidate& cand, std::size_t n) {
  const std::size_t k = cand.k;
  const double alpha = k > 0 ? sums.sum_left / static_cast<double>(k) : 0.0;
  const double beta = k < n ? sums.sum_right / static_cast<double>(n - k) : 0.0;
  return {alpha, beta, cand.zeta};
}

FitResult finish(const DataSet& data, const Theta& theta, std::size_t candidate_count) {
  FitResult result;
  result.theta_hat = theta;
  result.objective = objective(data, theta);
  auto [raw, centered] = residuals(data, theta);
  result.residuals = std::move(raw);
  result.centered_residuals = std::move(centered);
  result.candidate_count = candidate_count;
  return result;
}

void check_inputs(const DataSet& data, double a, double b) {
  if (data.size() == 0) throw EmptyDataError("fit: empty data");
  if (!(a < b)) throw DegenerateIntervalError("fit: need a < b");
}

}  // namespace

}  // namespace detail

double objective(const DataSet& data, const Theta& theta) {
  if (data.size() == 0) throw EmptyDataError("objective: empty data");
  KahanSum sum;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double fitted = data.z[i] <= theta.zeta ? theta.alpha : theta.beta;
    const double r = data.y[i] - fitted;
    sum.add(r * r);
  }
  return -sum.value() / static_cast<double>(data.size());
}

FitResult fit(const DataSet& data, double a, double b) {
  detail::check_inputs(data, a, b);
  const std::size_t n = data.size();
  const detail::SortedData sorted = detail::sort_by_z(data);
  const auto cands = detail::candidate_splits(sorted, a, b);

  // prefix[k]: accumulation state after the first k sorted points, left to
  // right; suffix[k]: after points k..n-1, right to left. The orders match
  // the fresh passes in fit_bruteforce term for term.
  std::vector<double> prefix_sum(n + 1, 0.0), prefix_sumsq(n + 1, 0.0);
  std::vector<double> suffix_sum(n + 1, 0.0), suffix_sumsq(n + 1, 0.0);
  {
    KahanSum s, s2;
    for (std::size_t i = 0; i < n; ++i) {
      s.add(sorted.y[i]);
      s2.add(sorted.y[i] * sorted.y[i]);
      prefix_sum[i + 1] = s.value();
      prefix_sumsq[i + 1] = s2.value();
    }
  }
  {
    KahanSum s, s2;
    for (std::size_t i = n; i-- > 0;) {
      s.add(sorted.y[i]);
      s2.add(sorted.y[i] * sorted.y[i]);
      suffix_sum[i] = s.value();
      suffix_sumsq[i] = s2.value();
    }
  }

  double best_value = -std::numeric_limits<double>::infinity();
  detail::Candidate best_cand{};
  detail::SplitSums best_sums{};
  for (const auto& cand : cands) {
    const detail::SplitSums sums{prefix_sum[cand.k], prefix_sumsq[cand.k],
                                 suffix_sum[cand.k], suffix_sumsq[cand.k]};
    const double value = detail::split_value(sums, cand.k, n);
    if (value > best_value) {  // strict: ties keep the smallest zeta
      best_value = value;
      best_cand = cand;
      best_sums = sums;
    }
  }
  return detail::finish(data, detail::theta_at(best_sums, best_cand, n), cands.size());
}

FitResult fit_bruteforce(const DataSet& data, double a, double b) {
  detail::check_inputs(data, a, b);
  const std::size_t n = data.size();
  const detail::SortedData sorted = detail::sort_by_z(data);
  const auto cands = detail::candidate_splits(sorted, a, b);

  double best_value = -std::numeric_limits<double>::infinity();
  detail::Candidate best_cand{};
  detail::SplitSums best_sums{};
  for (const auto& cand : cands) {
    detail::SplitSums sums;
    {
      KahanSum s, s2;
      for (std::size_t i = 0; i < cand.k; ++i) {
        s.add(sorted.y[i]);
        s2.add(sorted.y[i] * sorted.y[i]);
      }
      sums.sum_left = s.value();
      sums.sumsq_left = s2.value();
    }
    {
      KahanSum s, s2;
      for (std::size_t i = n; i-- > cand.k;) {
        s.add(sorted.y[i]);
        s2.add(sorted.y[i] * sorted.y[i]);
      }
      sums.sum_right = s.value();
      sums.sumsq_right = s2.value();
    }
    const double value = detail::split_value(sums, cand.k, n);
    if (value > best_value) {
      best_value = value;
      best_cand = cand;
      best_sums = sums;
    }
  }
  return detail::finish(data, detail::theta_at(best_sums, best_cand, n), cands.size());
}

std::pair<std::vector<double>, std::vector<double>> residuals(const DataSet& data,
                                                              const Theta& theta) {
  const std::size_t n = data.size();
  std::vector<double> raw(n);
  KahanSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double fitted = data.z[i] <= theta.zeta ? theta.alpha : theta.beta;
    raw[i] = data.y[i] - fitted;
    sum.add(raw[i]);
  }
  const double m = n > 0 ? sum.value() / static_cast<double>(n) : 0.0;
  std::vector<double> centered(n);
  for (std::size_t i = 0; i < n; ++i) centered[i] = raw[i] - m;
  return {std::move(raw), std::move(centered)};
}

}  // namespace cpboot
