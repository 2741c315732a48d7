#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cpboot/dataset.hpp"

namespace cpboot {

struct Theta {
  double alpha;
  double beta;
  double zeta;
};

struct FitResult {
  Theta theta_hat;
  double objective;
  std::vector<double> residuals;
  std::vector<double> centered_residuals;
  std::size_t candidate_count;
};

// Least-squares criterion: minus the mean squared residual of the stump with
// parameters theta. Always <= 0; 0 only for an exact fit.
double objective(const DataSet& data, const Theta& theta);

// Least-squares fit with the smallest maximizing split point. The split
// profile is piecewise constant in zeta with jumps only at data points, so
// the search is exact over the candidate set {a} + {z_i in (a,b]}. For each
// candidate the side means maximize the criterion in closed form; ties in
// the profile value resolve to the smallest zeta. O(n log n): one sort plus
// a prefix/suffix sweep.
FitResult fit(const DataSet& data, double a, double b);

// Same contract as fit(), but every candidate is evaluated by fresh passes
// over the data instead of reusing running sums. Testing oracle.
FitResult fit_bruteforce(const DataSet& data, double a, double b);

// Raw stump residuals and their mean-centered version, in data order.
std::pair<std::vector<double>, std::vector<double>> residuals(const DataSet& data,
                                                              const Theta& theta);

namespace detail {

// Data sorted by z (ties kept in input order); shared by both fit paths.
struct SortedData {
  std::vector<double> z;
  std::vector<double> y;
};
SortedData sort_by_z(const DataSet& data);

// A split candidate: the zeta value and the count k of points with z <= zeta.
struct Candidate {
  double zeta;
  std::size_t k;
};
std::vector<Candidate> candidate_splits(const SortedData& sorted, double a, double b);

struct SplitSums {
  double sum_left = 0.0;
  double sumsq_left = 0.0;
  double sum_right = 0.0;
  double sumsq_right = 0.0;
};

// Profile value at a split; both fit paths feed this the same sums so the
// selected maximizer is identical between them.
double split_value(const SplitSums& sums, std::size_t k, std::size_t n);

}  // namespace detail

}  // namespace cpboot
