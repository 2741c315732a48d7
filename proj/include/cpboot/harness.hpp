#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpboot/model.hpp"
#include "cpboot/resampling.hpp"
#include "cpboot/stream.hpp"

namespace cpboot {

// Coverage study over a grid of sample sizes and schemes. boot_B empty
// means 4n replicates per bootstrap distribution.
struct ExperimentConfig {
  ModelConfig model;
  std::vector<std::size_t> n_values;
  std::vector<BootstrapScheme> schemes;
  std::size_t reps = 500;
  std::optional<std::size_t> boot_B;
  double level = 0.95;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct CoverageRow {
  std::string scheme;
  std::size_t n = 0;
  double coverage = 0.0;
  double avg_length = 0.0;
  double mc_se = 0.0;
  std::size_t reps = 0;
  std::size_t boot_B = 0;
  std::size_t failed = 0;  // replications dropped due to resampling errors
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
};

struct HistogramData {
  std::string tag;  // asymptotic | actual | smoothed | ecdf | fdr | m_out_of_n
  std::vector<double> samples;
};

// For each (n, scheme): reps replications of generate / fit / bootstrap /
// interval, recording coverage of the true change-point and interval
// length. Every scheme sees the same datasets (the data stream is keyed by
// (n, rep) only); bootstrap streams are keyed by (n, scheme, rep).
CoverageReport coverage_experiment(const ExperimentConfig& config, int threads = 0);

// reps independent draws of n * (zeta_hat - zeta0), tag "actual".
HistogramData sampling_distribution(const ModelConfig& model, std::size_t n,
                                    std::size_t reps, const StreamKey& key,
                                    int threads = 0);

// The histogram bundle: limit-law draws ("asymptotic"), the sampling
// distribution ("actual"), and - from one dataset of size n - bootstrap
// root samples for the smoothed, pairs ("ecdf"), fixed-design residual
// ("fdr") and m-out-of-n (exponent 4/5, tag "m_out_of_n") schemes, B
// replicates each.
std::vector<HistogramData> figure1_bundle(const ModelConfig& model, std::size_t n,
                                          std::size_t reps, std::size_t B,
                                          const StreamKey& key, int threads = 0);

}  // namespace cpboot
