#include "cpboot/harness.hpp"

#include <cmath>
#include <stdexcept>

#include "cpboot/inference.hpp"
#include "cpboot/limitlaw.hpp"
#include "cpboot/parallel.hpp"
#include "cpboot/stats.hpp"

namespace cpboot {

void ExperimentConfig::validate() const {
  model.validate();
  if (n_values.empty()) throw std::invalid_argument("experiment: no sample sizes");
  for (std::size_t n : n_values)
    if (n < 2) throw std::invalid_argument("experiment: sample sizes must be >= 2");
  if (schemes.empty()) throw std::invalid_argument("experiment: no schemes");
  if (reps < 1) throw std::invalid_argument("experiment: need reps >= 1");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("experiment: level must be in (0,1)");
}

CoverageReport coverage_experiment(const ExperimentConfig& config, int threads) {
  config.validate();
  const StreamKey root{config.master_seed, {}};

  struct RepOutcome {
    bool failed = false;
    bool covered = false;
    double length = 0.0;
  };

  CoverageReport report;
  for (std::size_t n : config.n_values) {
    const std::size_t B = config.boot_B.value_or(4 * n);
    for (std::size_t si = 0; si < config.schemes.size(); ++si) {
      const BootstrapScheme& scheme = config.schemes[si];
      std::vector<RepOutcome> outcomes(config.reps);
      parallel_for(config.reps, threads, [&](std::size_t r) {
        const StreamKey rep_key = root.child("n", n).child("rep", r);
        RandomStream data_stream = derive_stream(rep_key.child("data", 0));
        const DataSet data = generate(config.model, n, data_stream);
        const FitResult fr = fit(data, config.model.a, config.model.b);
        try {
          const RootSamples roots =
              bootstrap_roots(data, fr, scheme, B, config.model.a, config.model.b,
                              rep_key.child("scheme", si));
          const ConfidenceInterval ci =
              root_ci(fr, roots, n, config.level, Target::zeta);
          outcomes[r] = {false, covers(ci, config.model.zeta0), length(ci)};
        } catch (const std::exception&) {
          outcomes[r].failed = true;
        }
      });

      CoverageRow row;
      row.scheme = scheme.name();
      row.n = n;
      row.reps = config.reps;
      row.boot_B = B;
      std::size_t ok = 0, covered = 0;
      KahanSum total_length;
      for (const RepOutcome& o : outcomes) {
        if (o.failed) {
          ++row.failed;
          continue;
        }
        ++ok;
        covered += o.covered ? 1 : 0;
        total_length.add(o.length);
      }
      if (ok > 0) {
        row.coverage = static_cast<double>(covered) / static_cast<double>(ok);
        row.avg_length = total_length.value() / static_cast<double>(ok);
      }
      row.mc_se = std::sqrt(row.coverage * (1.0 - row.coverage) /
                            static_cast<double>(config.reps));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

HistogramData sampling_distribution(const ModelConfig& model, std::size_t n,
                                    std::size_t reps, const StreamKey& key,
                                    int threads) {
  if (reps < 1) throw std::invalid_argument("sampling_distribution: need reps >= 1");
  HistogramData out{"actual", std::vector<double>(reps)};
  parallel_for(reps, threads, [&](std::size_t r) {
    RandomStream stream = derive_stream(key.child("rep", r));
    const DataSet data = generate(model, n, stream);
    const FitResult fr = fit(data, model.a, model.b);
    out.samples[r] = static_cast<double>(n) * (fr.theta_hat.zeta - model.zeta0);
  });
  return out;
}

std::vector<HistogramData> figure1_bundle(const ModelConfig& model, std::size_t n,
                                          std::size_t reps, std::size_t B,
                                          const StreamKey& key, int threads) {
  model.validate();
  std::vector<HistogramData> bundle;

  HistogramData asymptotic{"asymptotic", std::vector<double>(reps)};
  const LimitSpec lspec = limit_spec_from_model(model);
  parallel_for(reps, threads, [&](std::size_t i) {
    RandomStream stream = derive_stream(key.child("limit", i));
    asymptotic.samples[i] = sample_E_star(lspec, stream).phi3;
  });
  bundle.push_back(std::move(asymptotic));

  bundle.push_back(sampling_distribution(model, n, reps, key.child("actual", 0), threads));

  RandomStream data_stream = derive_stream(key.child("data", 0));
  const DataSet data = generate(model, n, data_stream);
  const FitResult fr = fit(data, model.a, model.b);

  const std::pair<std::string, BootstrapScheme> boot_tags[] = {
      {"smoothed", BootstrapScheme::smoothed()},
      {"ecdf", BootstrapScheme::ecdf()},
      {"fdr", BootstrapScheme::residual()},
      {"m_out_of_n", BootstrapScheme::m_out_of_n(0.8)},
  };
  for (std::size_t ti = 0; ti < 4; ++ti) {
    const RootSamples roots = bootstrap_roots(data, fr, boot_tags[ti].second, B, model.a,
                                              model.b, key.child("roots", ti));
    bundle.push_back({boot_tags[ti].first, roots.zeta_roots});
  }
  return bundle;
}

}  // namespace cpboot
