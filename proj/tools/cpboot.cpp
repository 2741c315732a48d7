// cpboot: change-point bootstrap toolkit.
//
// Subcommands: simulate, fit, ci, limit-sample, variance-table, coverage,
// figure1. All randomness flows from explicit --seed flags (default 0), so
// identical invocations produce byte-identical outputs, independent of
// --threads.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpboot/harness.hpp"
#include "cpboot/inference.hpp"
#include "cpboot/io.hpp"
#include "cpboot/limitlaw.hpp"
#include "cpboot/parallel.hpp"

namespace {

using namespace cpboot;

nlohmann::json load_json(const std::string& path) {
  return nlohmann::json::parse(read_file(path));
}

void warn_if_interval_uncovered(const DataSet& data, double a, double b) {
  std::size_t below = 0, above = 0;
  for (double z : data.z) {
    below += z < a ? 1 : 0;
    above += z > b ? 1 : 0;
  }
  if (below == 0 || above == 0)
    std::cerr << "warning: no observations " << (below == 0 ? "below a" : "above b")
              << "; the search interval may be too wide\n";
}

int run_simulate(const std::string& config_path, std::size_t n, std::uint64_t seed,
                 const std::string& out_path) {
  const ModelConfig model = model_from_json(load_json(config_path));
  RandomStream stream = derive_stream(StreamKey{seed, {}}.child("simulate", 0));
  const DataSet data = generate(model, n, stream);
  write_file_atomic(out_path, dataset_to_csv(data));
  return 0;
}

int run_fit(const std::string& data_path, double a, double b) {
  const DataSet data = dataset_from_csv(read_file(data_path));
  warn_if_interval_uncovered(data, a, b);
  const FitResult result = fit(data, a, b);
  std::cout << fit_to_json(result).dump() << "\n";
  return 0;
}

int run_ci(const std::string& data_path, double a, double b, const std::string& scheme_text,
           std::size_t B, double level, std::uint64_t seed, const std::string& target_text,
           bool clip) {
  const DataSet data = dataset_from_csv(read_file(data_path));
  warn_if_interval_uncovered(data, a, b);
  const BootstrapScheme scheme = BootstrapScheme::parse(scheme_text);
  const std::size_t n = data.size();
  if (B == 0) B = 4 * n;
  const FitResult fr = fit(data, a, b);
  const RootSamples roots =
      bootstrap_roots(data, fr, scheme, B, a, b, StreamKey{seed, {}}.child("ci", 0));

  Target target = Target::zeta;
  if (target_text == "alpha")
    target = Target::alpha;
  else if (target_text == "beta")
    target = Target::beta;
  else if (target_text != "zeta")
    throw std::runtime_error("unknown target: " + target_text);

  ConfidenceInterval ci = root_ci(fr, roots, n, level, target);
  if (clip && target == Target::zeta) {
    ci.lo = std::max(ci.lo, a);
    ci.hi = std::min(ci.hi, b);
  }
  nlohmann::json j = ci_to_json(ci);
  j["scheme"] = scheme.name();
  j["B"] = B;
  j["m"] = roots.m;
  j["n"] = n;
  const Theta& th = fr.theta_hat;
  j["estimate"] = target == Target::zeta ? th.zeta
                  : target == Target::alpha ? th.alpha
                                            : th.beta;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_limit_sample(const std::string& spec_path, std::size_t count,
                     const std::string& which, std::uint64_t seed,
                     const std::string& out_path, int threads, bool swap_signs) {
  const LimitSpec spec = limit_spec_from_json(load_json(spec_path));
  const bool tilde = which == "etilde";
  if (!tilde && which != "estar")
    throw std::runtime_error("--which must be estar or etilde");
  const JumpSignConvention convention =
      swap_signs ? JumpSignConvention::swapped : JumpSignConvention::standard;
  const StreamKey key = StreamKey{seed, {}}.child(which, 0);
  std::vector<LimitDraw> draws(count);
  parallel_for(count, threads, [&](std::size_t i) {
    RandomStream stream = derive_stream(key.child("draw", i));
    draws[i] = tilde ? sample_E_tilde_star(spec, stream, convention)
                     : sample_E_star(spec, stream, convention);
  });
  write_file_atomic(out_path, limit_draws_to_csv(draws));
  return 0;
}

int run_variance_table(const std::string& spec_path, std::size_t count,
                       std::uint64_t seed, const std::string& out_path, int threads) {
  const LimitSpec spec = limit_spec_from_json(load_json(spec_path));
  const auto [var_e, var_tilde] =
      variance_report(spec, count, StreamKey{seed, {}}.child("variance", 0), threads);
  std::string csv = "random_variable,asymptotic_variance\n";
  csv += "n*(zeta_hat-zeta0)," + format_double(var_e) + "\n";
  csv += "n*(zeta_star-zeta0)," + format_double(var_tilde) + "\n";
  if (out_path.empty())
    std::cout << csv;
  else
    write_file_atomic(out_path, csv);
  return 0;
}

int run_coverage(const std::string& config_path, const std::string& out_path,
                 int threads) {
  const ExperimentConfig config = experiment_from_json(load_json(config_path));
  const CoverageReport report = coverage_experiment(config, threads);
  for (const CoverageRow& row : report.rows)
    if (row.failed > 0)
      std::cerr << "warning: scheme " << row.scheme << " n=" << row.n << ": "
                << row.failed << " failed replications excluded\n";
  write_file_atomic(out_path, coverage_to_csv(report));
  return 0;
}

int run_figure1(const std::string& config_path, const std::string& out_dir, int threads) {
  const Figure1Config config = figure1_from_json(load_json(config_path));
  const auto bundle = figure1_bundle(config.model, config.n, config.reps, config.B,
                                     StreamKey{config.master_seed, {}}.child("figure1", 0),
                                     threads);
  std::filesystem::create_directories(out_dir);
  for (const HistogramData& hist : bundle)
    write_file_atomic(std::filesystem::path(out_dir) / (hist.tag + ".csv"),
                      histogram_to_csv(hist));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"change-point bootstrap toolkit"};
  app.require_subcommand(1);

  std::string config_path, data_path, spec_path, out_path, out_dir;
  std::string scheme_text = "smoothed", which = "estar", target_text = "zeta";
  std::size_t n = 100, count = 20000, B = 0;
  double a = 0.0, b = 0.0, level = 0.95;
  std::uint64_t seed = 0;
  int threads = 0;
  bool clip = false, swap_signs = false;

  auto* simulate = app.add_subcommand("simulate", "draw a dataset from a model config");
  simulate->add_option("--config", config_path, "model config JSON")->required();
  simulate->add_option("--n", n, "sample size")->required();
  simulate->add_option("--seed", seed, "random seed (default 0)");
  simulate->add_option("--out", out_path, "output CSV path")->required();

  auto* fit_cmd = app.add_subcommand("fit", "least-squares stump fit");
  fit_cmd->add_option("--data", data_path, "dataset CSV")->required();
  fit_cmd->add_option("--a", a, "left end of the search interval")->required();
  fit_cmd->add_option("--b", b, "right end of the search interval")->required();

  auto* ci = app.add_subcommand("ci", "bootstrap confidence interval");
  ci->add_option("--data", data_path, "dataset CSV")->required();
  ci->add_option("--a", a, "left end of the search interval")->required();
  ci->add_option("--b", b, "right end of the search interval")->required();
  ci->add_option("--scheme", scheme_text,
                 "ecdf | residual | smoothed | moon:<exponent> (default smoothed)");
  ci->add_option("--B", B, "bootstrap replicates (default 4n)");
  ci->add_option("--level", level, "confidence level (default 0.95)");
  ci->add_option("--seed", seed, "random seed (default 0)");
  ci->add_option("--target", target_text, "zeta | alpha | beta (default zeta)");
  ci->add_flag("--clip", clip, "clip the zeta interval to [a,b]");

  auto* limit = app.add_subcommand("limit-sample", "draw from a limiting argmax law");
  limit->add_option("--spec", spec_path, "limit spec JSON")->required();
  limit->add_option("--count", count, "number of draws (default 20000)");
  limit->add_option("--which", which, "estar | etilde (default estar)");
  limit->add_option("--seed", seed, "random seed (default 0)");
  limit->add_option("--out", out_path, "output CSV path")->required();
  limit->add_option("--threads", threads, "worker threads (default: all cores)");
  limit->add_flag("--swap-jump-signs", swap_signs,
                  "use the alternative jump coefficient convention");

  auto* vtable = app.add_subcommand("variance-table", "limiting variance comparison");
  vtable->add_option("--spec", spec_path, "limit spec JSON")->required();
  vtable->add_option("--count", count, "draws per law (default 20000)");
  vtable->add_option("--seed", seed, "random seed (default 0)");
  vtable->add_option("--out", out_path, "output CSV path (default stdout)");
  vtable->add_option("--threads", threads, "worker threads (default: all cores)");

  auto* coverage = app.add_subcommand("coverage", "coverage/length study");
  coverage->add_option("--config", config_path, "experiment config JSON")->required();
  coverage->add_option("--out", out_path, "output CSV path")->required();
  coverage->add_option("--threads", threads, "worker threads (default: all cores)");

  auto* figure1 = app.add_subcommand("figure1", "histogram sample bundle");
  figure1->add_option("--config", config_path, "figure config JSON")->required();
  figure1->add_option("--out", out_dir, "output directory (one CSV per tag)")->required();
  figure1->add_option("--threads", threads, "worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*simulate) return run_simulate(config_path, n, seed, out_path);
    if (*fit_cmd) return run_fit(data_path, a, b);
    if (*ci)
      return run_ci(data_path, a, b, scheme_text, B, level, seed, target_text, clip);
    if (*limit)
      return run_limit_sample(spec_path, count, which, seed, out_path, threads, swap_signs);
    if (*vtable) return run_variance_table(spec_path, count, seed, out_path, threads);
    if (*coverage) return run_coverage(config_path, out_path, threads);
    if (*figure1) return run_figure1(config_path, out_dir, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
