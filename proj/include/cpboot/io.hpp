#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cpboot/dataset.hpp"
#include "cpboot/harness.hpp"
#include "cpboot/inference.hpp"
#include "cpboot/limitlaw.hpp"
#include "cpboot/model.hpp"
#include "cpboot/resampling.hpp"

namespace cpboot {

// 17 significant digits; parses back to the identical double.
std::string format_double(double x);

// Writes to a temporary sibling and renames, so readers never observe a
// partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

// DataSet CSV, header "z,y".
std::string dataset_to_csv(const DataSet& data);
DataSet dataset_from_csv(std::string_view text);

// RootSamples CSV, header "rep,zeta_root,alpha_root,beta_root".
std::string roots_to_csv(const RootSamples& roots);

// CoverageReport CSV, header "scheme,n,coverage,avg_length,mc_se,reps,boot_B".
std::string coverage_to_csv(const CoverageReport& report);

// HistogramData CSV, header "tag,value".
std::string histogram_to_csv(const HistogramData& hist);

// Limit-law draw CSV, header "phi1,phi2,phi3".
std::string limit_draws_to_csv(const std::vector<LimitDraw>& draws);

nlohmann::json dist_to_json(const DistributionSpec& dist);
DistributionSpec dist_from_json(const nlohmann::json& j);

// Model JSON: alpha0, beta0, zeta0, covariate, error, optional a/b (central
// 95% covariate interval when omitted).
ModelConfig model_from_json(const nlohmann::json& j);

ExperimentConfig experiment_from_json(const nlohmann::json& j);

struct Figure1Config {
  ModelConfig model;
  std::size_t n = 500;
  std::size_t reps = 1000;
  std::size_t B = 2000;
  std::uint64_t master_seed = 0;
};
Figure1Config figure1_from_json(const nlohmann::json& j);

LimitSpec limit_spec_from_json(const nlohmann::json& j);

nlohmann::json fit_to_json(const FitResult& fit);
nlohmann::json ci_to_json(const ConfidenceInterval& ci);

}  // namespace cpboot
