#include "cpboot/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cpboot {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::runtime_error("csv: bad number on line " + std::to_string(line_no));
  return value;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dataset_to_csv(const DataSet& data) {
  std::string out = "z,y\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += format_double(data.z[i]);
    out += ',';
    out += format_double(data.y[i]);
    out += '\n';
  }
  return out;
}

DataSet dataset_from_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "z,y")
    throw std::runtime_error("dataset csv: expected header \"z,y\"");
  DataSet data;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos)
      throw std::runtime_error("dataset csv: missing comma on line " + std::to_string(i + 1));
    const double z = parse_double(line.substr(0, comma), i + 1);
    const double y = parse_double(line.substr(comma + 1), i + 1);
    if (!std::isfinite(z) || !std::isfinite(y))
      throw std::runtime_error("dataset csv: non-finite entry on line " + std::to_string(i + 1));
    data.z.push_back(z);
    data.y.push_back(y);
  }
  if (data.size() < 2) throw std::runtime_error("dataset csv: need at least 2 rows");
  return data;
}

std::string roots_to_csv(const RootSamples& roots) {
  std::string out = "rep,zeta_root,alpha_root,beta_root\n";
  for (std::size_t k = 0; k < roots.B; ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(roots.zeta_roots[k]);
    out += ',';
    out += format_double(roots.alpha_roots[k]);
    out += ',';
    out += format_double(roots.beta_roots[k]);
    out += '\n';
  }
  return out;
}

std::string coverage_to_csv(const CoverageReport& report) {
  std::string out = "scheme,n,coverage,avg_length,mc_se,reps,boot_B\n";
  for (const CoverageRow& row : report.rows) {
    out += row.scheme;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.coverage);
    out += ',';
    out += format_double(row.avg_length);
    out += ',';
    out += format_double(row.mc_se);
    out += ',';
    out += std::to_string(row.reps);
    out += ',';
    out += std::to_string(row.boot_B);
    out += '\n';
  }
  return out;
}

std::string histogram_to_csv(const HistogramData& hist) {
  std::string out = "tag,value\n";
  for (double v : hist.samples) {
    out += hist.tag;
    out += ',';
    out += format_double(v);
    out += '\n';
  }
  return out;
}

std::string limit_draws_to_csv(const std::vector<LimitDraw>& draws) {
  std::string out = "phi1,phi2,phi3\n";
  for (const LimitDraw& d : draws) {
    out += format_double(d.phi1);
    out += ',';
    out += format_double(d.phi2);
    out += ',';
    out += format_double(d.phi3);
    out += '\n';
  }
  return out;
}

nlohmann::json dist_to_json(const DistributionSpec& dist) {
  nlohmann::json j;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DistributionSpec::Normal>) {
          j = {{"type", "normal"}, {"mu", d.mu}, {"sigma", d.sigma}};
        } else if constexpr (std::is_same_v<T, DistributionSpec::Uniform>) {
          j = {{"type", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
        } else if constexpr (std::is_same_v<T, DistributionSpec::ScaledBeta>) {
          j = {{"type", "scaled_beta"},
               {"a", d.a},
               {"b", d.b},
               {"scale", d.scale},
               {"shift", d.shift}};
        } else {
          j = {{"type", "shifted_gamma"},
               {"shape", d.shape},
               {"rate", d.rate},
               {"shift", d.shift}};
        }
      },
      dist.variant());
  return j;
}

DistributionSpec dist_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "normal")
    return DistributionSpec::normal(j.at("mu").get<double>(), j.at("sigma").get<double>());
  if (type == "uniform")
    return DistributionSpec::uniform(j.at("lo").get<double>(), j.at("hi").get<double>());
  if (type == "scaled_beta")
    return DistributionSpec::scaled_beta(j.at("a").get<double>(), j.at("b").get<double>(),
                                         j.at("scale").get<double>(),
                                         j.at("shift").get<double>());
  if (type == "shifted_gamma")
    return DistributionSpec::shifted_gamma(j.at("shape").get<double>(),
                                           j.at("rate").get<double>(),
                                           j.at("shift").get<double>());
  throw std::runtime_error("unknown distribution type: " + type);
}

ModelConfig model_from_json(const nlohmann::json& j) {
  const DistributionSpec covariate = dist_from_json(j.at("covariate"));
  const DistributionSpec error = dist_from_json(j.at("error"));
  double a, b;
  if (j.contains("a") != j.contains("b"))
    throw std::runtime_error("model config: a and b must be given together");
  if (j.contains("a")) {
    a = j.at("a").get<double>();
    b = j.at("b").get<double>();
  } else {
    std::tie(a, b) = default_interval(covariate);
  }
  ModelConfig config{j.at("alpha0").get<double>(), j.at("beta0").get<double>(),
                     j.at("zeta0").get<double>(), a, b, covariate, error};
  config.validate();
  return config;
}

ExperimentConfig experiment_from_json(const nlohmann::json& j) {
  ExperimentConfig config{model_from_json(j.at("model")),
                          {},
                          {},
                          j.at("reps").get<std::size_t>(),
                          std::nullopt,
                          j.at("level").get<double>(),
                          j.value("master_seed", std::uint64_t{0})};
  for (const auto& n : j.at("n_values")) config.n_values.push_back(n.get<std::size_t>());
  for (const auto& s : j.at("schemes"))
    config.schemes.push_back(BootstrapScheme::parse(s.get<std::string>()));
  if (j.contains("boot_B")) {
    const auto& bb = j.at("boot_B");
    if (bb.is_string()) {
      if (bb.get<std::string>() != "4n")
        throw std::runtime_error("experiment config: boot_B must be an integer or \"4n\"");
    } else {
      config.boot_B = bb.get<std::size_t>();
    }
  }
  config.validate();
  return config;
}

Figure1Config figure1_from_json(const nlohmann::json& j) {
  Figure1Config config{model_from_json(j.at("model")), j.at("n").get<std::size_t>(),
                       j.at("reps").get<std::size_t>(), j.at("B").get<std::size_t>(),
                       j.value("master_seed", std::uint64_t{0})};
  return config;
}

LimitSpec limit_spec_from_json(const nlohmann::json& j) {
  LimitSpec spec{j.at("f_zeta0").get<double>(), j.at("sigma2").get<double>(),
                 j.at("p_left").get<double>(),  j.at("alpha0").get<double>(),
                 j.at("beta0").get<double>(),   dist_from_json(j.at("error"))};
  spec.validate();
  return spec;
}

nlohmann::json fit_to_json(const FitResult& fit) {
  return {{"alpha", fit.theta_hat.alpha},
          {"beta", fit.theta_hat.beta},
          {"zeta", fit.theta_hat.zeta},
          {"objective", fit.objective}};
}

nlohmann::json ci_to_json(const ConfidenceInterval& ci) {
  return {{"target", target_name(ci.target)},
          {"lo", ci.lo},
          {"hi", ci.hi},
          {"level", ci.level}};
}

}  // namespace cpboot
