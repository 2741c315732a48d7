#include "cpboot/resampling.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "cpboot/errors.hpp"
#include "cpboot/stats.hpp"

namespace cpboot {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kSqrt2 = 1.4142135623730950488;

std::string format_exponent(double e) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

BootstrapScheme BootstrapScheme::m_out_of_n(double exponent) {
  if (!(exponent > 0.0 && exponent < 1.0))
    throw std::invalid_argument("moon scheme: exponent must be in (0,1)");
  return {Kind::MOutOfN, exponent};
}

std::size_t BootstrapScheme::resample_size(std::size_t n) const {
  if (kind != Kind::MOutOfN) return n;
  // ceil(n^exponent); the slack absorbs pow() rounding at exact integers
  const double p = std::pow(static_cast<double>(n), exponent);
  const double m = std::ceil(p - 1e-9);
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

std::string BootstrapScheme::name() const {
  switch (kind) {
    case Kind::Ecdf:
      return "ecdf";
    case Kind::Residual:
      return "residual";
    case Kind::Smoothed:
      return "smoothed";
    case Kind::MOutOfN:
      return "moon:" + format_exponent(exponent);
  }
  return "?";
}

BootstrapScheme BootstrapScheme::parse(const std::string& text) {
  if (text == "ecdf") return ecdf();
  if (text == "residual" || text == "fdr") return residual();
  if (text == "smoothed") return smoothed();
  if (text.rfind("moon:", 0) == 0) {
    const std::string arg = text.substr(5);
    std::size_t used = 0;
    double e = 0.0;
    try {
      e = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad moon exponent: " + arg);
    }
    if (used != arg.size()) throw std::invalid_argument("bad moon exponent: " + arg);
    return m_out_of_n(e);
  }
  throw std::invalid_argument("unknown bootstrap scheme: " + text);
}

double bandwidth_normal_reference(std::span<const double> z) {
  if (z.size() < 2)
    throw ZeroSpreadError("bandwidth: need at least 2 observations");
  const double sd = std::sqrt(variance(z));
  if (!(sd > 0.0)) throw ZeroSpreadError("bandwidth: zero spread in z");
  return 1.06 * sd * std::pow(static_cast<double>(z.size()), -0.2);
}

KdeModel make_kde(std::span<const double> z) {
  KdeModel kde;
  kde.centers.assign(z.begin(), z.end());
  kde.bandwidth = bandwidth_normal_reference(z);
  return kde;
}

double kde_sample(const KdeModel& kde, RandomStream& stream) {
  const std::size_t i = stream.uniform_index(kde.centers.size());
  return kde.centers[i] + kde.bandwidth * stream.normal();
}

double kde_cdf(const KdeModel& kde, double x) {
  KahanSum s;
  for (double c : kde.centers)
    s.add(0.5 * std::erfc(-(x - c) / (kde.bandwidth * kSqrt2)));
  return s.value() / static_cast<double>(kde.centers.size());
}

double kde_pdf(const KdeModel& kde, double x) {
  KahanSum s;
  for (double c : kde.centers) {
    const double u = (x - c) / kde.bandwidth;
    s.add(std::exp(-0.5 * u * u));
  }
  return kInvSqrt2Pi * s.value() /
         (kde.bandwidth * static_cast<double>(kde.centers.size()));
}

DataSet resample(const DataSet& data, const FitResult& fit,
                 const BootstrapScheme& scheme, RandomStream& stream) {
  const std::size_t n = data.size();
  const Theta& th = fit.theta_hat;
  DataSet out;
  switch (scheme.kind) {
    case BootstrapScheme::Kind::Ecdf:
    case BootstrapScheme::Kind::MOutOfN: {
      const std::size_t m = scheme.resample_size(n);
      out.z.resize(m);
      out.y.resize(m);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = stream.uniform_index(n);
        out.z[j] = data.z[i];
        out.y[j] = data.y[i];
      }
      break;
    }
    case BootstrapScheme::Kind::Residual: {
      out.z = data.z;
      out.y.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double eps = fit.centered_residuals[stream.uniform_index(n)];
        const double stump = data.z[j] <= th.zeta ? th.alpha : th.beta;
        out.y[j] = stump + eps;
      }
      break;
    }
    case BootstrapScheme::Kind::Smoothed: {
      const KdeModel kde = make_kde(data.z);
      out.z.resize(n);
      out.y.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double z = kde_sample(kde, stream);
        const double eps = fit.centered_residuals[stream.uniform_index(n)];
        const double stump = z <= th.zeta ? th.alpha : th.beta;
        out.z[j] = z;
        out.y[j] = stump + eps;
      }
      break;
    }
  }
  return out;
}

RootSamples bootstrap_roots(const DataSet& data, const FitResult& fit,
                            const BootstrapScheme& scheme, std::size_t B, double a,
                            double b, const StreamKey& key) {
  if (B < 1) throw std::invalid_argument("bootstrap_roots: need B >= 1");
  const std::size_t m = scheme.resample_size(data.size());
  const double m_d = static_cast<double>(m);
  const double root_m = std::sqrt(m_d);

  RootSamples roots;
  roots.scheme = scheme;
  roots.m = m;
  roots.B = B;
  roots.zeta_roots.resize(B);
  roots.alpha_roots.resize(B);
  roots.beta_roots.resize(B);
  for (std::size_t k = 0; k < B; ++k) {
    RandomStream stream = derive_stream(key.child("boot", k));
    const DataSet star = resample(data, fit, scheme, stream);
    const FitResult refit = cpboot::fit(star, a, b);
    roots.zeta_roots[k] = m_d * (refit.theta_hat.zeta - fit.theta_hat.zeta);
    roots.alpha_roots[k] = root_m * (refit.theta_hat.alpha - fit.theta_hat.alpha);
    roots.beta_roots[k] = root_m * (refit.theta_hat.beta - fit.theta_hat.beta);
  }
  return roots;
}

}  // namespace cpboot
