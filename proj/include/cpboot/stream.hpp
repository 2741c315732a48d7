#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cpboot {

namespace detail {

// SplitMix64 finalizer (Stafford mix13 variant). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = UINT64_C(0xCBF29CE484222325);
  for (unsigned char c : s) {
    h ^= c;
    h *= UINT64_C(0x100000001B3);
  }
  return h;
}

inline constexpr std::uint64_t kGoldenGamma = UINT64_C(0x9E3779B97F4A7C15);

}  // namespace detail

// Hierarchical identifier of a random stream: a master seed plus an ordered
// list of (label, index) path segments. Identical keys give identical
// streams; any change to the path gives a statistically unrelated stream.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::vector<std::pair<std::string, std::uint64_t>> path;

  StreamKey child(std::string_view label, std::uint64_t index) const {
    StreamKey k = *this;
    k.path.emplace_back(std::string(label), index);
    return k;
  }
};

// Counter-based generator in the SplittableRandom style: 64-bit state plus a
// per-stream odd increment, output through the SplitMix64 finalizer. The
// word sequence for a fixed key is identical on every platform.
//
// Distribution transforms are pinned algorithms so that draws are
// reproducible given a correctly rounded libm:
//   normal      - Box-Muller, cosine branch only (two words per draw)
//   exponential - inversion, -log(u)/rate with u in (0,1]
//   gamma       - Marsaglia-Tsang squeeze (shape >= 1), boosted for shape < 1
//   beta        - ratio of two unit-rate gamma draws
//   poisson(1)  - Knuth product-of-uniforms
class RandomStream {
 public:
  RandomStream(std::uint64_t state, std::uint64_t gamma)
      : state_(state), gamma_(gamma | 1u) {}

  std::uint64_t next_u64() {
    state_ += gamma_;
    return detail::mix64(state_);
  }

  // Uniform on [0,1), 53 significant bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log() argument.
  double next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t uniform_index(std::uint64_t n);

  double normal();
  double exponential(double rate);
  double gamma(double shape);  // unit rate
  double beta(double a, double b);
  std::uint64_t poisson_unit();  // Poisson with mean 1

  // Detaches an independent child stream; the parent advances by two words.
  RandomStream split() {
    std::uint64_t s = next_u64();
    std::uint64_t g = detail::mix64(next_u64());
    return RandomStream(s, g);
  }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
};

inline RandomStream derive_stream(const StreamKey& key) {
  std::uint64_t h = detail::mix64(key.master_seed + detail::kGoldenGamma);
  for (const auto& [label, index] : key.path) {
    h = detail::mix64(h ^ detail::fnv1a(label));
    h = detail::mix64(h ^ index);
  }
  return RandomStream(h, detail::mix64(h ^ detail::kGoldenGamma));
}

inline std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

inline double RandomStream::normal() {
  const double u1 = next_unit_open();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return r * std::cos(6.283185307179586476925286766559 * u2);
}

inline double RandomStream::exponential(double rate) {
  return -std::log(next_unit_open()) / rate;
}

inline double RandomStream::gamma(double shape) {
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(next_unit_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_unit_open();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double RandomStream::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

inline std::uint64_t RandomStream::poisson_unit() {
  const double limit = 0.36787944117144232;  // exp(-1)
  std::uint64_t k = 0;
  double p = next_unit();
  while (p > limit) {
    ++k;
    p *= next_unit();
  }
  return k;
}

}  // namespace cpboot
