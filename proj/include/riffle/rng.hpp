#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace riffle {

using Rng = std::mt19937_64;

namespace detail {
// splitmix64 finalizer; used to spread user seeds and derive substreams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

inline Rng make_rng(std::uint64_t seed) { return Rng(detail::mix64(seed)); }

/// Independent stream derived from (master seed, stream index). Parallel
/// tasks must use this rather than sharing one engine.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(detail::mix64(detail::mix64(seed) ^ detail::mix64(stream + 1)));
}

/// Uniform double in [0,1) with 53 random bits. Bit-stable across standard
/// library implementations, unlike std::uniform_real_distribution.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle_values(Rng& rng, std::span<T> values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

/// Index draw from an unnormalized nonnegative weight vector.
inline std::size_t sample_categorical(Rng& rng, std::span<const double> w) {
  double total = 0.0;
  std::size_t last_positive = 0;
  bool any = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += w[i];
    if (w[i] > 0.0) {
      last_positive = i;
      any = true;
    }
  }
  if (!any || !(total > 0.0)) {
    throw std::invalid_argument("sample_categorical: all weights are zero");
  }
  const double target = uniform_unit(rng) * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    cum += w[i];
    if (target < cum) return i;
  }
  return last_positive;  // target landed on the rounding tail
}

inline double sample_normal(Rng& rng) {
  // Box-Muller on portable uniforms.
  double u1;
  do {
    u1 = uniform_unit(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

/// Marsaglia-Tsang gamma with unit scale; shape > 0.
inline double sample_gamma(Rng& rng, double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be > 0");
  if (shape < 1.0) {
    const double g = sample_gamma(rng, shape + 1.0);
    double u;
    do {
      u = uniform_unit(rng);
    } while (u <= 0.0);
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_unit(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

/// Symmetric Dirichlet(concentration) draw written over `out`.
inline void sample_dirichlet(Rng& rng, double concentration,
                             std::span<double> out) {
  double total = 0.0;
  for (double& x : out) {
    x = sample_gamma(rng, concentration);
    total += x;
  }
  if (!(total > 0.0)) {  // all-zero underflow; fall back to uniform
    for (double& x : out) x = 1.0 / static_cast<double>(out.size());
    return;
  }
  for (double& x : out) x /= total;
}

}  // namespace riffle
