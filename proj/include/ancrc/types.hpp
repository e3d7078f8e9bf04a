#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ancrc {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const Cplx kI{0.0, 1.0};

// Tolerances shared by all kernels. rel_tol is overridable via ANCRC_PRECISION.
struct PrecisionPolicy {
  double rel_tol = 1e-10;
  double abs_floor = 1e-300;
  int max_series_terms = 10000;
  int quadrature_levels = 13;
};

PrecisionPolicy& default_policy();

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& m) : std::runtime_error(m) {}
};
struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& m) : std::runtime_error(m) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct ResonanceError : std::runtime_error {
  explicit ResonanceError(const std::string& m) : std::runtime_error(m) {}
};
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& m) : std::runtime_error(m) {}
};
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Splitmix64-based sampler. Deterministic across platforms, unlike the
// standard library distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  Cplx box(double lo, double hi) {
    double re = uniform(lo, hi);
    double im = uniform(lo, hi);
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

}  // namespace ancrc
