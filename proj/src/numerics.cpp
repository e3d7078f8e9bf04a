#include "ancrc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ancrc {

PrecisionPolicy& default_policy() {
  static PrecisionPolicy pp = [] {
    PrecisionPolicy p;
    if (const char* env = std::getenv("ANCRC_PRECISION")) {
      double v = std::atof(env);
      if (v > 0.0) p.rel_tol = v;
    }
    return p;
  }();
  return pp;
}

}  // namespace ancrc

namespace ancrc::num {

double dist_to_nonpos_int(Cplx z) {
  double re = z.real();
  double k = std::round(re);
  if (k > 0.0) k = 0.0;
  return std::hypot(re - k, z.imag());
}

double dist_to_int(Cplx z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

Cplx cpow(Cplx z, Cplx a) { return std::exp(a * std::log(z)); }

Cplx log_sin_pi(Cplx z) {
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; factor out the growing
  // exponential so the log never overflows.
  if (z.imag() > 0.0) {
    // sin(pi z) = -e^{-i pi z}/(2i) (1 - e^{2 i pi z})
    return -kI * kPi * z + std::log((Cplx(1.0) - std::exp(2.0 * kI * kPi * z)) *
                                    (kI / 2.0));
  }
  return kI * kPi * z + std::log((Cplx(1.0) - std::exp(-2.0 * kI * kPi * z)) *
                                 (-kI / 2.0));
}

namespace {

// Lanczos, g = 7, 9 terms (Godfrey coefficients); ~1e-14 relative on the
// right half plane.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx log_gamma_right(Cplx z) {
  // valid for Re z >= 0.5
  Cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
  Cplx t = z + kLanczosG - 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Cplx log_gamma(Cplx z) {
  if (dist_to_nonpos_int(z) < 1e-12)
    throw PoleError("log_gamma: argument at a non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Cplx gamma(Cplx z) { return std::exp(log_gamma(z)); }

Cplx gamma_ratio(const std::vector<Cplx>& nums, const std::vector<Cplx>& dens) {
  for (const Cplx& d : dens)
    if (dist_to_nonpos_int(d) < 1e-12) return Cplx(0.0);
  Cplx acc(0.0);
  for (const Cplx& u : nums) acc += log_gamma(u);
  for (const Cplx& d : dens) acc -= log_gamma(d);
  return std::exp(acc);
}

Cplx reflection_sin(Cplx x) {
  if (dist_to_int(x) < 1e-12)
    throw PoleError("reflection_sin: integer argument");
  return kPi / std::sin(kPi * x);
}

Cplx pochhammer(Cplx x, int m) {
  Cplx p(1.0);
  for (int i = 0; i < m; ++i) p *= x + double(i);
  return p;
}

namespace {

struct TanhSinhNode {
  double u, omu, w;  // abscissa, 1-abscissa, weight (du)
};

// Nodes for one tanh-sinh level: t = k*h over [-4, 4], u = 1/(1+e^{-2s}),
// s = (pi/2) sinh t, du/dt = (pi/2) cosh t / (2 cosh^2 s) ... computed in a
// cancellation-free form.
void level_nodes(int level, std::vector<TanhSinhNode>& out, bool odd_only) {
  // The window must push u within e^{-pi sinh(tmax)} of the endpoints: the
  // truncation tail scales like u_min^{1+expo}, and exponents down to -0.95
  // have to clear 1e-12 while u^{-0.98} stays below the overflow line.
  const double tmax = 6.0;
  double h = tmax / std::ldexp(1.0, level);  // tmax / 2^level
  int kmax = static_cast<int>(std::ldexp(1.0, level));
  out.clear();
  for (int k = -kmax; k <= kmax; ++k) {
    if (odd_only && (k % 2 == 0)) continue;
    double t = k * h;
    double s = 0.5 * kPi * std::sinh(t);
    double es = std::exp(-2.0 * std::abs(s));
    double small = es / (1.0 + es);  // min(u, 1-u)
    double big = 1.0 / (1.0 + es);
    double u = (s >= 0) ? big : small;
    double omu = (s >= 0) ? small : big;
    // du/dt = pi cosh(t) * u * (1-u)
    double w = kPi * std::cosh(t) * u * omu * h;
    if (w < 1e-320 || small == 0.0) continue;
    out.push_back({u, omu, w});
  }
}

}  // namespace

Cplx integrate01(const std::function<Cplx(double, double)>& f,
                 const PrecisionPolicy& pp) {
  std::vector<TanhSinhNode> nodes;
  Cplx acc(0.0);
  Cplx prev(0.0);
  double scale = 0.0;
  for (int level = 2; level <= pp.quadrature_levels; ++level) {
    level_nodes(level, nodes, /*odd_only=*/level > 2);
    Cplx add(0.0);
    for (const auto& nd : nodes) {
      Cplx v = f(nd.u, nd.omu);
      add += v * nd.w;
      scale = std::max(scale, std::abs(v) * nd.w);
    }
    // Node weights carry this level's spacing, so halving the mesh keeps the
    // previously accumulated sum at half weight.
    acc = (level == 2) ? add : 0.5 * acc + add;
    if (level >= 4) {
      double err = std::abs(acc - prev);
      if (err <= pp.rel_tol * std::abs(acc) + 1e-15 * (scale + 1.0)) return acc;
      // oscillatory integrands can sit on the roundoff floor of the node sum
      if (level == pp.quadrature_levels &&
          err <= 1e-11 * (scale + std::abs(acc)))
        return acc;
    }
    prev = acc;
  }
  throw NonConvergence("integrate01: tanh-sinh levels exhausted");
}

Cplx line_integral(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                   double exp0, double exp1, const PrecisionPolicy& pp) {
  if (exp0 <= -1.0 || exp1 <= -1.0)
    throw DomainError("line_integral: endpoint exponent <= -1");
  Cplx d = z1 - z0;
  return d * integrate01([&](double u, double) { return f(z0 + d * u); }, pp);
}

Cplx contour_residue(const std::function<Cplx(Cplx)>& f, Cplx pole,
                     double radius, const PrecisionPolicy& pp) {
  int n = 16;
  Cplx prev(0.0);
  double fscale = 0.0;
  for (int iter = 0; iter < 12; ++iter, n *= 2) {
    Cplx acc(0.0);
    for (int k = 0; k < n; ++k) {
      double th = 2.0 * kPi * (k + 0.5) / n;
      Cplx e = std::polar(radius, th);
      Cplx v = f(pole + e);
      fscale = std::max(fscale, std::abs(v) * radius);
      acc += v * e;
    }
    acc /= double(n);
    if (iter > 0 &&
        std::abs(acc - prev) <= pp.rel_tol * std::abs(acc) + 1e-13 * (1.0 + fscale))
      return acc;
    prev = acc;
  }
  throw NonConvergence("contour_residue: node doubling did not stabilize");
}

std::vector<Cplx> poly_roots(const std::vector<Cplx>& coeffs_in) {
  std::vector<Cplx> c = coeffs_in;
  while (c.size() > 1 && std::abs(c.back()) < 1e-300) c.pop_back();
  int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  const Cplx lead = c.back();
  for (auto& x : c) x /= lead;
  auto eval = [&](Cplx z) {
    Cplx v(0.0);
    for (int i = deg; i >= 0; --i) v = v * z + c[i];
    return v;
  };
  // Durand-Kerner from a spread of non-real starting points.
  std::vector<Cplx> r(deg);
  for (int i = 0; i < deg; ++i)
    r[i] = std::polar(0.4 + 0.9 * i / std::max(1, deg),
                      2.0 * kPi * i / deg + 0.7);
  for (int it = 0; it < 200; ++it) {
    double move = 0.0;
    for (int i = 0; i < deg; ++i) {
      Cplx den(1.0);
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= r[i] - r[j];
      Cplx delta = eval(r[i]) / den;
      r[i] -= delta;
      move = std::max(move, std::abs(delta));
    }
    if (move < 1e-13) break;
  }
  return r;
}

}  // namespace ancrc::num
