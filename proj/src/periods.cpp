#include "ancrc/periods.hpp"

#include <cmath>

#include "ancrc/hypergeom.hpp"
#include "ancrc/numerics.hpp"
#include "ancrc/open_crc.hpp"

namespace ancrc::periods {

using geom::omega_pow;
using num::cpow;
using num::gamma_ratio;

void PeriodParams::require_generic() const {
  if (std::abs(z) < 1e-12) throw ResonanceError("PeriodParams: z = 0");
  const Cplx aa = a(), bb = b();
  auto guard = [](Cplx v, const char* what) {
    if (num::dist_to_int(v) < 0.02)
      throw ResonanceError(std::string("PeriodParams: ") + what +
                           " within 0.02 of an integer");
  };
  guard(aa, "a");
  guard(bb, "b");
  for (int j = 0; j <= w.n + 2; ++j) guard(aa - double(j) * bb, "a - j b");
  guard(aa / double(w.n + 1), "a/(n+1)");
  for (int k = 1; k <= w.n; ++k)
    guard((aa - double(k)) / double(w.n + 1) + 1.0 - bb, "(a-k)/(n+1)+1-b");
}

namespace {

Cplx cn_prefactor(const KappaPoint& k, const PeriodParams& p) {
  // C_n(kappa)^{1/z} with per-factor principal logs.
  Cplx s(0.0);
  for (int j = 0; j <= k.n(); ++j) s += std::log(k.kappa[j]);
  return std::exp(p.w.alpha1 / p.z * s);
}

// distance from p to the real segment [0, 1]
double dist_to_unit_segment(Cplx p) {
  double x = std::clamp(p.real(), 0.0, 1.0);
  return std::abs(p - Cplx(x, 0.0));
}

}  // namespace

Cplx twisted_period_euler(int i, const KappaPoint& k, const PeriodParams& p) {
  const int n = k.n();
  if (i < 1 || i > n + 1) throw DomainError("twisted_period_euler: index");
  const Cplx a = p.a(), b = p.b();
  if (a.real() <= 0.0 || b.real() >= 1.0)
    throw DomainError("twisted_period_euler: need Re a > 0, Re b < 1");
  k.validate();
  Cplx ki = k.at(i);
  // ratios kappa_l / kappa_i for l != i; the l = i factor is (1-u) itself.
  // The integrand has poles at u = kappa_i/kappa_l, which must stay clear of
  // the integration chain.
  CVec ratios;
  for (int l = 1; l <= n + 1; ++l)
    if (l != i) {
      Cplx r = k.at(l) / ki;
      Cplx pole = 1.0 / r;
      // node clustering resolves poles close to an endpoint, so the safe
      // distance shrinks with the pole's own distance from 0 and 1
      double scale =
          std::min({1.0, std::abs(pole), std::abs(1.0 - pole)});
      if (dist_to_unit_segment(pole) < 0.04 * scale)
        throw DomainError("twisted_period_euler: chain passes near a pole");
      ratios.push_back(r);
    }
  // quadrature two decades under the comparison tolerances
  PrecisionPolicy tight = default_policy();
  tight.rel_tol = std::min(tight.rel_tol, 1e-11);
  Cplx integral = num::integrate01(
      [&](double u, double omu) {
        Cplx v = std::exp((a - 1.0) * std::log(u)) * cpow(Cplx(omu), -b);
        for (const Cplx& r : ratios) v *= cpow(1.0 - r * u, -b);
        return v;
      },
      tight);
  return cn_prefactor(k, p) * std::exp(-a * std::log(ki)) * integral;
}

Cplx twisted_period_lauricella(int i, const KappaPoint& k,
                               const PeriodParams& p) {
  const int n = k.n();
  if (i < 1 || i > n + 1) throw DomainError("twisted_period_lauricella: index");
  const Cplx a = p.a(), b = p.b(), c = 1.0 + p.a() - p.b();
  Cplx ki = k.at(i);
  CVec args;
  for (int l = 1; l <= n + 1; ++l)
    if (l != i) args.push_back(k.at(l) / ki);
  hyp::LauricellaParams lp{a, CVec(n, b), c};
  bool in_disc = true;
  for (const Cplx& x : args)
    if (std::abs(x) > 0.6) in_disc = false;
  PrecisionPolicy tight = default_policy();
  tight.rel_tol = std::min(tight.rel_tol, 1e-11);
  Cplx phi = in_disc ? hyp::lauricella_fd_series(lp, args, tight)
                     : hyp::lauricella_fd_euler(lp, args, tight);
  return gamma_ratio({a, 1.0 - b}, {c}) * cn_prefactor(k, p) *
         std::exp(-a * std::log(ki)) * phi;
}

OrbifoldPointData orbifold_point_values(const PeriodParams& p) {
  p.require_generic();
  const int n = p.w.n, N = n + 1;
  const Cplx a = p.a(), b = p.b();
  OrbifoldPointData out{CVec(N), CMat(N, n)};
  for (int j = 1; j <= N; ++j) {
    Cplx phase = std::exp(2.0 * kPi * kI * (double(j) - n / 2.0) * a / double(N));
    out.values[j - 1] =
        phase * gamma_ratio({a / double(N), 1.0 - b},
                            {1.0 - b + a / double(N)}) /
        double(N);
    for (int k = 1; k <= n; ++k) {
      Cplx ph2 = std::exp(2.0 * kPi * kI *
                          ((double(j) - n / 2.0) * a - double(j * k) +
                           double(k) / 2.0) /
                          double(N));
      out.x_derivatives(j - 1, k - 1) =
          -ph2 *
          gamma_ratio({(a - double(k)) / double(N) + 1.0, 1.0 - b},
                      {(a - double(k)) / double(N) + 1.0 - b}) /
          double(N);
    }
  }
  return out;
}

CMat matrix_A_inv(const PeriodParams& p) {
  p.require_generic();
  const int n = p.w.n, N = n + 1;
  const Cplx a = p.a(), b = p.b();
  CMat m(N, N);  // row j: period, col i: fixed point; zero below the diagonal
  for (int i = 1; i <= N; ++i) {
    double mm = double(n - i + 1);
    Cplx diag = std::exp(-kI * kPi * mm * b) *
                gamma_ratio({1.0 - b, a - mm * b}, {1.0 + a - (mm + 1.0) * b}) /
                p.z;
    m(i - 1, i - 1) = diag;
    Cplx off = std::exp(-kI * kPi * a) *
               gamma_ratio({a - mm * b, (mm + 1.0) * b - a}, {b}) / p.z;
    for (int j = 1; j < i; ++j) m(j - 1, i - 1) = off;
  }
  return m;
}

CMat matrix_A(const PeriodParams& p, bool* used_fallback) {
  p.require_generic();
  const int n = p.w.n, N = n + 1;
  const Cplx a = p.a(), b = p.b();
  CMat m(N, N);
  for (int i = 1; i <= N; ++i) {
    double mm = double(n - i + 1);
    m(i - 1, i - 1) = std::exp(kI * kPi * mm * b) * p.z *
                      gamma_ratio({1.0 + a - (mm + 1.0) * b, 1.0 - a + mm * b},
                                  {1.0 - b}) *
                      std::sin(kPi * (a - mm * b)) / kPi;
    for (int j = i + 1; j <= N; ++j)
      m(i - 1, j - 1) =
          std::exp(-kI * kPi * (a - b * double(2 * n - 2 * j + 3))) * p.z *
          std::sin(kPi * b) *
          gamma_ratio({1.0 - a + b * double(n + 1 - i),
                       1.0 + a - b * double(n - i + 2)},
                      {1.0 - b}) /
          kPi;
  }
  CMat prod = m * matrix_A_inv(p);
  if (max_abs_diff(prod, CMat::identity(N)) > 1e-9) {
    if (used_fallback) *used_fallback = true;
    return matrix_A_inv(p).inverse();
  }
  if (used_fallback) *used_fallback = false;
  return m;
}

CMat matrix_B(const PeriodParams& p) {
  p.require_generic();
  const int n = p.w.n, N = n + 1;
  const Cplx a = p.a(), b = p.b();
  CMat m(N, N);
  for (int j = 1; j <= N; ++j) {
    Cplx d1 = std::exp(2.0 * kPi * kI * (double(j) - n / 2.0) * a / double(N));
    for (int k = 1; k <= N; ++k) {
      Cplx d2;
      if (k <= n)
        d2 = -omega_pow(n, k / 2.0) *
             gamma_ratio({(a - double(k)) / double(N) + 1.0, 1.0 - b},
                         {(a - double(k)) / double(N) + 1.0 - b});
      else
        d2 = gamma_ratio({a / double(N), 1.0 - b},
                         {1.0 - b + a / double(N)}) /
             p.z;
      m(j - 1, k - 1) = d1 * omega_pow(n, -double(j * k)) / double(N) * d2;
    }
  }
  return m;
}

CMat u_closed_form(const PeriodParams& p) {
  const int n = p.w.n, N = n + 1;
  CVec gy = ocrc::gamma_class(geom::Side::Y, p.z, p.w);
  CVec gx = ocrc::gamma_class(geom::Side::X, p.z, p.w);
  CMat u(N, N);
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      Cplx s(0.0);
      for (int j = 0; j <= i - 1; ++j)
        s += omega_pow(n, -double(j * k)) *
             std::exp(2.0 * kPi * kI * double(j) * p.w.alpha1 / p.z);
      for (int j = i; j <= n; ++j)
        s += omega_pow(n, -double(j * k)) *
             std::exp(2.0 * kPi * kI * double(N - j) * p.w.alpha2 / p.z);
      u(i - 1, k - 1) = gy[i - 1] / gx[k - 1] * s / double(N);
    }
  return u;
}

GiventalMatrix u_closed_form_fn(const TorusWeights& w) {
  return {[w](Cplx z) { return u_closed_form({w, z}); }, "X->Y"};
}

UFromAB u_from_AB(const PeriodParams& p) {
  UFromAB out;
  out.ab = matrix_A(p) * matrix_B(p);
  CMat u = u_closed_form(p);
  const int N = p.w.n + 1;
  out.scalar = out.ab(N - 1, N - 1) / u(N - 1, N - 1);
  const Cplx a = p.a();
  Cplx om_a = std::exp(2.0 * kPi * kI * a / double(N));
  double dplus = std::abs(out.scalar / om_a - 1.0);
  double dminus = std::abs(out.scalar * om_a - 1.0);
  out.omega_sign = dplus <= dminus ? 1 : -1;
  out.scalar_err = std::min(dplus, dminus);
  double worst = 0.0;
  double uscale = u.max_abs();
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      worst = std::max(worst, std::abs(out.ab(i, k) - out.scalar * u(i, k)) /
                                  (uscale * std::abs(out.scalar)));
  out.max_rel_err = worst;
  if (worst > 1e-8)
    throw std::runtime_error("u_from_AB: AB does not match s U at 1e-8");
  return out;
}

double symplectic_residual_of(const TorusWeights& w, Cplx z,
                              const std::function<CMat(Cplx)>& U) {
  CMat up = U(z);
  CMat um = U(-z);
  CMat lhs = um.transpose() * geom::pairing_Y_matrix(w) * up;
  return max_abs_diff(lhs, geom::pairing_X_matrix(w));
}

double symplectic_residual(const PeriodParams& p) {
  return symplectic_residual_of(
      p.w, p.z, [&](Cplx zz) { return u_closed_form({p.w, zz}); });
}

}  // namespace ancrc::periods
