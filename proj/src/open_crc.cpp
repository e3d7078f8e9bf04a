#include "ancrc/open_crc.hpp"

#include <cmath>
#include <numeric>

#include "ancrc/numerics.hpp"
#include "ancrc/periods.hpp"

namespace ancrc::ocrc {

using geom::omega_pow;
using num::cpow;

int DiskChart::n_e() const {
  int g = std::abs(m[0]) == 0 ? iso : std::gcd(std::abs(m[0]), iso);
  return iso / g;
}

DiskChart BoundaryCondition::chart_X(const TorusWeights& tw) const {
  DiskChart c;
  c.iso = tw.n + 1;
  if (leg == Leg::ineffective) {
    // Lagrangian on the gerby axis; normal axes carry tangent weights
    // (-1, -alpha1) and (+1, -alpha2).
    c.m[0] = 0; c.m[1] = -1; c.m[2] = 1;
    c.w[0] = tw.sigma(); c.w[1] = -tw.alpha1; c.w[2] = -tw.alpha2;
  } else {
    c.m[0] = -1; c.m[1] = 1; c.m[2] = 0;
    c.w[0] = -tw.alpha1; c.w[1] = -tw.alpha2; c.w[2] = tw.sigma();
  }
  if (negative_orientation) {
    std::swap(c.m[1], c.m[2]);
    std::swap(c.w[1], c.w[2]);
  }
  return c;
}

DiskChart BoundaryCondition::chart_Y(const TorusWeights& tw, int i) const {
  DiskChart c;
  c.iso = 1;
  c.m[0] = c.m[1] = c.m[2] = 0;
  if (leg == Leg::ineffective) {
    c.w[0] = tw.sigma(); c.w[1] = tw.w_plus(i); c.w[2] = tw.w_minus(i);
  } else {
    if (i != tw.n + 1)
      throw GeometryError("chart_Y: effective leg only meets P_{n+1}");
    c.w[0] = -double(tw.n + 1) * tw.alpha1;
    c.w[1] = tw.w_minus(tw.n + 1);
    c.w[2] = tw.sigma();
  }
  if (negative_orientation) {
    std::swap(c.m[1], c.m[2]);
    std::swap(c.w[1], c.w[2]);
  }
  return c;
}

namespace {

double frac_of(int num, int den) {  // <num/den> for integers, den > 0
  int r = num % den;
  if (r < 0) r += den;
  return double(r) / double(den);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

DiskValue disk_function(int d, int k, const DiskChart& chart) {
  if (d < 1) throw DomainError("disk_function: winding d >= 1");
  const int iso = chart.iso;
  const int ne = chart.n_e();
  // compatibility: d/n_e - k m_1 / iso in Z
  long num = static_cast<long>(d) * iso - static_cast<long>(k) * chart.m[0] * ne;
  if (num % (static_cast<long>(ne) * iso) != 0) return {Cplx(0.0), false};

  double age = frac_of(k * chart.m[0], iso) + frac_of(k * chart.m[1], iso) +
               frac_of(k * chart.m[2], iso);
  int age_i = static_cast<int>(std::lround(age));
  Cplx lead = chart.w[0] * double(ne) / double(d);
  Cplx pref;
  switch (age_i) {  // age is integral for Calabi-Yau charts
    case 0: pref = 1.0 / lead; break;
    case 1: pref = 1.0; break;
    default: pref = cpow(lead, double(age_i - 1));
  }
  Cplx ratio_arg = double(d) * chart.w[1] / (double(ne) * chart.w[0]);
  Cplx value = pref * double(ne) /
               (double(d) * double(iso) * factorial(d / ne)) *
               num::gamma_ratio(
                   {ratio_arg + frac_of(k * chart.m[2], iso) + double(d) / ne},
                   {ratio_arg - frac_of(k * chart.m[1], iso) + 1.0});
  return {value, true};
}

CVec gamma_class(Side side, Cplx z, const TorusWeights& tw) {
  const int N = tw.n + 1;
  CVec out(N);
  Cplx common = num::gamma(1.0 + tw.sigma() / z);
  if (side == Side::Y) {
    for (int i = 1; i <= N; ++i)
      out[i - 1] = common * num::gamma(1.0 + tw.w_plus(i) / z) *
                   num::gamma(1.0 + tw.w_minus(i) / z);
    return out;
  }
  for (int k = 1; k <= tw.n; ++k) {
    double kk = double(k) / N;
    out[k - 1] = common * num::gamma(kk - tw.alpha1 / z) *
                 num::gamma(1.0 - kk - tw.alpha2 / z) / z;
  }
  out[N - 1] =
      common * num::gamma(1.0 - tw.alpha1 / z) * num::gamma(1.0 - tw.alpha2 / z);
  return out;
}

namespace {

// sin factor of the disk endomorphism: sin(pi(<k m3/iso> - w3/z)).
Cplx disk_sin(const DiskChart& c, int k, Cplx z) {
  double f = frac_of(k * c.m[2], c.iso);
  Cplx arg = f - c.w[2] / z;
  if (num::dist_to_int(arg) < 1e-12)
    throw PoleError("disk endomorphism: sine argument integral");
  return std::sin(kPi * arg);
}

}  // namespace

CVec disk_endomorphism(const BoundaryCondition& bc, Side side, Cplx z,
                       const TorusWeights& tw) {
  const int N = tw.n + 1;
  CVec gm = gamma_class(side, z, tw);
  CVec out(N, Cplx(0.0));
  if (side == Side::X) {
    DiskChart c = bc.chart_X(tw);
    for (int k = 1; k <= N; ++k)
      out[k - 1] =
          kPi / (c.w[0] * double(N) * disk_sin(c, k, z) * gm[k - 1]);
    return out;
  }
  if (bc.leg == Leg::ineffective) {
    for (int i = 1; i <= N; ++i) {
      DiskChart c = bc.chart_Y(tw, i);
      out[i - 1] = kPi / (c.w[0] * disk_sin(c, 1, z) * gm[i - 1]);
    }
  } else {
    DiskChart c = bc.chart_Y(tw, N);
    out[N - 1] = kPi / (c.w[0] * disk_sin(c, 1, z) * gm[N - 1]);
  }
  return out;
}

CVec theta(const BoundaryCondition& bc, Side side, Cplx z,
           const TorusWeights& tw) {
  const int N = tw.n + 1;
  Cplx zf = cpow(z, Cplx(1.5));
  CVec out(N, Cplx(0.0));
  if (side == Side::X) {
    DiskChart c = bc.chart_X(tw);
    for (int k = 1; k <= N; ++k)
      out[k - 1] = zf * kPi / (c.w[0] * double(N) * disk_sin(c, k, z));
    return out;
  }
  if (bc.leg == Leg::ineffective) {
    for (int i = 1; i <= N; ++i) {
      DiskChart c = bc.chart_Y(tw, i);
      out[i - 1] = zf * kPi / (c.w[0] * disk_sin(c, 1, z));
    }
  } else {
    DiskChart c = bc.chart_Y(tw, N);
    out[N - 1] = zf * kPi / (c.w[0] * disk_sin(c, 1, z));
  }
  return out;
}

CMat chern_matrix(Side side, Cplx z, const TorusWeights& tw) {
  const int N = tw.n + 1;
  CMat m(N, N);
  if (side == Side::X) {
    for (int row = 1; row <= N; ++row)
      for (int k = 1; k <= N; ++k)
        m(row - 1, k - 1) = omega_pow(tw.n, double(k * row));
    return m;
  }
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      m(i - 1, k - 1) =
          (i <= k)
              ? std::exp(2.0 * kPi * kI * double(N - k) * tw.alpha2 / z)
              : std::exp(2.0 * kPi * kI * double(k) * tw.alpha1 / z);
  return m;
}

CMat chern_matrix_X_inverse(Cplx z, const TorusWeights& tw) {
  (void)z;  // character orthogonality; no z-dependence on the X side
  const int N = tw.n + 1;
  CMat m(N, N);
  for (int k = 1; k <= N; ++k)
    for (int row = 1; row <= N; ++row)
      m(k - 1, row - 1) = omega_pow(tw.n, -double(k * row)) / double(N);
  return m;
}

CMat o_direct(const BoundaryCondition& bc, Cplx z, const TorusWeights& tw) {
  const int N = tw.n + 1;
  CVec dy = disk_endomorphism(bc, Side::Y, z, tw);
  CVec dx = disk_endomorphism(bc, Side::X, z, tw);
  CMat u = periods::u_closed_form({tw, z});
  CMat o(N, N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) o(i, k) = dy[i] * u(i, k) / dx[k];
  return o;
}

OzIneffective oz_ineffective(int d, const TorusWeights& tw) {
  if (d < 1) throw DomainError("oz_ineffective: d >= 1");
  const int N = tw.n + 1;
  Cplx z = tw.sigma() / double(d);
  BoundaryCondition bc{Leg::ineffective};
  CMat o = o_direct(bc, z, tw);

  OzIneffective out;
  out.oz = CMat(N, N);
  out.winding_factors = CVec(N);
  double parity = (d % 2 == 1) ? 1.0 : -1.0;  // the telescoping sign (-1)^{d-1}
  for (int i = 1; i <= N; ++i)
    out.winding_factors[i - 1] =
        parity *
        std::exp(double(d) * kPi * kI *
                 (double(tw.n - i + 2) +
                  double(2 * i - tw.n - 2) * tw.alpha1 / tw.sigma()));
  double worst = 0.0;
  for (int i = 1; i <= N; ++i) {
    Cplx wfac = out.winding_factors[i - 1];
    for (int k = 1; k <= N; ++k) {
      Cplx expect = (k <= tw.n) ? -omega_pow(tw.n, (0.5 - i) * k) : Cplx(-1.0);
      worst = std::max(worst,
                       std::abs(o(i - 1, k - 1) - wfac * expect) / std::abs(wfac));
      out.oz(i - 1, k - 1) = o(i - 1, k - 1) / wfac;
    }
  }
  out.factor_residual = worst;
  if (worst > 1e-8)
    throw std::runtime_error("oz_ineffective: winding factorization failed");
  double colw = 0.0;
  for (int k = 1; k <= tw.n; ++k) {
    Cplx s(0.0);
    for (int i = 1; i <= N; ++i) s += out.oz(i - 1, k - 1);
    colw = std::max(colw, std::abs(s));
  }
  out.column_sum_residual = colw;
  return out;
}

OzEffective oz_effective(int d, const TorusWeights& tw) {
  if (d < 1) throw DomainError("oz_effective: d >= 1");
  const int N = tw.n + 1;
  Cplx z = -double(N) * tw.alpha1 / double(d);
  BoundaryCondition bc{Leg::effective};
  OzEffective out{o_direct(bc, z, tw), 0.0};
  int hot = ((-d) % N + N) % N;  // k = -d mod n+1, slot n+1 for 0
  if (hot == 0) hot = N;
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      Cplx expect = (i == N && k == hot) ? Cplx(1.0) : Cplx(0.0);
      out.row_residual =
          std::max(out.row_residual, std::abs(out.oz(i - 1, k - 1) - expect));
    }
  if (out.row_residual > 1e-10)
    throw std::runtime_error("oz_effective: delta-row pattern failed");
  return out;
}

CMat o_via_iritani(const BoundaryCondition& bc, Cplx z,
                   const TorusWeights& tw) {
  const int N = tw.n + 1;
  CVec ty = theta(bc, Side::Y, z, tw);
  CVec tx = theta(bc, Side::X, z, tw);
  CMat core = chern_matrix(Side::Y, z, tw) * chern_matrix_X_inverse(z, tw);
  CMat o(N, N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) o(i, k) = ty[i] * core(i, k) / tx[k];
  return o;
}

}  // namespace ancrc::ocrc
