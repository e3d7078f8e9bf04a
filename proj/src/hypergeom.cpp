#include "ancrc/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ancrc::hyp {

using num::cpow;
using num::dist_to_int;
using num::dist_to_nonpos_int;
using num::gamma_ratio;
using num::integrate01;

bool LauricellaParams::equal_b() const {
  for (const Cplx& x : b)
    if (std::abs(x - b[0]) > 1e-14) return false;
  return true;
}

SectorPoint classify_sector(const std::vector<Cplx>& w, double min_mod,
                            double max_ratio) {
  SectorPoint s{w, true};
  std::vector<double> mods(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    mods[i] = std::abs(w[i]);
    if (mods[i] < min_mod) s.sector_ok = false;
  }
  std::sort(mods.begin(), mods.end());
  for (size_t i = 0; i + 1 < mods.size(); ++i)
    if (mods[i] > max_ratio * mods[i + 1]) s.sector_ok = false;
  return s;
}

Cplx gauss_2f1_series(const GaussParams& p, Cplx z, const PrecisionPolicy& pp) {
  if (std::abs(z) > 0.9) throw DomainError("gauss_2f1_series: |z| > 0.9");
  if (dist_to_nonpos_int(p.c) < 1e-12)
    throw PoleError("gauss_2f1_series: c non-positive integer");
  Cplx term(1.0), sum(1.0);
  int quiet = 0;
  for (int k = 0; k < pp.max_series_terms; ++k) {
    term *= (p.a + double(k)) * (p.b + double(k)) /
            ((p.c + double(k)) * double(k + 1)) * z;
    sum += term;
    // stop a couple of decades under rel_tol so downstream consumers see the
    // advertised accuracy, not the raw stopping threshold
    if (std::abs(term) <= 1e-2 * pp.rel_tol * std::abs(sum) + pp.abs_floor) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergence("gauss_2f1_series: term budget exhausted");
}

Cplx gauss_2f1_continued(const GaussParams& p, Cplx z,
                         const PrecisionPolicy& pp) {
  if (std::abs(z) < 1.1) throw DomainError("gauss_2f1_continued: |z| < 1.1");
  if (dist_to_int(p.b - p.a) < 0.02)
    throw ResonanceError("gauss_2f1_continued: b - a near an integer");
  const Cplx a = p.a, b = p.b, c = p.c;
  Cplx t1 = cpow(-z, -a) * gamma_ratio({c, b - a}, {b, c - a}) *
            gauss_2f1_series({a, a - c + 1.0, a - b + 1.0}, 1.0 / z, pp);
  Cplx t2 = cpow(-z, -b) * gamma_ratio({c, a - b}, {a, c - b}) *
            gauss_2f1_series({b, b - c + 1.0, b - a + 1.0}, 1.0 / z, pp);
  return t1 + t2;
}

Cplx lauricella_fd_series(const LauricellaParams& p, const std::vector<Cplx>& w,
                          const PrecisionPolicy& pp) {
  const int N = p.N();
  if (static_cast<int>(w.size()) != N)
    throw DomainError("lauricella_fd_series: w size mismatch");
  for (const Cplx& wi : w)
    if (std::abs(wi) > 0.6)
      throw DomainError("lauricella_fd_series: |w_i| > 0.6");
  if (dist_to_nonpos_int(p.c) < 1e-12)
    throw PoleError("lauricella_fd_series: c non-positive integer");

  // S_m = sum over |i| = m of prod (b_j)_{i_j} w_j^{i_j} / i_j!, built by
  // convolving the N single-variable series; then sum (a)_m/(c)_m S_m.
  int cap = 256;
  for (;;) {
    std::vector<Cplx> s(cap, Cplx(0.0));
    s[0] = 1.0;
    std::vector<Cplx> t(cap), fj(cap);
    for (int j = 0; j < N; ++j) {
      fj[0] = 1.0;
      for (int m = 1; m < cap; ++m)
        fj[m] = fj[m - 1] * (p.b[j] + double(m - 1)) * w[j] / double(m);
      std::fill(t.begin(), t.end(), Cplx(0.0));
      for (int m = 0; m < cap; ++m) {
        if (s[m] == Cplx(0.0)) continue;
        for (int k = 0; k + m < cap; ++k) t[m + k] += s[m] * fj[k];
      }
      s.swap(t);
    }
    Cplx ratio(1.0), sum(0.0);
    int quiet = 0;
    bool converged = false;
    for (int m = 0; m < cap; ++m) {
      Cplx term = ratio * s[m];
      sum += term;
      ratio *= (p.a + double(m)) / (p.c + double(m));
      if (std::abs(term) <= 1e-2 * pp.rel_tol * std::abs(sum) + pp.abs_floor) {
        if (++quiet >= 3 && m > 4) {
          converged = true;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    if (converged) return sum;
    cap *= 2;
    if (cap > pp.max_series_terms)
      throw NonConvergence("lauricella_fd_series: degree budget exhausted");
  }
}

Cplx lauricella_fd_euler(const LauricellaParams& p, const std::vector<Cplx>& w,
                         const PrecisionPolicy& pp) {
  const int N = p.N();
  if (static_cast<int>(w.size()) != N)
    throw DomainError("lauricella_fd_euler: w size mismatch");
  if (p.a.real() <= 0.0 || (p.c - p.a).real() <= 0.0)
    throw DomainError("lauricella_fd_euler: need Re a > 0 and Re(c-a) > 0");
  for (const Cplx& wi : w)
    if (std::abs(wi.imag()) < 1e-14 && wi.real() >= 1.0)
      throw DomainError("lauricella_fd_euler: w on the cut [1, inf)");
  const Cplx a = p.a, c = p.c;
  Cplx integral = integrate01(
      [&](double u, double omu) {
        Cplx v = std::exp((a - 1.0) * std::log(u) + (c - a - 1.0) * std::log(omu));
        for (int j = 0; j < N; ++j) v *= cpow(1.0 - w[j] * u, -p.b[j]);
        return v;
      },
      pp);
  return gamma_ratio({c}, {a, c - a}) * integral;
}

Cplx fd_leading_asymptotics(const LauricellaParams& p,
                            const std::vector<Cplx>& w) {
  const int N = p.N();
  if (!classify_sector(w).sector_ok)
    throw DomainError("fd_leading_asymptotics: point outside the sector");
  // Sort (w, b) pairs by ascending modulus; the expansion is written for
  // |w_1| << ... << |w_N|.
  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return std::abs(w[i]) < std::abs(w[j]); });
  std::vector<Cplx> ws(N), bs(N);
  for (int i = 0; i < N; ++i) {
    ws[i] = w[idx[i]];
    bs[i] = p.b[idx[i]];
  }
  const Cplx a = p.a, c = p.c;
  auto guard = [](Cplx x) {
    if (dist_to_nonpos_int(x) < 0.02)
      throw ResonanceError("fd_leading_asymptotics: Gamma argument near pole");
  };
  Cplx total(0.0);
  for (int j = 0; j < N; ++j) {
    Cplx sj(0.0);  // b_{N-j+1} + ... + b_N (1-indexed), j terms
    for (int i = N - j; i < N; ++i) sj += bs[i];
    guard(a - sj);
    guard(sj + bs[N - j - 1] - a);
    guard(c - a);
    Cplx term = gamma_ratio({c, a - sj, sj + bs[N - j - 1] - a},
                            {a, bs[N - j - 1], c - a});
    for (int i = 1; i <= j; ++i) term *= cpow(-ws[N - i], -bs[N - i]);
    term *= cpow(-ws[N - j - 1], -a + sj);
    total += term;
  }
  Cplx bsum = std::accumulate(bs.begin(), bs.end(), Cplx(0.0));
  guard(a - bsum);
  guard(c - bsum);
  Cplx tail = gamma_ratio({c, a - bsum}, {a, c - bsum});
  for (int i = 0; i < N; ++i) tail *= cpow(-ws[i], -bs[i]);
  return total + tail;
}

namespace {

// F_D^{(N)}(-d; b; c; w) as a finite sum (a = -d truncates at total degree d).
Cplx fd_polynomial(int d, const std::vector<Cplx>& b, Cplx c,
                   const std::vector<Cplx>& w) {
  const int N = static_cast<int>(b.size());
  std::vector<Cplx> s(d + 1, Cplx(0.0));
  s[0] = 1.0;
  std::vector<Cplx> t(d + 1), fj(d + 1);
  for (int j = 0; j < N; ++j) {
    fj[0] = 1.0;
    for (int m = 1; m <= d; ++m)
      fj[m] = fj[m - 1] * (b[j] + double(m - 1)) * w[j] / double(m);
    std::fill(t.begin(), t.end(), Cplx(0.0));
    for (int m = 0; m <= d; ++m)
      for (int k = 0; k + m <= d; ++k) t[m + k] += s[m] * fj[k];
    s.swap(t);
  }
  Cplx sum(0.0), ratio(1.0);
  for (int m = 0; m <= d; ++m) {
    sum += ratio * s[m];
    ratio *= (Cplx(-double(d)) + double(m)) / (c + double(m));
  }
  return sum;
}

}  // namespace

Cplx toscano_reduce(int d, const std::vector<Cplx>& b, Cplx c,
                    const std::vector<Cplx>& w) {
  const int N = static_cast<int>(b.size());
  Cplx lhs = fd_polynomial(d, b, c, w);
  // right side: (-w_N)^d (b_N)_d/(c)_d F_D(-d; b_1..b_{N-1}, 1-d-c;
  //                                      1-d-b_N; w_1/w_N,...,1/w_N)
  std::vector<Cplx> b2(b.begin(), b.end() - 1);
  b2.push_back(1.0 - double(d) - c);
  std::vector<Cplx> w2;
  for (int i = 0; i + 1 < N; ++i) w2.push_back(w[i] / w[N - 1]);
  w2.push_back(1.0 / w[N - 1]);
  Cplx rhs = cpow(-w[N - 1], double(d)) * num::pochhammer(b[N - 1], d) /
             num::pochhammer(c, d) *
             fd_polynomial(d, b2, 1.0 - double(d) - b[N - 1], w2);
  if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(lhs)))
    throw std::runtime_error("toscano_reduce: finite-sum identity violated");
  return lhs;
}

Cplx appell_f1(Cplx a, Cplx b1, Cplx b2, Cplx c, Cplx x, Cplx y,
               const PrecisionPolicy& pp) {
  LauricellaParams p{a, {b1, b2}, c};
  if (std::abs(x) <= 0.6 && std::abs(y) <= 0.6)
    return lauricella_fd_series(p, {x, y}, pp);
  return lauricella_fd_euler(p, {x, y}, pp);
}

double appell_system_residual(Cplx a, Cplx b, std::pair<Cplx, Cplx> kappa,
                              double h, int solution,
                              const PrecisionPolicy& pp) {
  if (h < 1e-3 || h > 1e-2)
    throw DomainError("appell_system_residual: step outside [1e-3, 1e-2]");
  const Cplx c = 1.0 + a - b;
  // The three solutions of the rank-3 system in the normalization with the
  // kappa_0 prefactor stripped.
  auto f = [&](Cplx k1, Cplx k2) -> Cplx {
    switch (solution) {
      case 1:
        return cpow(k1, -a) * appell_f1(a, b, b, c, 1.0 / k1, k2 / k1, pp);
      case 2:
        return cpow(k2, -a) * appell_f1(a, b, b, c, 1.0 / k2, k1 / k2, pp);
      default:
        return appell_f1(a, b, b, c, k1, k2, pp);
    }
  };
  const Cplx x0 = kappa.first, y0 = kappa.second;
  Cplx g[5][5];
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j)
      g[i + 2][j + 2] = f(x0 + double(i) * h, y0 + double(j) * h);
  auto at = [&](int i, int j) { return g[i + 2][j + 2]; };
  auto d1 = [&](std::function<Cplx(int)> v) {
    return (-v(2) + 8.0 * v(1) - 8.0 * v(-1) + v(-2)) / (12.0 * h);
  };
  Cplx f0 = at(0, 0);
  Cplx fx = d1([&](int i) { return at(i, 0); });
  Cplx fy = d1([&](int j) { return at(0, j); });
  Cplx fxx = (-at(2, 0) + 16.0 * at(1, 0) - 30.0 * at(0, 0) + 16.0 * at(-1, 0) -
              at(-2, 0)) /
             (12.0 * h * h);
  Cplx fxy = d1([&](int i) { return d1([&](int j) { return at(i, j); }); });
  // Appell F1 system with b1 = b2 = b:
  //   (x - y) fxy - b (fx - fy) = 0
  //   x(1-x) fxx + y(1-x) fxy + [c - (a+b+1)x] fx - b y fy - a b f = 0
  Cplx r1 = (x0 - y0) * fxy - b * (fx - fy);
  Cplx r2 = x0 * (1.0 - x0) * fxx + y0 * (1.0 - x0) * fxy +
            (c - (a + b + 1.0) * x0) * fx - b * y0 * fy - a * b * f0;
  return std::max(std::abs(r1), std::abs(r2));
}

}  // namespace ancrc::hyp
