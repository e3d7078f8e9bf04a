#include "ancrc/an_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace ancrc::geom {

void TorusWeights::validate() const {
  if (n < 1) throw GeometryError("TorusWeights: n >= 1 required");
  auto chk = [](Cplx v, const char* what) {
    if (std::abs(v) < 1e-12) throw GeometryError(std::string("TorusWeights: ") + what);
  };
  chk(alpha1, "alpha1 = 0");
  chk(alpha2, "alpha2 = 0");
  chk(alpha1 + alpha2, "alpha1 + alpha2 = 0");
  for (int i = 1; i <= n + 1; ++i) {
    chk(w_minus(i), "w_i^- = 0");
    chk(w_plus(i), "w_i^+ = 0");
  }
}

Cplx omega_pow(int n, double x) {
  return std::exp(Cplx(0.0, 2.0 * kPi * x / double(n + 1)));
}

static void check_pair(const CohVector& u, const CohVector& v, BasisTag tag,
                       const TorusWeights& w) {
  if (u.basis != tag || v.basis != tag)
    throw GeometryError("pairing: basis tag mismatch");
  if (static_cast<int>(u.coeffs.size()) != w.n + 1 ||
      static_cast<int>(v.coeffs.size()) != w.n + 1)
    throw GeometryError("pairing: dimension mismatch");
}

CMat pairing_X_matrix(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat e(N, N);
  Cplx denom = w.alpha1 * w.alpha2 * w.sigma() * double(N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Cplx v(0.0);
      if (i == N && j == N) v += 1.0;
      if (i + j == N) v += w.alpha1 * w.alpha2;
      e(i - 1, j - 1) = v / denom;
    }
  return e;
}

CMat pairing_X_inverse(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat inv(N, N);
  Cplx denom = w.alpha1 * w.alpha2 * w.sigma() * double(N);
  // anti-diagonal block on twisted sectors, separate (N,N) entry
  for (int i = 1; i <= w.n; ++i)
    inv(i - 1, N - i - 1) = denom / (w.alpha1 * w.alpha2);
  inv(N - 1, N - 1) = denom;
  return inv;
}

CMat pairing_Y_matrix(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat e(N, N);
  for (int i = 1; i <= N; ++i)
    e(i - 1, i - 1) = 1.0 / (w.w_minus(i) * w.w_plus(i) * w.sigma());
  return e;
}

CMat pairing_Y_inverse(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat e(N, N);
  for (int i = 1; i <= N; ++i)
    e(i - 1, i - 1) = w.w_minus(i) * w.w_plus(i) * w.sigma();
  return e;
}

CMat pairing_gamma_matrix(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat e(N, N);
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      e(i - 1, j - 1) = e(j - 1, i - 1) = triple_classical(N, i, j, w);
  return e;
}

CMat pairing_gamma_inverse(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat inv(N, N);
  // twisted block: minus sigma times the A_n Cartan matrix
  for (int i = 1; i <= w.n; ++i) {
    inv(i - 1, i - 1) = -2.0 * w.sigma();
    if (i > 1) inv(i - 1, i - 2) = w.sigma();
    if (i < w.n) inv(i - 1, i) = w.sigma();
  }
  inv(N - 1, N - 1) = double(N) * w.alpha1 * w.alpha2 * w.sigma();
  return inv;
}

Cplx pairing_X(const CohVector& u, const CohVector& v, const TorusWeights& w) {
  check_pair(u, v, BasisTag::X_twisted, w);
  CMat e = pairing_X_matrix(w);
  Cplx s(0.0);
  for (int i = 0; i <= w.n; ++i)
    for (int j = 0; j <= w.n; ++j) s += u.coeffs[i] * v.coeffs[j] * e(i, j);
  return s;
}

Cplx pairing_Y(const CohVector& u, const CohVector& v, const TorusWeights& w) {
  check_pair(u, v, BasisTag::Y_fixed, w);
  Cplx s(0.0);
  for (int i = 1; i <= w.n + 1; ++i)
    s += u.coeffs[i - 1] * v.coeffs[i - 1] /
         (w.w_minus(i) * w.w_plus(i) * w.sigma());
  return s;
}

CohVector atiyah_bott(int j, const TorusWeights& w) {
  const int N = w.n + 1;
  if (j < 1 || j > N) throw GeometryError("atiyah_bott: index out of range");
  CohVector out{BasisTag::Y_fixed, CVec(N, Cplx(0.0))};
  if (j == N) {
    std::fill(out.coeffs.begin(), out.coeffs.end(), Cplx(1.0));
    return out;
  }
  for (int i = 1; i <= N; ++i)
    out.coeffs[i - 1] = (i <= j) ? double(N - j) * w.alpha2 : double(j) * w.alpha1;
  return out;
}

Cplx triple_classical(int i, int j, int k, const TorusWeights& w) {
  const int N = w.n + 1;
  int s[3] = {i, j, k};
  std::sort(s, s + 3);
  i = s[0]; j = s[1]; k = s[2];
  if (i < 1 || k > N) throw GeometryError("triple_classical: index range");
  if (i == N) return 1.0 / (double(N) * w.alpha1 * w.alpha2 * w.sigma());
  if (j == N) return Cplx(0.0);
  if (k == N) return double(i) * double(N - j) / (-double(N) * w.sigma());
  return -(double(i) * double(j) * double(N - k) * w.alpha1 +
           double(i) * double(N - j) * double(N - k) * w.alpha2) /
         (double(N) * w.sigma());
}

Cplx correlator_Y(int i, int j, int k, const SmallQCPoint& p,
                  const TorusWeights& w) {
  if (p.side != Side::Y) throw GeometryError("correlator_Y: wrong side");
  int s[3] = {i, j, k};
  std::sort(s, s + 3);
  Cplx val = triple_classical(i, j, k, w);
  // quantum part: curve classes L_l + ... + L_m covering [s0, s2]
  for (int l = 1; l <= s[0]; ++l)
    for (int m = s[2]; m <= w.n; ++m) {
      Cplx e = std::exp(std::accumulate(p.t.begin() + (l - 1),
                                        p.t.begin() + m, Cplx(0.0)));
      if (std::abs(e - 1.0) < 1e-12)
        throw PoleError("correlator_Y: quantum denominator vanishes");
      val -= e / (1.0 - e);
    }
  return val;
}

SmallQCPoint change_of_vars(const SmallQCPoint& x, const TorusWeights& w) {
  if (x.side != Side::X) throw GeometryError("change_of_vars: wrong side");
  const int N = w.n + 1;
  SmallQCPoint t{Side::Y, CVec(N, Cplx(0.0))};
  for (int i = 1; i <= w.n; ++i) {
    Cplx v = -2.0 * kPi * kI / double(N);
    for (int k = 1; k <= w.n; ++k)
      v += omega_pow(w.n, -double(i * k)) *
           (omega_pow(w.n, k / 2.0) - omega_pow(w.n, -k / 2.0)) *
           x.t[k - 1] / double(N);
    t.t[i - 1] = v;
  }
  t.t[N - 1] = x.t[N - 1];
  return t;
}

CMat u0_map(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat m(N, N);  // rows: gamma index, cols: sector index
  for (int k = 1; k <= w.n; ++k)
    for (int i = 1; i <= w.n; ++i)
      m(i - 1, k - 1) = omega_pow(w.n, -double(i * k)) *
                        (omega_pow(w.n, k / 2.0) - omega_pow(w.n, -k / 2.0)) /
                        double(N);
  m(N - 1, N - 1) = 1.0;
  return m;
}

CMat u0_map_fixed_basis(const TorusWeights& w) {
  const int N = w.n + 1;
  CMat ab(N, N);  // rows: fixed point, cols: gamma index
  for (int j = 1; j <= N; ++j) {
    CohVector g = atiyah_bott(j, w);
    for (int i = 0; i < N; ++i) ab(i, j - 1) = g.coeffs[i];
  }
  return ab * u0_map(w);
}

Cplx correlator_X(int k1, int k2, int k3, const SmallQCPoint& x,
                  const TorusWeights& w) {
  if (x.side != Side::X) throw GeometryError("correlator_X: wrong side");
  SmallQCPoint t = change_of_vars(x, w);
  CMat u0 = u0_map(w);
  const int N = w.n + 1;
  Cplx total(0.0);
  int ks[3] = {k1, k2, k3};
  // trilinear expansion over the gamma-basis images
  for (int i = 1; i <= N; ++i) {
    Cplx ci = u0(i - 1, ks[0] - 1);
    if (ci == Cplx(0.0)) continue;
    for (int j = 1; j <= N; ++j) {
      Cplx cj = u0(j - 1, ks[1] - 1);
      if (cj == Cplx(0.0)) continue;
      for (int l = 1; l <= N; ++l) {
        Cplx cl = u0(l - 1, ks[2] - 1);
        if (cl == Cplx(0.0)) continue;
        total += ci * cj * cl * correlator_Y(i, j, l, t, w);
      }
    }
  }
  return total;
}

namespace {

std::vector<CMat> products_from(const std::function<Cplx(int, int, int)>& corr,
                                const CMat& eta_inv, int N) {
  // (C_a)_{c-1, b-1} = sum_d eta^{cd} <<a b d>>
  std::vector<CMat> out;
  out.reserve(N);
  for (int a = 1; a <= N; ++a) {
    CMat c(N, N);
    for (int b = 1; b <= N; ++b)
      for (int cc = 1; cc <= N; ++cc) {
        Cplx v(0.0);
        for (int d = 1; d <= N; ++d) {
          Cplx e = eta_inv(cc - 1, d - 1);
          if (e == Cplx(0.0)) continue;
          v += e * corr(a, b, d);
        }
        c(cc - 1, b - 1) = v;
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<CMat> quantum_product_Y(const SmallQCPoint& t,
                                    const TorusWeights& w) {
  return products_from(
      [&](int a, int b, int d) { return correlator_Y(a, b, d, t, w); },
      pairing_gamma_inverse(w), w.n + 1);
}

std::vector<CMat> quantum_product_X(const SmallQCPoint& x,
                                    const TorusWeights& w) {
  return products_from(
      [&](int a, int b, int d) { return correlator_X(a, b, d, x, w); },
      pairing_X_inverse(w), w.n + 1);
}

double wdvv_residual(const std::vector<CMat>& prod) {
  const int N = static_cast<int>(prod.size());
  double worst = 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      worst = std::max(worst, max_abs_diff(prod[a] * prod[b], prod[b] * prod[a]));
  return worst;
}

}  // namespace ancrc::geom
