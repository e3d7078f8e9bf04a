#include <doctest.h>

#include <cmath>

#include "ancrc/an_geometry.hpp"

using namespace ancrc;
using namespace ancrc::geom;

namespace {

TorusWeights sample(int n) { return {n, Cplx(0.43, 0.11), Cplx(0.29, -0.07)}; }

CohVector unit(BasisTag tag, int N, int k) {
  CohVector v{tag, CVec(N, Cplx(0.0))};
  v.coeffs[k - 1] = 1.0;
  return v;
}

double rel(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(1e-30, std::abs(want));
}

}  // namespace

TEST_CASE("pairings") {
  for (int n : {1, 2, 3}) {
    TorusWeights w = sample(n);
    const int N = n + 1;
    CHECK(rel(pairing_X(unit(BasisTag::X_twisted, N, N),
                        unit(BasisTag::X_twisted, N, N), w),
              1.0 / (double(N) * w.alpha1 * w.alpha2 * w.sigma())) < 1e-14);
    if (n >= 2)
      CHECK(rel(pairing_X(unit(BasisTag::X_twisted, N, 1),
                          unit(BasisTag::X_twisted, N, n), w),
                1.0 / (double(N) * w.sigma())) < 1e-14);
    if (n == 2)
      CHECK(std::abs(pairing_X(unit(BasisTag::X_twisted, N, 1),
                               unit(BasisTag::X_twisted, N, 1), w)) == 0.0);
    CHECK(rel(pairing_Y(unit(BasisTag::Y_fixed, N, 1),
                        unit(BasisTag::Y_fixed, N, 1), w),
              1.0 / (w.w_minus(1) * w.w_plus(1) * w.sigma())) < 1e-14);
    CHECK(std::abs(pairing_Y(unit(BasisTag::Y_fixed, N, 1),
                             unit(BasisTag::Y_fixed, N, 2), w)) == 0.0);
    // closed-form inverses really invert
    CHECK(max_abs_diff(pairing_X_matrix(w) * pairing_X_inverse(w),
                       CMat::identity(N)) < 1e-13);
    CHECK(max_abs_diff(pairing_Y_matrix(w) * pairing_Y_inverse(w),
                       CMat::identity(N)) < 1e-13);
    CHECK(max_abs_diff(pairing_gamma_matrix(w) * pairing_gamma_inverse(w),
                       CMat::identity(N)) < 1e-12);
  }
}

TEST_CASE("atiyah_bott map") {
  TorusWeights w = sample(1);
  CohVector g1 = atiyah_bott(1, w);
  CHECK(rel(g1.coeffs[0], w.alpha2) < 1e-15);
  CHECK(rel(g1.coeffs[1], w.alpha1) < 1e-15);
  for (int n : {1, 2, 3, 4}) {
    TorusWeights wn = sample(n);
    CohVector fund = atiyah_bott(n + 1, wn);
    for (Cplx c : fund.coeffs) CHECK(c == Cplx(1.0));
    // restriction weights: (n+1-j) a2 for i <= j, j a1 for i > j
    for (int j = 1; j <= n; ++j) {
      CohVector g = atiyah_bott(j, wn);
      for (int i = 1; i <= n + 1; ++i) {
        Cplx want = (i <= j) ? double(n + 1 - j) * wn.alpha2
                             : double(j) * wn.alpha1;
        CHECK(rel(g.coeffs[i - 1], want) < 1e-15);
      }
    }
  }
}

TEST_CASE("triple intersections closed form vs localization") {
  for (int n = 1; n <= 6; ++n) {
    TorusWeights w = sample(n);
    const int N = n + 1;
    CHECK(rel(triple_classical(N, N, N, w),
              1.0 / (double(N) * w.alpha1 * w.alpha2 * w.sigma())) < 1e-14);
    for (int i = 1; i <= n; ++i)
      CHECK(std::abs(triple_classical(N, N, i, w)) == 0.0);
    double worst = 0.0;
    for (int i = 1; i <= N; ++i)
      for (int j = i; j <= N; ++j)
        for (int k = j; k <= N; ++k) {
          Cplx sum(0.0);
          CVec gi = atiyah_bott(i, w).coeffs, gj = atiyah_bott(j, w).coeffs,
               gk = atiyah_bott(k, w).coeffs;
          for (int m = 1; m <= N; ++m)
            sum += gi[m - 1] * gj[m - 1] * gk[m - 1] /
                   (w.w_minus(m) * w.w_plus(m) * w.sigma());
          worst = std::max(worst, std::abs(sum - triple_classical(i, j, k, w)));
        }
    CHECK(worst < 1e-10);
  }
  // n = 1: <g1 g1 g1> = -1/2 (localization oracle agrees with closed form)
  CHECK(rel(triple_classical(1, 1, 1, sample(1)), Cplx(-0.5)) < 1e-14);
}

TEST_CASE("correlator_Y structure") {
  TorusWeights w = sample(1);
  SmallQCPoint t{Side::Y, {Cplx(-1.2, 0.4), Cplx(-0.9, 0.1)}};
  Cplx e = std::exp(t.t[0]);
  CHECK(rel(correlator_Y(1, 1, 1, t, w), Cplx(-0.5) - e / (1.0 - e)) < 1e-13);
  // insertions containing the fundamental class stay classical
  CHECK(rel(correlator_Y(2, 1, 1, t, w), triple_classical(2, 1, 1, w)) <
        1e-14);
  // large radius limit: drop the quantum sum exactly
  SmallQCPoint far{Side::Y, {Cplx(-60.0), Cplx(-60.0)}};
  CHECK(rel(correlator_Y(1, 1, 1, far, w), triple_classical(1, 1, 1, w)) <
        1e-14);
}

TEST_CASE("change_of_vars structure") {
  TorusWeights w = sample(2);
  SmallQCPoint zero{Side::X, CVec(3, Cplx(0.0))};
  SmallQCPoint t0 = change_of_vars(zero, w);
  for (int i = 0; i < 2; ++i)
    CHECK(rel(std::exp(t0.t[i]), omega_pow(2, -1.0)) < 1e-14);
  CHECK(t0.t[2] == Cplx(0.0));
  // affine: differences are linear
  SmallQCPoint x1{Side::X, {Cplx(0.2, 0.1), Cplx(-0.1, 0.3), Cplx(0.4)}};
  SmallQCPoint x2{Side::X, {Cplx(-0.3), Cplx(0.25, -0.2), Cplx(0.0, 0.2)}};
  SmallQCPoint xs{Side::X, CVec(3)};
  for (int i = 0; i < 3; ++i) xs.t[i] = x1.t[i] + x2.t[i];
  SmallQCPoint t1 = change_of_vars(x1, w), t2 = change_of_vars(x2, w),
               ts = change_of_vars(xs, w), tz = t0;
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs((ts.t[i] - tz.t[i]) - (t1.t[i] - tz.t[i]) -
                   (t2.t[i] - tz.t[i])) < 1e-13);
}

TEST_CASE("u0 pairing preservation and column structure") {
  // n = 1: 1_1 maps to omega^{-1}(omega^{1/2} - omega^{-1/2})/2 gamma_1 = -i gamma_1
  {
    TorusWeights w1 = sample(1);
    CMat m = u0_map(w1);
    CHECK(std::abs(m(0, 0) - Cplx(0.0, -1.0)) < 1e-14);
  }
  for (int n = 1; n <= 6; ++n) {
    TorusWeights w = sample(n);
    CMat u0g = u0_map(w);
    // last column is gamma_{n+1}
    for (int i = 0; i < n; ++i) CHECK(u0g(i, n) == Cplx(0.0));
    CHECK(u0g(n, n) == Cplx(1.0));
    CMat u0 = u0_map_fixed_basis(w);
    CMat gram = u0.transpose() * pairing_Y_matrix(w) * u0;
    CHECK(max_abs_diff(gram, pairing_X_matrix(w)) < 1e-10);
  }
}

TEST_CASE("correlator_X at the orbifold point is the CR cup product") {
  // with all insertions paired against the unit, the product reduces to the
  // pairing: <<1_{n+1} 1_k 1_{n+1-k}>>(0) = eta(1_k, 1_{n+1-k})
  for (int n : {1, 2, 3}) {
    TorusWeights w = sample(n);
    const int N = n + 1;
    SmallQCPoint zero{Side::X, CVec(N, Cplx(0.0))};
    for (int k = 1; k <= n; ++k) {
      Cplx got = correlator_X(N, k, N - k, zero, w);
      Cplx want = pairing_X(unit(BasisTag::X_twisted, N, k),
                            unit(BasisTag::X_twisted, N, N - k), w);
      CHECK(rel(got, want) < 1e-12);
    }
  }
}

TEST_CASE("wdvv associativity on both sides") {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    TorusWeights w = sample(n);
    SmallQCPoint t{Side::Y, CVec(n + 1)};
    for (int i = 0; i <= n; ++i)
      t.t[i] = Cplx(rng.uniform(-2.0, -1.0), rng.uniform(-0.5, 0.5));
    CHECK(wdvv_residual(quantum_product_Y(t, w)) < 1e-8);
    SmallQCPoint x{Side::X, CVec(n + 1)};
    for (int i = 0; i <= n; ++i) x.t[i] = rng.box(-0.2, 0.2);
    CHECK(wdvv_residual(quantum_product_X(x, w)) < 1e-8);
  }
}
