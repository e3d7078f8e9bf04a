#include <doctest.h>

#include <cmath>

#include "ancrc/hurwitz_mirror.hpp"
#include "ancrc/numerics.hpp"

using namespace ancrc;
using namespace ancrc::mirror;
using geom::Side;
using geom::SmallQCPoint;
using geom::TorusWeights;

namespace {
TorusWeights sample(int n) { return {n, Cplx(0.43, 0.11), Cplx(0.29, -0.07)}; }
double rel(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(1e-30, std::abs(want));
}
}  // namespace

TEST_CASE("log lambda gradients") {
  TorusWeights w = sample(2);
  KappaPoint kp{{Cplx(1.3, 0.2), Cplx(0.4, -0.3), Cplx(-0.8, 0.5)}};
  // kappa_0-scaled derivative is alpha1 for any q
  CHECK(log_lambda_grad(kp, {FrameKind::kappa_scaled, 0}, Cplx(0.7, 0.4), w) ==
        w.alpha1);
  // rational term vanishes at q = 0
  CHECK(log_lambda_grad(kp, {FrameKind::kappa_scaled, 1}, Cplx(0.0), w) ==
        w.alpha1);
  CHECK(rel(log_lambda_qgrad(kp, Cplx(0.0), w), 3.0 * w.alpha1) < 1e-15);
  // t_{n+1} frame field normalizes kappa_0 d_0 by alpha1
  CHECK(log_lambda_grad(kp, {FrameKind::t_frame, 3}, Cplx(0.2), w) ==
        Cplx(1.0));
}

TEST_CASE("kappa charts") {
  TorusWeights w = sample(2);
  SmallQCPoint t{Side::Y, {Cplx(-1.0, 0.2), Cplx(-1.4, -0.1), Cplx(0.3)}};
  KappaPoint kp = kappa_from_t(t, Cplx(0.0), w);
  CHECK(rel(kp.kappa[1], std::exp(t.t[0] + t.t[1])) < 1e-14);
  CHECK(rel(kp.kappa[2], std::exp(t.t[1])) < 1e-14);
  CHECK(rel(kp.kappa[0], std::exp(t.t[2] / w.alpha1)) < 1e-14);
  // a delta shift scales kappa_0 only
  KappaPoint kps = kappa_from_t(t, Cplx(0.0, 0.5), w);
  CHECK(rel(kps.kappa[0] / kp.kappa[0], std::exp(Cplx(0.0, 0.5) / w.alpha1)) <
        1e-13);
  CHECK(kps.kappa[1] == kp.kappa[1]);

  // large radius: kappa_j -> 0 for j >= 1
  SmallQCPoint far{Side::Y, {Cplx(-40.0), Cplx(-40.0), Cplx(0.0)}};
  KappaPoint kf = kappa_from_t(far, Cplx(0.0), w);
  CHECK(std::abs(kf.kappa[1]) < 1e-30);

  // X chart is the composition through the affine identification; at x = 0
  // the kappas are the (reordered) roots of unity.
  SmallQCPoint x0{Side::X, CVec(3, Cplx(0.0))};
  KappaPoint ko = kappa_from_x(x0, Cplx(0.0), w);
  for (int j = 1; j <= 2; ++j)
    CHECK(rel(ko.kappa[j], geom::omega_pow(2, -double(3 - j))) < 1e-13);
}

TEST_CASE("n=1 single-pole residue value") {
  TorusWeights w = sample(1);
  KappaPoint kp{{Cplx(0.9, 0.3), Cplx(0.35, 0.15)}};
  // residue at kappa_1^{-1} for the triple (k1 d1)^3:
  // alpha2/sigma + 1/(kappa_1 - 1)
  auto integrand = [&](Cplx q) {
    Cplx f = log_lambda_grad(kp, {FrameKind::kappa_scaled, 1}, q, w);
    return f * f * f / (w.sigma() * w.sigma() * q * log_lambda_qgrad(kp, q, w));
  };
  Cplx pole = 1.0 / kp.kappa[1];
  Cplx got = num::contour_residue(integrand, pole, 0.2);
  Cplx want = w.alpha2 / w.sigma() + 1.0 / (kp.kappa[1] - 1.0);
  CHECK(rel(got, want) < 1e-10);

  // insertion of kappa_0 d_0 against (kappa_i d_i)^2: -alpha1/sigma after the
  // alpha1 scaling of the frame field
  auto integrand2 = [&](Cplx q) {
    Cplx f = log_lambda_grad(kp, {FrameKind::kappa_scaled, 1}, q, w);
    return w.alpha1 * f * f /
           (w.sigma() * w.sigma() * q * log_lambda_qgrad(kp, q, w));
  };
  Cplx got2 = num::contour_residue(integrand2, pole, 0.2);
  CHECK(rel(got2, w.alpha1 * (-1.0 / w.sigma())) < 1e-10);
}

TEST_CASE("residue at infinity for three unit-frame fields") {
  // all three fields d_{t_{n+1}}: residue at infinity is
  // -(-alpha2)^{-1}/((n+1) sigma^2)
  for (int n : {1, 2, 3}) {
    TorusWeights w = sample(n);
    KappaPoint kp{CVec(n + 1)};
    kp.kappa[0] = Cplx(1.1, 0.4);
    for (int j = 1; j <= n; ++j)
      kp.kappa[j] = std::polar(0.3 + 0.17 * j, 0.6 * j);
    auto full = residue_correlator_full(kp, {FrameKind::t_frame, n + 1},
                                        {FrameKind::t_frame, n + 1},
                                        {FrameKind::t_frame, n + 1}, w);
    Cplx want = 1.0 / (double(n + 1) * w.alpha1 * w.sigma() * w.sigma()) +
                1.0 / (double(n + 1) * w.alpha2 * w.sigma() * w.sigma());
    CHECK(rel(full.total, want) < 1e-9);
    CHECK(std::abs(full.at_q1) < 1e-10);
  }
}

TEST_CASE("mirror theorem spot checks") {
  TorusWeights w1 = sample(1);
  SmallQCPoint t{Side::Y, {Cplx(-1.1, 0.3), Cplx(0.2, -0.4)}};
  // both sides equal -1/2 - e^t/(1 - e^t)
  KappaPoint kp = kappa_from_t(t, Cplx(0.0), w1);
  Cplx lhs = residue_correlator(kp, {FrameKind::t_frame, 1},
                                {FrameKind::t_frame, 1},
                                {FrameKind::t_frame, 1}, w1);
  Cplx e = std::exp(t.t[0]);
  CHECK(rel(lhs, Cplx(-0.5) - e / (1.0 - e)) < 1e-9);
  CHECK(mirror_check(Side::Y, t, 1, 1, 1, w1) < 1e-7);
  // triples containing the unit direction reproduce the pairing row
  CHECK(mirror_check(Side::Y, t, 2, 1, 1, w1) < 1e-7);

  TorusWeights w2 = sample(2);
  SmallQCPoint t2{Side::Y, {Cplx(-1.1, 0.3), Cplx(-1.4, -0.2), Cplx(0.1)}};
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      for (int k = j; k <= 3; ++k)
        CHECK(mirror_check(Side::Y, t2, i, j, k, w2) < 1e-7);
  SmallQCPoint x2{Side::X, {Cplx(0.12, -0.1), Cplx(-0.2, 0.08), Cplx(0.15)}};
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      for (int k = j; k <= 3; ++k)
        CHECK(mirror_check(Side::X, x2, i, j, k, w2) < 1e-7);
}

TEST_CASE("total correlator is symmetric in the fields") {
  TorusWeights w = sample(2);
  KappaPoint kp{{Cplx(1.2, -0.3), Cplx(0.45, 0.2), Cplx(-0.6, 0.35)}};
  VectorField a{FrameKind::t_frame, 1}, b{FrameKind::t_frame, 2},
      c{FrameKind::t_frame, 3};
  Cplx v1 = residue_correlator(kp, a, b, c, w);
  Cplx v2 = residue_correlator(kp, c, a, b, w);
  Cplx v3 = residue_correlator(kp, b, c, a, w);
  CHECK(std::abs(v1 - v2) < 1e-12);
  CHECK(std::abs(v1 - v3) < 1e-12);
}

TEST_CASE("discriminant guard") {
  KappaPoint bad{{Cplx(1.0), Cplx(0.5), Cplx(0.5)}};
  CHECK_THROWS_AS(bad.validate(), GeometryError);
}

TEST_CASE("field index validation") {
  TorusWeights w = sample(2);
  KappaPoint kp{{Cplx(1.2, -0.3), Cplx(0.45, 0.2), Cplx(-0.6, 0.35)}};
  VectorField ok{FrameKind::t_frame, 1};
  CHECK_THROWS_AS(residue_correlator(kp, {FrameKind::kappa_scaled, 7}, ok, ok, w),
                  GeometryError);
  CHECK_THROWS_AS(residue_correlator(kp, {FrameKind::t_frame, 4}, ok, ok, w),
                  GeometryError);
}
