#include "ancrc/monodromy.hpp"

#include <cmath>

namespace ancrc::mono {

void LoopSpec::validate() const {
  Cplx c = center == LoopCenter::CP ? Cplx(1.0) : Cplx(0.0);
  double r = radius > 0.0 ? radius : std::abs(basepoint - c);
  // The loop must keep the punctures 0, 1 and the orbifold point -1 at
  // distance >= r/2 (the circle passes through none of them).
  for (Cplx s : {Cplx(0.0), Cplx(1.0), Cplx(-1.0)}) {
    if (std::abs(s - c) < 1e-12) continue;  // the encircled point itself
    if (std::abs(std::abs(s - c) - r) < 0.5 * r - 1e-12)
      throw GeometryError("LoopSpec: circle too close to a singular point");
  }
  if (steps < 64) throw ConfigError("LoopSpec: steps too small");
}

ReferenceMonodromy reference_matrices_n1(const PeriodParams& p) {
  if (p.w.n != 1) throw DomainError("reference_matrices_n1: n = 1 only");
  const Cplx a = p.a(), b = p.b();
  auto E = [](Cplx x) { return std::exp(kI * kPi * x); };
  ReferenceMonodromy m{CMat(2, 2), CMat(2, 2), CMat(2, 2)};
  m.lr1(0, 0) = E(-a) * (E(2.0 * a) + E(2.0 * b));
  m.lr1(0, 1) = E(2.0 * b);
  m.lr1(1, 0) = -1.0;
  m.lr1(1, 1) = 0.0;

  m.cp(0, 0) = 1.0;
  m.cp(0, 1) = -2.0 * kI * E(-(a - b)) * std::sin(kPi * b);
  m.cp(1, 0) = -E(-(a + 2.0 * b)) * (E(2.0 * b) - 1.0);
  m.cp(1, 1) = E(-2.0 * (a + b)) * (E(2.0 * b) - 1.0) * (E(2.0 * b) - 1.0) + 1.0;

  m.lr2(0, 0) = 2.0 * std::cos(kPi * a);
  m.lr2(0, 1) = 1.0 - E(-2.0 * a) * (E(2.0 * b) - 1.0);
  m.lr2(1, 0) = -1.0;
  m.lr2(1, 1) = 2.0 * kI * E(-(a - b)) * std::sin(kPi * b);
  return m;
}

CMat transport_path_n1(const std::function<Cplx(double)>& path,
                       const std::function<Cplx(double)>& dpath, int steps,
                       const PeriodParams& p) {
  const Cplx a = p.a(), b = p.b(), c = 1.0 + p.a() - p.b();
  // y = (w, w'), kappa(1-kappa) w'' + [c - (a+b+1) kappa] w' - a b w = 0.
  auto deriv = [&](double s, const Cplx y[2], Cplx out[2]) {
    Cplx k = path(s), dk = dpath(s);
    Cplx wpp = (a * b * y[0] - (c - (a + b + 1.0) * k) * y[1]) / (k * (1.0 - k));
    out[0] = y[1] * dk;
    out[1] = wpp * dk;
  };
  CMat fund = CMat::identity(2);  // columns: transported basis vectors
  for (int col = 0; col < 2; ++col) {
    Cplx y[2] = {fund(0, col), fund(1, col)};
    double h = 1.0 / steps;
    for (int i = 0; i < steps; ++i) {
      double s = i * h;
      Cplx k1[2], k2[2], k3[2], k4[2], tmp[2];
      deriv(s, y, k1);
      for (int j = 0; j < 2; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
      deriv(s + 0.5 * h, tmp, k2);
      for (int j = 0; j < 2; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
      deriv(s + 0.5 * h, tmp, k3);
      for (int j = 0; j < 2; ++j) tmp[j] = y[j] + h * k3[j];
      deriv(s + h, tmp, k4);
      for (int j = 0; j < 2; ++j)
        y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    fund(0, col) = y[0];
    fund(1, col) = y[1];
  }
  return fund;
}

namespace {

int winding_about_zero(const std::function<Cplx(double)>& path, int samples) {
  double acc = 0.0;
  Cplx prev = path(0.0);
  for (int i = 1; i <= samples; ++i) {
    Cplx cur = path(double(i) / samples);
    acc += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(acc / (2.0 * kPi)));
}

}  // namespace

CMat numeric_monodromy_n1(const LoopSpec& loop, const PeriodParams& p) {
  if (p.w.n != 1) throw DomainError("numeric_monodromy_n1: n = 1 only");
  loop.validate();
  std::function<Cplx(double)> path, dpath;
  const Cplx bp = loop.basepoint;
  switch (loop.center) {
    case LoopCenter::LR1: {
      path = [bp](double s) { return bp * std::exp(2.0 * kPi * kI * s); };
      dpath = [bp](double s) {
        return bp * 2.0 * kPi * kI * std::exp(2.0 * kPi * kI * s);
      };
      break;
    }
    case LoopCenter::CP: {
      Cplx rad = bp - 1.0;
      path = [rad](double s) { return 1.0 + rad * std::exp(2.0 * kPi * kI * s); };
      dpath = [rad](double s) {
        return rad * 2.0 * kPi * kI * std::exp(2.0 * kPi * kI * s);
      };
      break;
    }
    case LoopCenter::LR2: {
      // counterclockwise about infinity = clockwise big circle
      path = [bp](double s) { return bp * std::exp(-2.0 * kPi * kI * s); };
      dpath = [bp](double s) {
        return -bp * 2.0 * kPi * kI * std::exp(-2.0 * kPi * kI * s);
      };
      break;
    }
  }
  // fixed-step RK4 with deterministic step doubling until the half-step
  // comparison stabilizes
  int steps = loop.steps;
  CMat m(2, 2);
  bool stable = false;
  for (int attempt = 0; attempt < 4 && !stable; ++attempt, steps *= 2) {
    m = transport_path_n1(path, dpath, steps, p);
    CMat m2 = transport_path_n1(path, dpath, steps / 2, p);
    stable = max_abs_diff(m, m2) <= 1e-7 * std::max(1.0, m.max_abs());
  }
  if (!stable)
    throw NonConvergence("numeric_monodromy_n1: step halving unstable");
  // exact prefactor phase from C_1(kappa)^{1/z} = (kappa_0 kappa)^{a/2}
  int wind = winding_about_zero(path, 256);
  return m * std::exp(kI * kPi * p.a() * double(wind));
}

double invariant_compare(const CMat& numeric, const CMat& reference) {
  auto tr = [](const CMat& m) { return m(0, 0) + m(1, 1); };
  auto det = [](const CMat& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  };
  return std::max(std::abs(tr(numeric) - tr(reference)),
                  std::abs(det(numeric) - det(reference)));
}

}  // namespace ancrc::mono
