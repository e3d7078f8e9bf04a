#include "ancrc/hurwitz_mirror.hpp"

#include <algorithm>
#include <cmath>

#include "ancrc/numerics.hpp"

namespace ancrc::mirror {

void KappaPoint::validate() const {
  const int nn = n();
  for (int j = 0; j <= nn; ++j)
    if (std::abs(kappa[j]) < 1e-12)
      throw GeometryError("KappaPoint: kappa_j = 0");
  for (int i = 1; i <= nn + 1; ++i)
    for (int j = i + 1; j <= nn + 1; ++j)
      if (std::abs(at(i) - at(j)) < 1e-9)
        throw GeometryError("KappaPoint: discriminant kappa_i = kappa_j");
}

namespace {

// kappa_k d/d kappa_k log lambda for k >= 1; alpha1 alone for k = 0.
Cplx kappa_scaled_grad(const KappaPoint& kp, int k, Cplx q,
                       const TorusWeights& w) {
  if (k == 0) return w.alpha1;
  Cplx kk = kp.at(k);
  return w.alpha1 + w.sigma() * q * kk / (1.0 - q * kk);
}

}  // namespace

Cplx log_lambda_qgrad(const KappaPoint& kp, Cplx q, const TorusWeights& w) {
  Cplx v = double(kp.n() + 1) * w.alpha1;
  for (int l = 1; l <= kp.n() + 1; ++l) {
    Cplx kk = kp.at(l);
    v += w.sigma() * q * kk / (1.0 - q * kk);
  }
  return v;
}

Cplx log_lambda_grad(const KappaPoint& kp, const VectorField& X, Cplx q,
                     const TorusWeights& w) {
  const int n = kp.n();
  switch (X.kind) {
    case FrameKind::kappa_scaled:
      if (X.index < 0 || X.index > n)
        throw GeometryError("log_lambda_grad: kappa index range");
      return kappa_scaled_grad(kp, X.index, q, w);
    case FrameKind::t_frame: {
      // d/dt_i = sum_{j<=i} kappa_j d_j for i <= n; d/dt_{n+1} = k0 d0/alpha1.
      if (X.index < 1 || X.index > n + 1)
        throw GeometryError("log_lambda_grad: t index range");
      if (X.index == n + 1) return Cplx(1.0);
      Cplx v(0.0);
      for (int j = 1; j <= X.index; ++j) v += kappa_scaled_grad(kp, j, q, w);
      return v;
    }
    case FrameKind::x_frame: {
      // push forward through the affine map t(x).
      if (X.index < 1 || X.index > n + 1)
        throw GeometryError("log_lambda_grad: x index range");
      if (X.index == n + 1)
        return log_lambda_grad(kp, {FrameKind::t_frame, n + 1}, q, w);
      Cplx v(0.0);
      for (int i = 1; i <= n; ++i) {
        Cplx coeff = geom::omega_pow(n, -double(i * X.index)) *
                     (geom::omega_pow(n, X.index / 2.0) -
                      geom::omega_pow(n, -X.index / 2.0)) /
                     double(n + 1);
        v += coeff * log_lambda_grad(kp, {FrameKind::t_frame, i}, q, w);
      }
      return v;
    }
  }
  throw GeometryError("log_lambda_grad: bad frame");
}

namespace {

// Rational building blocks of the integrand with an exact small-offset form
// for the factor centered at the current contour: on a circle around
// q = 1/kappa_c the difference q - 1/kappa_c is known exactly, and
// 1 - q kappa_c = -kappa_c (q - 1/kappa_c) would otherwise lose most of its
// digits for steep kappa ladders.
struct PoleCenteredEval {
  const KappaPoint& kp;
  const TorusWeights& w;
  int center;  // 1..n+1 when circling 1/kappa_center, else 0

  Cplx term(int m, Cplx q, Cplx offset) const {
    if (m == center) return -q / offset;
    Cplx km = kp.at(m);
    return q * km / (1.0 - q * km);
  }
  Cplx grad(const VectorField& X, Cplx q, Cplx offset) const {
    const int n = kp.n();
    switch (X.kind) {
      case FrameKind::kappa_scaled:
        return X.index == 0 ? w.alpha1
                            : w.alpha1 + w.sigma() * term(X.index, q, offset);
      case FrameKind::t_frame: {
        if (X.index == n + 1) return Cplx(1.0);
        Cplx v(0.0);
        for (int j = 1; j <= X.index; ++j)
          v += w.alpha1 + w.sigma() * term(j, q, offset);
        return v;
      }
      case FrameKind::x_frame: {
        if (X.index == n + 1) return Cplx(1.0);
        Cplx v(0.0);
        for (int i = 1; i <= n; ++i) {
          Cplx coeff = geom::omega_pow(n, -double(i * X.index)) *
                       (geom::omega_pow(n, X.index / 2.0) -
                        geom::omega_pow(n, -X.index / 2.0)) /
                       double(n + 1);
          v += coeff * grad({FrameKind::t_frame, i}, q, offset);
        }
        return v;
      }
    }
    throw GeometryError("PoleCenteredEval: bad frame");
  }
  Cplx qgrad(Cplx q, Cplx offset) const {
    Cplx v = double(kp.n() + 1) * w.alpha1;
    for (int l = 1; l <= kp.n() + 1; ++l) v += w.sigma() * term(l, q, offset);
    return v;
  }
};

}  // namespace

namespace {

void validate_field(const VectorField& X, int n) {
  if (X.kind == FrameKind::kappa_scaled) {
    if (X.index < 0 || X.index > n)
      throw GeometryError("residue_correlator: kappa index range");
  } else if (X.index < 1 || X.index > n + 1) {
    throw GeometryError("residue_correlator: frame index range");
  }
}

}  // namespace

ResidueBreakdown residue_correlator_full(const KappaPoint& kp,
                                         const VectorField& X,
                                         const VectorField& Y,
                                         const VectorField& Z,
                                         const TorusWeights& w) {
  kp.validate();
  const int n = kp.n();
  validate_field(X, n);
  validate_field(Y, n);
  validate_field(Z, n);
  const Cplx sig = w.sigma();

  // Pole set: q = 0, q = 1/kappa_l (l = 1..n+1, includes q = 1), q = inf.
  std::vector<Cplx> poles{Cplx(0.0)};
  for (int l = 1; l <= n + 1; ++l) poles.push_back(1.0 / kp.at(l));

  // Critical points (zeros of q dq log lambda) are poles of the integrand
  // that do not belong to supp(lambda); contours must exclude them.
  // (n+1) a1 prod(1-q k_l) + sig sum_l q k_l prod_{m != l}(1 - q k_m) = 0.
  std::vector<Cplx> cpoly(n + 3, Cplx(0.0));
  {
    std::vector<Cplx> prod{Cplx(1.0)};
    for (int l = 1; l <= n + 1; ++l) {
      std::vector<Cplx> nxt(prod.size() + 1, Cplx(0.0));
      for (size_t m = 0; m < prod.size(); ++m) {
        nxt[m] += prod[m];
        nxt[m + 1] -= prod[m] * kp.at(l);
      }
      prod.swap(nxt);
    }
    for (size_t m = 0; m < prod.size(); ++m)
      cpoly[m] += double(n + 1) * w.alpha1 * prod[m];
    for (int l = 1; l <= n + 1; ++l) {
      // q k_l * prod_{m != l} (1 - q k_m)
      std::vector<Cplx> pl{Cplx(1.0)};
      for (int m = 1; m <= n + 1; ++m) {
        if (m == l) continue;
        std::vector<Cplx> nxt(pl.size() + 1, Cplx(0.0));
        for (size_t t = 0; t < pl.size(); ++t) {
          nxt[t] += pl[t];
          nxt[t + 1] -= pl[t] * kp.at(m);
        }
        pl.swap(nxt);
      }
      for (size_t t = 0; t < pl.size(); ++t) cpoly[t + 1] += sig * kp.at(l) * pl[t];
    }
  }
  std::vector<Cplx> crit = num::poly_roots(cpoly);

  auto safe_radius = [&](Cplx center) {
    double r = 0.1;
    for (const Cplx& p : poles)
      if (std::abs(p - center) > 1e-14)
        r = std::min(r, 0.5 * std::abs(p - center));
    for (const Cplx& c : crit) r = std::min(r, 0.5 * std::abs(c - center));
    if (r < 1e-3)
      throw GeometryError("residue_correlator: pole separation below guard");
    return r;
  };

  ResidueBreakdown out{Cplx(0.0), Cplx(0.0)};
  for (int l = 0; l <= n + 1; ++l) {
    Cplx p = poles[l];
    PoleCenteredEval ev{kp, w, l};  // l = 0 is the pole at q = 0 (no factor)
    Cplx r = num::contour_residue(
        [&](Cplx q) {
          Cplx off = q - p;
          return ev.grad(X, q, off) * ev.grad(Y, q, off) * ev.grad(Z, q, off) /
                 (sig * sig * q * ev.qgrad(q, off));
        },
        p, safe_radius(p));
    out.total += r;
    if (l >= 1 && std::abs(kp.at(l) - 1.0) < 1e-12) out.at_q1 = r;
  }
  // residue at infinity via q = 1/u; the contour stays a factor 2 beyond the
  // outermost pole, so no centered factor is needed
  double umax = 0.1;
  for (const Cplx& p : poles)
    if (std::abs(p) > 1e-14) umax = std::min(umax, 0.5 / std::abs(p));
  for (const Cplx& c : crit)
    if (std::abs(c) > 1e-14) umax = std::min(umax, 0.5 / std::abs(c));
  PoleCenteredEval ev{kp, w, 0};
  out.total += num::contour_residue(
      [&](Cplx u) {
        Cplx q = 1.0 / u;
        Cplx r = ev.grad(X, q, q) * ev.grad(Y, q, q) * ev.grad(Z, q, q) /
                 (sig * sig * q * ev.qgrad(q, q));
        return -r / (u * u);
      },
      Cplx(0.0), umax);
  return out;
}

Cplx residue_correlator(const KappaPoint& kp, const VectorField& X,
                        const VectorField& Y, const VectorField& Z,
                        const TorusWeights& w) {
  return residue_correlator_full(kp, X, Y, Z, w).total;
}

KappaPoint kappa_from_t(const SmallQCPoint& t, Cplx delta_Y,
                        const TorusWeights& w) {
  if (t.side != Side::Y) throw GeometryError("kappa_from_t: wrong side");
  const int n = w.n;
  KappaPoint kp{CVec(n + 1)};
  kp.kappa[0] = std::exp((t.t[n] + delta_Y) / w.alpha1);
  for (int j = 1; j <= n; ++j) {
    Cplx s(0.0);
    for (int i = j; i <= n; ++i) s += t.t[i - 1];
    kp.kappa[j] = std::exp(s);
  }
  return kp;
}

KappaPoint kappa_from_x(const SmallQCPoint& x, Cplx delta_X,
                        const TorusWeights& w) {
  if (x.side != Side::X) throw GeometryError("kappa_from_x: wrong side");
  return kappa_from_t(geom::change_of_vars(x, w), delta_X, w);
}

double mirror_check(Side side, const SmallQCPoint& point, int i1, int i2,
                    int i3, const TorusWeights& w) {
  if (side == Side::Y) {
    KappaPoint kp = kappa_from_t(point, Cplx(0.0), w);
    Cplx lhs = residue_correlator(kp, {FrameKind::t_frame, i1},
                                  {FrameKind::t_frame, i2},
                                  {FrameKind::t_frame, i3}, w);
    return std::abs(lhs - geom::correlator_Y(i1, i2, i3, point, w));
  }
  KappaPoint kp = kappa_from_x(point, 2.0 * kPi * kI * w.alpha1, w);
  Cplx lhs = residue_correlator(kp, {FrameKind::x_frame, i1},
                                {FrameKind::x_frame, i2},
                                {FrameKind::x_frame, i3}, w);
  return std::abs(lhs - geom::correlator_X(i1, i2, i3, point, w));
}

}  // namespace ancrc::mirror
