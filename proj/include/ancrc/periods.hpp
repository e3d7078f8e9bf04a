#pragma once

#include <functional>

#include "ancrc/an_geometry.hpp"
#include "ancrc/hurwitz_mirror.hpp"
#include "ancrc/linalg.hpp"
#include "ancrc/types.hpp"

namespace ancrc::periods {

using geom::TorusWeights;
using mirror::KappaPoint;

struct PeriodParams {
  TorusWeights w;
  Cplx z;
  Cplx a() const { return double(w.n + 1) * w.alpha1 / z; }
  Cplx b() const { return w.sigma() / z; }
  // Throws ResonanceError when any Gamma argument used by the closed forms
  // sits within 0.02 of a non-positive integer.
  void require_generic() const;
};

// Matrix-valued function of the loop variable, tagged by its frame map.
struct GiventalMatrix {
  std::function<CMat(Cplx)> entries;
  const char* domain_tag;
  CMat at(Cplx z) const { return entries(z); }
};

// Twisted period by direct line quadrature (Re a > 0, Re b < 1); i = 1..n+1.
Cplx twisted_period_euler(int i, const KappaPoint& k, const PeriodParams& p);

// Same period through the Lauricella closed form, dispatching series/Euler.
Cplx twisted_period_lauricella(int i, const KappaPoint& k,
                               const PeriodParams& p);

// Values and x-derivatives of the normalized periods Pi_j / C_n^{1/z} at the
// orbifold point. values: j = 1..n+1; derivs: (j, k) with k = 1..n.
struct OrbifoldPointData {
  CVec values;
  CMat x_derivatives;
};
OrbifoldPointData orbifold_point_values(const PeriodParams& p);

// Period -> localized-J decomposition matrix and its closed-form inverse.
CMat matrix_A_inv(const PeriodParams& p);
// Closed form for the inverse; if the reference entries fail A*A^{-1} = I at
// 1e-9 the numeric inverse is substituted and *used_fallback is set.
CMat matrix_A(const PeriodParams& p, bool* used_fallback = nullptr);

// Orbifold-point decomposition Pi = B J^X, B = D1 V D2.
CMat matrix_B(const PeriodParams& p);

// The symplectomorphism in closed form (columns: twisted sectors of X, rows:
// fixed points of Y).
CMat u_closed_form(const PeriodParams& p);
GiventalMatrix u_closed_form_fn(const TorusWeights& w);

struct UFromAB {
  CMat ab;
  Cplx scalar;        // fitted s with A B = s U
  int omega_sign;     // +1 if s ~ omega^a, -1 if s ~ omega^{-a}
  double scalar_err;  // |s/omega^{sign a} - 1|
  double max_rel_err; // entrywise relative deviation of AB from s U
};
UFromAB u_from_AB(const PeriodParams& p);

// max over basis pairs of |eta_Y(U(-z)u, U(z)v) - eta_X(u, v)|.
double symplectic_residual(const PeriodParams& p);
double symplectic_residual_of(const TorusWeights& w, Cplx z,
                              const std::function<CMat(Cplx)>& U);

}  // namespace ancrc::periods
