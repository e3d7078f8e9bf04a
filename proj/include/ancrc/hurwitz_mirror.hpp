#pragma once

#include <vector>

#include "ancrc/an_geometry.hpp"
#include "ancrc/types.hpp"

namespace ancrc::mirror {

using geom::Side;
using geom::SmallQCPoint;
using geom::TorusWeights;

// Point (kappa_0, ..., kappa_n) on C x M_A. kappa_{n+1} == 1 is implicit and
// represents the (1-q) factor of the superpotential, so pole sums over
// l = 1..n+1 are uniform.
struct KappaPoint {
  CVec kappa;  // kappa[0..n]
  int n() const { return static_cast<int>(kappa.size()) - 1; }
  Cplx at(int j) const {  // j in 0..n+1
    return j <= n() ? kappa[j] : Cplx(1.0);
  }
  void validate() const;  // discriminant guard
};

// Vector fields on the family: kappa_j d/d kappa_j (index 0..n), the Y-divisor
// frame d/dt_i, and the X frame d/dx_k through the affine identification.
enum class FrameKind { kappa_scaled, t_frame, x_frame };
struct VectorField {
  FrameKind kind;
  int index;  // kappa_scaled: 0..n; t/x frame: 1..n+1
};

// X(log lambda) at the fiber coordinate q for the given field.
Cplx log_lambda_grad(const KappaPoint& k, const VectorField& X, Cplx q,
                     const TorusWeights& w);
// q d/dq log lambda.
Cplx log_lambda_qgrad(const KappaPoint& k, Cplx q, const TorusWeights& w);

struct ResidueBreakdown {
  Cplx total;
  Cplx at_q1;  // contribution of the pole q = 1
};

// Three-point Landau-Ginzburg correlator: sum over supp(lambda) of the
// residues of X(log l) Y(log l) Z(log l) / (q dq log l) * dq/((a1+a2)^2 q).
ResidueBreakdown residue_correlator_full(const KappaPoint& k,
                                         const VectorField& X,
                                         const VectorField& Y,
                                         const VectorField& Z,
                                         const TorusWeights& w);
Cplx residue_correlator(const KappaPoint& k, const VectorField& X,
                        const VectorField& Y, const VectorField& Z,
                        const TorusWeights& w);

// Mirror-map charts: Y divisor coordinates and X orbifold coordinates (the
// latter through change_of_vars; see ledger for the convention).
KappaPoint kappa_from_t(const SmallQCPoint& t, Cplx delta_Y,
                        const TorusWeights& w);
KappaPoint kappa_from_x(const SmallQCPoint& x, Cplx delta_X,
                        const TorusWeights& w);

// |residue correlator - quantum cohomology correlator| for the given frame
// triple at the given point on the chosen side.
double mirror_check(Side side, const SmallQCPoint& point, int i1, int i2,
                    int i3, const TorusWeights& w);

}  // namespace ancrc::mirror
