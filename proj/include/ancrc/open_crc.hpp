#pragma once

#include <vector>

#include "ancrc/an_geometry.hpp"
#include "ancrc/linalg.hpp"
#include "ancrc/types.hpp"

namespace ancrc::ocrc {

using geom::Side;
using geom::TorusWeights;

// Local chart data for a disk: isotropy order iso = n_chart + 1, tangent
// representation weights m and torus weights w per axis, axis 1 carrying the
// Lagrangian.
struct DiskChart {
  int iso;  // order of the cyclic isotropy group on the chart
  int m[3];
  Cplx w[3];
  int n_e() const;
};

enum class Leg { ineffective, effective };

struct BoundaryCondition {
  Leg leg;
  bool negative_orientation = false;  // swaps axes 2 and 3

  DiskChart chart_X(const TorusWeights& w) const;
  DiskChart chart_Y(const TorusWeights& w, int i) const;
};

struct DiskValue {
  Cplx value;
  bool compatible;  // winding/twisting condition d/n_e - k m_1/iso in Z
};

// Disk function D_k^+(d) on a chart; k is the twisting (1..iso, iso =
// untwisted). Incompatible (d, k) yield value 0 with the flag cleared.
DiskValue disk_function(int d, int k, const DiskChart& chart);

// Diagonal disk endomorphism in the twisted-sector (X) or fixed-point (Y)
// basis. The effective-leg Y endomorphism is supported on P_{n+1} only.
CVec disk_endomorphism(const BoundaryCondition& bc, Side side, Cplx z,
                       const TorusWeights& w);

// Homogenized Gamma class components (twisted X entries carry the 1/z).
CVec gamma_class(Side side, Cplx z, const TorusWeights& w);

// Theta = z^{-mu} Gamma-hat cup D-hat, diagonal; Gamma factors cancel.
CVec theta(const BoundaryCondition& bc, Side side, Cplx z,
           const TorusWeights& w);

// Equivariant Chern characters of the grade-restriction window
// {O(lambda_k)}; the X matrix is the plain character table (the z-degree
// factor lives in the Gamma class), the Y matrix exponentiates the
// linearization weights with alpha -> alpha/z.
CMat chern_matrix(Side side, Cplx z, const TorusWeights& w);
CMat chern_matrix_X_inverse(Cplx z, const TorusWeights& w);

// O = D_Y(z) U(z) D_X(z)^{-1}.
CMat o_direct(const BoundaryCondition& bc, Cplx z, const TorusWeights& w);

// O at z = (a1+a2)/d factored as winding factor x constant matrix of roots
// of unity; the factorization is asserted to 1e-8.
struct OzIneffective {
  CMat oz;                    // entries -omega^{(1/2-i)k} (k <= n), -1 else
  CVec winding_factors;       // per fixed point row
  double factor_residual;     // max relative factorization error
  double column_sum_residual; // max |column sum| over k <= n
};
OzIneffective oz_ineffective(int d, const TorusWeights& w);

// O at z = -(n+1) a1/d; row n+1 is delta_{k, -d mod n+1}, other rows vanish.
struct OzEffective {
  CMat oz;
  double row_residual;  // deviation from the delta pattern
};
OzEffective oz_effective(int d, const TorusWeights& w);

// Iritani route: Theta_Y CH_Y CH_X^{-1} Theta_X^{-1}.
CMat o_via_iritani(const BoundaryCondition& bc, Cplx z, const TorusWeights& w);

}  // namespace ancrc::ocrc
