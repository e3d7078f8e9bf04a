#pragma once

#include <vector>

#include "ancrc/linalg.hpp"
#include "ancrc/types.hpp"

namespace ancrc::geom {

// Calabi-Yau torus parameters for the A_n threefold; the third fiber weight
// is alpha1 + alpha2. Indices i run 1..n+1 throughout.
struct TorusWeights {
  int n;
  Cplx alpha1, alpha2;

  Cplx w_minus(int i) const {
    return double(i - 1) * alpha1 + double(-n + i - 2) * alpha2;
  }
  Cplx w_plus(int i) const {
    return double(-i) * alpha1 + double(n + 1 - i) * alpha2;
  }
  Cplx sigma() const { return alpha1 + alpha2; }
  void validate() const;
};

enum class BasisTag { X_twisted, Y_fixed, Y_gamma };

struct CohVector {
  BasisTag basis;
  CVec coeffs;  // length n+1
};

// Point on the small quantum cohomology phase space; for side Y the t are
// divisor coordinates, for side X the x are twisted-sector coordinates.
enum class Side { X, Y };
struct SmallQCPoint {
  Side side;
  CVec t;  // length n+1
};

// omega^x with omega = exp(2 pi i/(n+1)), defined through the exponential so
// half-integer powers are unambiguous.
Cplx omega_pow(int n, double x);

Cplx pairing_X(const CohVector& u, const CohVector& v, const TorusWeights& w);
Cplx pairing_Y(const CohVector& u, const CohVector& v, const TorusWeights& w);

// Pairing Gram matrices in the twisted-sector / fixed-point bases, and their
// closed-form inverses (used for index raising; no numeric inversion).
CMat pairing_X_matrix(const TorusWeights& w);
CMat pairing_X_inverse(const TorusWeights& w);
CMat pairing_Y_matrix(const TorusWeights& w);
CMat pairing_Y_inverse(const TorusWeights& w);

// Pairing of the divisor basis {gamma_i}: eta(gamma_i, gamma_j) is the
// triple intersection against the fundamental class. Its twisted block is
// the inverse A_n Cartan matrix up to scale, so the inverse is closed form.
CMat pairing_gamma_matrix(const TorusWeights& w);
CMat pairing_gamma_inverse(const TorusWeights& w);

// gamma_j in the fixed point basis (canonical linearization).
CohVector atiyah_bott(int j, const TorusWeights& w);

// Equivariant triple intersection <gamma_i gamma_j gamma_k>, closed form.
Cplx triple_classical(int i, int j, int k, const TorusWeights& w);

// Small quantum three-point correlator on Y at t (divisor coordinates).
Cplx correlator_Y(int i, int j, int k, const SmallQCPoint& p,
                  const TorusWeights& w);

// Affine-linear identification of quantum parameters, X -> Y.
SmallQCPoint change_of_vars(const SmallQCPoint& x, const TorusWeights& w);

// Matrix of the classical linear isomorphism 1_k -> gamma basis.
CMat u0_map(const TorusWeights& w);
// Same map landing in the fixed point basis (AB composed with u0).
CMat u0_map_fixed_basis(const TorusWeights& w);

// Three-point correlator on X pulled back through change_of_vars and u0.
Cplx correlator_X(int k1, int k2, int k3, const SmallQCPoint& x,
                  const TorusWeights& w);

// Quantum product structure constants as matrices C_a with
// (C_a)_{c b} = sum_d eta^{cd} <<e_a e_b e_d>>, for WDVV checks.
std::vector<CMat> quantum_product_Y(const SmallQCPoint& t,
                                    const TorusWeights& w);
std::vector<CMat> quantum_product_X(const SmallQCPoint& x,
                                    const TorusWeights& w);
double wdvv_residual(const std::vector<CMat>& prod);

}  // namespace ancrc::geom
