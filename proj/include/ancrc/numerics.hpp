#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ancrc/types.hpp"

namespace ancrc::num {

// Principal-branch log-Gamma: exp(log_gamma(z)) == Gamma(z), imaginary part
// continuous on C minus the cut (-inf, 0]. Throws PoleError within 1e-12 of a
// non-positive integer.
Cplx log_gamma(Cplx z);
Cplx gamma(Cplx z);

// prod Gamma(nums) / prod Gamma(dens) via log-Gamma sums. A pole in a
// denominator argument yields an exact 0 (1/Gamma vanishes there); a pole in
// a numerator argument throws.
Cplx gamma_ratio(const std::vector<Cplx>& nums, const std::vector<Cplx>& dens);

// pi / sin(pi x); equals Gamma(x)Gamma(1-x). Throws PoleError at integers.
Cplx reflection_sin(Cplx x);

// (x)_m = Gamma(x+m)/Gamma(x) as a finite product (m >= 0).
Cplx pochhammer(Cplx x, int m);

// Principal z^a = exp(a Log z).
Cplx cpow(Cplx z, Cplx a);

// log(sin(pi z)) without overflow for large |Im z|; branch consistent with
// the reflection formula used in log_gamma.
Cplx log_sin_pi(Cplx z);

// Distance from z to the nearest non-positive integer.
double dist_to_nonpos_int(Cplx z);
// Distance from z to the nearest integer.
double dist_to_int(Cplx z);

// Integral over the segment [z0, z1] of f(z) dz. Endpoint singularities of
// power type with exponents > -1 are admissible (tanh-sinh nodes). The
// exponents are used only to validate integrability.
Cplx line_integral(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                   double exp0 = 0.0, double exp1 = 0.0,
                   const PrecisionPolicy& pp = default_policy());

// Same quadrature on [0,1] with the integrand given both u and 1-u, so that
// endpoint factors like (1-u)^(-b) can be formed without cancellation.
Cplx integrate01(const std::function<Cplx(double, double)>& f,
                 const PrecisionPolicy& pp = default_policy());

// (1/2 pi i) ∮ f dz on the circle |z - pole| = radius, trapezoid rule with
// node doubling. The disc must contain no singularity other than the center.
Cplx contour_residue(const std::function<Cplx(Cplx)>& f, Cplx pole,
                     double radius,
                     const PrecisionPolicy& pp = default_policy());

// All roots of sum_k c[k] z^k (Durand-Kerner). Leading zero coefficients are
// trimmed; returns deg roots.
std::vector<Cplx> poly_roots(const std::vector<Cplx>& coeffs);

}  // namespace ancrc::num
