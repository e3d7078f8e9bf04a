#pragma once

#include <vector>

#include "ancrc/numerics.hpp"
#include "ancrc/types.hpp"

namespace ancrc::hyp {

struct GaussParams {
  Cplx a, b, c;
};

struct LauricellaParams {
  Cplx a;
  std::vector<Cplx> b;  // length N
  Cplx c;
  int N() const { return static_cast<int>(b.size()); }
  bool equal_b() const;
};

// Sector membership for the large-|w| asymptotics: all |w_i| >= min_mod and
// the moduli strictly ordered (either direction); see fd_leading_asymptotics.
struct SectorPoint {
  std::vector<Cplx> w;
  bool sector_ok = false;
};
SectorPoint classify_sector(const std::vector<Cplx>& w, double min_mod = 20.0,
                            double max_ratio = 0.5);

// Gauss series, |z| <= 0.9 enforced.
Cplx gauss_2f1_series(const GaussParams& p, Cplx z,
                      const PrecisionPolicy& pp = default_policy());

// Analytic continuation to |z| >= 1.1 through the two-term connection
// formula on 1/z (zero winding around z = 1, principal branches of
// (-z)^{-a} and (-z)^{-b}).
Cplx gauss_2f1_continued(const GaussParams& p, Cplx z,
                         const PrecisionPolicy& pp = default_policy());

// Lauricella F_D^{(N)} series organized by total degree; max|w_i| <= 0.6.
Cplx lauricella_fd_series(const LauricellaParams& p,
                          const std::vector<Cplx>& w,
                          const PrecisionPolicy& pp = default_policy());

// One-dimensional Euler integral; Re a > 0, Re(c-a) > 0, w_i off [1, inf).
// Ground truth outside the polydisc.
Cplx lauricella_fd_euler(const LauricellaParams& p, const std::vector<Cplx>& w,
                         const PrecisionPolicy& pp = default_policy());

// Leading asymptotics of F_D for |w_i| large, moduli separated. Pairs
// (w_i, b_i) are sorted by ascending |w_i| first (F_D is symmetric under
// simultaneous permutation, which also covers the relabeled sector).
Cplx fd_leading_asymptotics(const LauricellaParams& p,
                            const std::vector<Cplx>& w);

// Lauricella polynomial reversal identity for a = -d; evaluates both finite
// sums and checks they agree to 1e-10 before returning the left side.
Cplx toscano_reduce(int d, const std::vector<Cplx>& b, Cplx c,
                    const std::vector<Cplx>& w);

// Appell F1 dispatching series / Euler by domain.
Cplx appell_f1(Cplx a, Cplx b1, Cplx b2, Cplx c, Cplx x, Cplx y,
               const PrecisionPolicy& pp = default_policy());

// Max residual of the Appell F1 system (b1 = b2 = b, c = 1+a-b) on one of
// the three twisted-period solutions, by 4th-order central differences of
// step h. solution: 1 or 2 (kappa_i^{-a} F1 at reciprocal arguments),
// 3 (F1 at (kappa_1, kappa_2)).
double appell_system_residual(Cplx a, Cplx b, std::pair<Cplx, Cplx> kappa,
                              double h, int solution,
                              const PrecisionPolicy& pp = default_policy());

}  // namespace ancrc::hyp
