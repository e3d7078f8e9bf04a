#pragma once

#include <functional>

#include "ancrc/linalg.hpp"
#include "ancrc/periods.hpp"
#include "ancrc/types.hpp"

namespace ancrc::mono {

using periods::PeriodParams;

enum class LoopCenter { LR1, CP, LR2 };  // kappa = 0, 1, infinity

struct LoopSpec {
  Cplx basepoint{0.45, 0.0};
  LoopCenter center = LoopCenter::LR1;
  double radius = 0.0;  // 0: circle through the basepoint
  int steps = 4096;
  void validate() const;
};

struct ReferenceMonodromy {
  CMat lr1, cp, lr2;  // 2x2, K-basis {O_Y, O_Y(1)}
};
ReferenceMonodromy reference_matrices_n1(const PeriodParams& p);

// Transports a fundamental pair of the rank-2 system for the twisted-period
// data (Gauss parameters a, b, c = 1+a-b) around the loop; the C_1(kappa)^{1/z}
// prefactor phase is applied analytically from the winding number about 0.
CMat numeric_monodromy_n1(const LoopSpec& loop, const PeriodParams& p);

// Transport along an explicit parametrized path (fixed-step RK4); used for
// loop-composition consistency checks.
CMat transport_path_n1(const std::function<Cplx(double)>& path,
                       const std::function<Cplx(double)>& dpath, int steps,
                       const PeriodParams& p);

// max(|tr difference|, |det difference|): conjugation invariants only.
double invariant_compare(const CMat& numeric, const CMat& reference);

}  // namespace ancrc::mono
