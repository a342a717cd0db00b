#pragma once

#include "vybe/modules.hpp"
#include "vybe/report.hpp"
#include "vybe/voa.hpp"

namespace vybe {

/// Mode window for the operator-identity sweeps. Identity instances whose
/// terms would leave the truncation window are skipped and recorded.
struct AxiomOptions {
  int mode_lo = -2;
  int mode_hi = 2;
  int virasoro_lo = -3;
  int virasoro_hi = 3;
};

/// Verifies, exactly and within the window: truncation, vacuum and creation
/// properties, the commutator identity [a_p, b_q] = sum_i C(p,i) (a_i b)_{p+q-i},
/// the iterate identity, skewsymmetry Y(a,z)b = e^{zL(-1)} Y(b,-z) a, the
/// Virasoro bracket with the algebra's central charge, the L(-1)-derivative
/// property, and the L(0) grading. Failures are report entries with witnesses.
CheckReport verify_voa_axioms(const VertexAlgebra& U, const AxiomOptions& opt = {});

/// Module counterpart: vacuum, truncation, grading transport, commutator and
/// iterate identities acting on module vectors, L(0) = conformal weight + n,
/// L(-1)-derivative, Virasoro bracket.
CheckReport verify_module_axioms(const ModuleLike& W, const AxiomOptions& opt = {});

}  // namespace vybe
