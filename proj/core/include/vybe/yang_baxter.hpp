#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "vybe/modules.hpp"
#include "vybe/report.hpp"
#include "vybe/semidirect.hpp"
#include "vybe/tensor.hpp"
#include "vybe/voa.hpp"

namespace vybe {

/// The three triple products of a skewsymmetric diagonal tensor at bidegree
/// (s, t), index-normalized so that all three live in
/// U(s+t-m-1) (x) U(s) (x) U(t); the residual is p12_13 - p23_12 + p13_23.
struct TripleProducts {
  TripleTensorComponent p12_13;  // r^s_12 ._m r^t_13
  TripleTensorComponent p23_12;  // r^t_23 .'_m r^{t+s-m-1}_12
  TripleTensorComponent p13_23;  // r^{t+s-m-1}_13 .'op_m r^s_23
};
TripleProducts triple_products(const VertexAlgebra& U, const DiagonalTensor& r, int m, int s,
                               int t);

/// All residual components alpha_{s,t} computable in the window:
/// s,t <= N, s+t >= m+1, s+t-m-1 <= N. Pairs that would need a level above N
/// are recorded as gaps, never computed truncated.
struct VoybeResidual {
  std::map<std::pair<int, int>, TripleTensorComponent> alpha;
  std::vector<std::pair<int, int>> coverage;
  std::vector<std::pair<int, int>> gaps;
};
VoybeResidual voybe_residual(const VertexAlgebra& U, const DiagonalTensor& r, int m);

/// Pass iff every covered alpha_{s,t} vanishes, for each m in m_set. Rejects
/// non-skewsymmetric input. The report records the full coverage, so a pass is
/// explicitly window-relative.
CheckReport check_voybe(const VertexAlgebra& U, const DiagonalTensor& r,
                        const std::vector<int>& m_set);

/// Phi: r |-> T_r with T_r(f) = sum_i a_i <f, b_i> - b_i <f, a_i>, a
/// level-preserving map from the graded dual into U. Requires skewsymmetric r.
LevelwiseMatrix tensor_to_map(const VertexAlgebra& U, const DiagonalTensor& r);

/// Psi: T |-> 1/2 sum_t sum_i (T(v_i*) (x) v_i - v_i (x) T(v_i*)). Requires a
/// skewsymmetric level-preserving T from the graded dual into U; mutually
/// inverse with tensor_to_map on such data.
DiagonalTensor map_to_tensor(const VertexAlgebra& U, const LevelwiseMatrix& T);

/// Is <T(f), g> = -<f, T(g)> on all dual-basis pairs (blockwise skewness)?
bool is_skew_lp_map(const LevelwiseMatrix& T);

/// Verifies T(u)_m T(v) = T(T(u)_m v) + T(u(m) T(v)) over all basis pairs of W
/// whose three terms fit the window; T may carry any degree shift. Witnesses
/// name the pair and both side values.
CheckReport check_relative_rbo(const VertexAlgebra& V, const ModuleLike& W,
                               const LevelwiseMatrix& T, int m);

/// Strong check: the relative identity plus the two coadjoint compatibilities
///   Res_z z^m ( Y_{W'}(Tu,z) T*f - T*(Y_{V'}(Tu,z) f) + T*(Y[u,z] T*f) ) = 0
///   Res_z z^m ( Y_{W'V}(T*f,z) Tu - T*(Y_{V'V}(f,z) Tu) + T*(Y[T*f,z] u) ) = 0
/// for all basis u in W, f in V' in the window. Requires lambda = 0 and a
/// level-preserving T.
struct StrongRboOutcome {
  CheckReport report;
  bool relative_ok = true;
  bool compat1_ok = true;
  bool compat2_ok = true;
};
StrongRboOutcome check_strong_rbo_detail(const VertexAlgebra& V, const ModuleLike& W,
                                         const LevelwiseMatrix& T, int m);
CheckReport check_strong_rbo(const VertexAlgebra& V, const ModuleLike& W,
                             const LevelwiseMatrix& T, int m);

/// The coadjoint map T*: V' -> W', <T*(f), u> = <f, T(u)> (blockwise transpose).
LevelwiseMatrix coadjoint_map(const VertexAlgebra& V, const ModuleLike& W,
                              const LevelwiseMatrix& T);

/// r_T = sum_t sum_i T(v_i^t) (x) (v_i^t)* - (v_i^t)* (x) T(v_i^t) inside the
/// semidirect product carrier. Requires degree shift 0.
DiagonalTensor build_r_from_T(const SemidirectVOA& U, const LevelwiseMatrix& T);

/// Transported endomorphism T~_r(a) = sum_i a_i (a|b_i) - b_i (a|a_i), i.e.
/// T_r composed with the form identification of U with its graded dual. The
/// form is verified symmetric, nondegenerate and window-invariant.
LevelwiseMatrix form_transport(const CurrentVOA& U, const DiagonalTensor& r,
                               const InvariantForm& form);

/// The transport equivalence: r solves the m-VOYBE on its coverage iff the
/// transported map passes the m-RBO check (adjoint case); both runs are
/// reported and the agreement asserted as its own component.
CheckReport check_voybe_rbo_transport(const CurrentVOA& U, const DiagonalTensor& r,
                                      const InvariantForm& form, int m);

/// Componentwise tensor <-> operator correspondence: for every dual-basis pair
/// (f, g) in the window,
///   T_r(f)_m T_r(g) - T_r(T_r(f)_m g) - T_r(f(m) T_r(g))
/// equals the residual alpha_{s,t} evaluated at (g (x) f), exactly.
CheckReport check_tensor_operator_correspondence(const VertexAlgebra& U,
                                                 const DiagonalTensor& r, int m);

/// Semidirect residual block structure: a residual entry sits in block A
/// (V, W'*, W'*), B (W'*, V, W'*), C (W'*, W'*, V), or outside all three.
struct ResidualBlocks {
  bool a_zero = true;
  bool b_zero = true;
  bool c_zero = true;
  bool other_zero = true;
};
ResidualBlocks classify_residual_blocks(const SemidirectVOA& U, const VoybeResidual& res);

}  // namespace vybe
