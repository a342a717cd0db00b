#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vybe/modules.hpp"
#include "vybe/report.hpp"
#include "vybe/semidirect.hpp"
#include "vybe/tensor.hpp"
#include "vybe/voa.hpp"
#include "vybe/yang_baxter.hpp"

namespace vybe {

/// The Lie algebra on the first level of a VOA: [a, b] = a_0 b. Antisymmetry
/// and the Jacobi identity are machine-checked on extraction.
struct LieLevelOne {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> brackets;  // [x_i, x_j] coordinates
  std::vector<std::string> labels;
  bool quasi_primary = false;  // L(1) kills the whole level
  SpaceId origin;

  std::vector<Rational> bracket_vec(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) const;
  /// ad(x_a) as a matrix.
  RationalMatrix ad(int a) const;
};
LieLevelOne level1_lie(const VertexAlgebra& U);

/// W(1) as a module over the level-one Lie algebra via rho(a) u = a_0 u, with
/// the dual action rho*(a) = -rho(a)^T on W(1)*. The extraction verifies
/// rho([a,b]) = [rho(a), rho(b)] and the duality <rho*(a) u*, v> = -<u*, rho(a) v>
/// against the contragredient zero-mode.
struct LieModuleOne {
  int dim_g = 0;
  int dim_w = 0;
  std::vector<RationalMatrix> rho;       // per Lie basis element
  std::vector<RationalMatrix> rho_star;  // on W(1)*
  std::vector<std::string> labels_w;
  bool quasi_primary = false;  // L(1) W(1) = 0
};
LieModuleOne level1_module(const VertexAlgebra& V, const ModuleLike& W,
                           const ContragredientModule& Wp);

/// Skewsymmetric-or-not two-tensor over a level-one Lie algebra.
struct LieTensor {
  SpaceId carrier;
  int dim = 0;
  std::map<std::pair<int, int>, Rational> entries;

  void add(int i, int j, const Rational& c);
  Rational coeff(int i, int j) const;
  bool is_zero() const { return entries.empty(); }
  bool is_skewsymmetric() const;
  friend bool operator==(const LieTensor& a, const LieTensor& b) {
    return a.dim == b.dim && a.entries == b.entries;
  }
};

/// Sparse three-slot tensor over the same space.
struct LieTriple {
  std::map<std::array<int, 3>, Rational> entries;
  void add(std::array<int, 3> idx, const Rational& c);
  bool is_zero() const { return entries.empty(); }
  LieTriple& operator+=(const LieTriple& o);
  friend bool operator==(const LieTriple& a, const LieTriple& b) {
    return a.entries == b.entries;
  }
};

/// The three brackets [R12,R13], [R12,R23], [R13,R23]; R solves the classical
/// Yang-Baxter equation iff their sum vanishes.
struct CybeBrackets {
  LieTriple b12_13, b12_23, b13_23;
  LieTriple total() const;
};
CybeBrackets cybe_brackets(const LieLevelOne& g, const LieTensor& R);

/// Relative Rota-Baxter operator (O-operator) check for a Lie algebra: T maps
/// the module (action pi) into g and must satisfy
/// [T(u), T(v)] = T(pi(T(u)) v) - T(pi(T(v)) u) on all basis pairs.
CheckReport check_lie_o_operator(const LieLevelOne& g, const std::vector<RationalMatrix>& pi,
                                 const RationalMatrix& T);

/// Level-one slice R := r^1 of a diagonal tensor, in the Lie carrier of U.
LieTensor reduce_tensor(const VertexAlgebra& U, const DiagonalTensor& r);
/// Level-one block of a level-preserving map (zero matrix when absent).
RationalMatrix reduce_map(const VertexAlgebra& U, const LevelwiseMatrix& T);
/// Level-one contraction map of a Lie tensor: T_R(f) = sum_i R[i][k] x_i.
RationalMatrix lie_tensor_to_map(const LieTensor& R);

/// Inputs for the level-one reduction checks. U carries r (plain VOA or
/// semidirect product); for the semidirect path, sd/W/Wp give the module data
/// and T optionally supplies the map whose skewsymmetrization r should be.
struct ReductionContext {
  const VertexAlgebra* U = nullptr;
  const DiagonalTensor* r = nullptr;
  const LevelwiseMatrix* T = nullptr;
  const SemidirectVOA* sd = nullptr;
  const ModuleLike* W = nullptr;
  const ContragredientModule* Wp = nullptr;
};

/// Verifies, at m = 0: (i) a windowed Yang-Baxter solution reduces to a
/// classical Yang-Baxter solution on level one; (ii) a relative-RBO verdict
/// for Phi(r) reduces to the Lie O-operator verdict of the level-one block;
/// (iii) the nine zero-mode sign identities on level-one elements;
/// (iv) the (1,1,1)-projections of the signed triple products equal minus the
/// corresponding classical brackets. Requires the level-one spaces to be
/// spanned by quasi-primary vectors.
CheckReport verify_reduction(const ReductionContext& ctx, int m = 0);

}  // namespace vybe
