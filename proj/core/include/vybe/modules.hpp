#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>

#include "vybe/voa.hpp"

namespace vybe {

/// Admissible module over a VertexAlgebra, graded by levels W(0..N) with
/// a_m W(n) in W(wt a - m - 1 + n). Ordinary with conformal weight lambda:
/// L(0) acts on W(n) as lambda + n.
class ModuleLike {
 public:
  virtual ~ModuleLike() = default;
  virtual const VertexAlgebra& parent() const = 0;
  virtual const SpaceId& space() const = 0;
  virtual int max_degree() const = 0;
  virtual int level_dim(int n) const = 0;
  virtual Rational conformal_weight() const = 0;
  /// Y_W mode action a_m u, a in the parent algebra, u in this module.
  virtual GradedVector act(const GradedVector& a, int m, const GradedVector& u) const = 0;
  virtual std::string basis_label(BasisRef ref) const = 0;

  GradedVector basis_vector(BasisRef ref) const { return GradedVector::unit(space(), ref); }
  int total_dim() const {
    int d = 0;
    for (int n = 0; n <= max_degree(); ++n) d += level_dim(n);
    return d;
  }
};

/// L(n) u on the module.
GradedVector module_virasoro(const ModuleLike& W, int n, const GradedVector& u);

/// a'_m u on the module: sum_j (-1)^{wt a}/j! (L(1)^j a)_{2 wt a - m - j - 2} u,
/// with L(1) taken in the parent algebra. a must be homogeneous.
GradedVector module_primed_mode(const ModuleLike& W, const GradedVector& a, int m,
                                const GradedVector& u);

/// a'op_m u on the module: sum_{i,j} (-1)^{wt a + m + i + 1}/(i! j!)
/// (L(1)^j a)_{2 wt a - m - i - j - 2} L(1)^i u, with the inner L(1) taken on
/// the module. a must be homogeneous.
GradedVector module_primed_op_mode(const ModuleLike& W, const GradedVector& a, int m,
                                   const GradedVector& u);

/// u(m) a = sum_j (-1)^{m+j+1} L(-1)^j / j!  a_{m+j} u, the companion operator
/// Y_{WV}^W taken modewise; u in W, a in the parent, result in W.
GradedVector skew_mode_action(const ModuleLike& W, const GradedVector& u, int m,
                              const GradedVector& a);

/// V itself as a module over V (lambda = 0, Y_W = Y_V, same carrier tag).
class AdjointModule final : public ModuleLike {
 public:
  explicit AdjointModule(const VertexAlgebra& v) : v_(&v) {}
  const VertexAlgebra& parent() const override { return *v_; }
  const SpaceId& space() const override { return v_->space(); }
  int max_degree() const override { return v_->max_degree(); }
  int level_dim(int n) const override { return v_->level_dim(n); }
  Rational conformal_weight() const override { return Rational(0); }
  GradedVector act(const GradedVector& a, int m, const GradedVector& u) const override {
    return v_->mode(a, m, u);
  }
  std::string basis_label(BasisRef ref) const override { return v_->basis_label(ref); }

 private:
  const VertexAlgebra* v_;
};

/// Heisenberg Fock module M(1,lambda): top vector e^lambda with
/// alpha(0) e^lambda = lambda e^lambda, conformal weight lambda^2/2, level
/// dimensions the partition counts. Requires the rank-one parent in the
/// (alpha|alpha) = 1 normalization.
class FockModule final : public ModuleLike {
 public:
  FockModule(const CurrentVOA& v, Rational lambda);
  const VertexAlgebra& parent() const override { return *v_; }
  const SpaceId& space() const override { return engine_->space(); }
  int max_degree() const override { return engine_->max_degree(); }
  int level_dim(int n) const override { return engine_->level_dim(n); }
  Rational conformal_weight() const override { return lambda_ * lambda_ / Rational(2); }
  GradedVector act(const GradedVector& a, int m, const GradedVector& u) const override {
    return engine_->mode(v_->engine(), a, m, u);
  }
  std::string basis_label(BasisRef ref) const override { return engine_->label(ref); }

  const Rational& lambda() const { return lambda_; }
  GradedVector top() const { return engine_->top(); }
  const CurrentEngine& engine() const { return *engine_; }

 private:
  const CurrentVOA* v_;
  Rational lambda_;
  std::unique_ptr<CurrentEngine> engine_;
};

/// Contragredient module W' = direct sum of W(n)*: the graded dual with
/// <a_m f, u> = <f, a'_m u>. Basis at level n is the coordinate dual of W's
/// basis. Requires an integer conformal weight.
class ContragredientModule final : public ModuleLike {
 public:
  explicit ContragredientModule(const ModuleLike& w);
  const VertexAlgebra& parent() const override { return w_->parent(); }
  const SpaceId& space() const override { return space_; }
  int max_degree() const override { return w_->max_degree(); }
  int level_dim(int n) const override { return w_->level_dim(n); }
  Rational conformal_weight() const override { return w_->conformal_weight(); }
  GradedVector act(const GradedVector& a, int m, const GradedVector& f) const override;
  std::string basis_label(BasisRef ref) const override {
    return "(" + w_->basis_label(ref) + ")*";
  }

  const ModuleLike& source() const { return *w_; }
  /// <f, u> with f in this carrier and u in the source module.
  Rational pair(const GradedVector& f, const GradedVector& u) const {
    return dual_pairing(f, u);
  }

 private:
  const GradedVector& basis_act(BasisRef aref, int m, BasisRef fref) const;
  const ModuleLike* w_;
  SpaceId space_;
  mutable std::shared_mutex memo_mu_;
  mutable std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<GradedVector>> memo_;
};

/// Intertwining operator modes u[m] f in V', defined by
/// <u[m] f, a> = sum_{i>=0} (-1)^{wt u}/i! <f, (L(1)^i u)(2 wt u - m - i - 2) a>.
/// u in W, f in W', result in V' (the contragredient of the adjoint module).
GradedVector intertwiner_wwp_vp(const ModuleLike& W, const ContragredientModule& Wp,
                                const ContragredientModule& Vp, const GradedVector& u, int m,
                                const GradedVector& f);

/// The skew companion f{m} u = sum_j (-1)^{m+j+1} L(-1)^j/j! u[m+j] f in V',
/// with L(-1) acting on V'.
GradedVector intertwiner_wpw_vp(const ModuleLike& W, const ContragredientModule& Wp,
                                const ContragredientModule& Vp, const GradedVector& f, int m,
                                const GradedVector& u);

}  // namespace vybe
