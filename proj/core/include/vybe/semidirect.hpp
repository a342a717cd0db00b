#pragma once

#include "vybe/modules.hpp"
#include "vybe/voa.hpp"

namespace vybe {

/// Semidirect product U = V x| W' on V (+) W': Y restricted to V is Y_V, V acts
/// on W' by the contragredient action, W' acts on V by the skewsymmetry
/// formula Y_{W'V}^{W'}(f,z)b = e^{zL(-1)} Y_{W'}(b,-z) f, and W' is a
/// square-zero ideal. Requires W ordinary of conformal weight 0. Basis at
/// level n: the V_n basis followed by the W(n)* basis.
class SemidirectVOA final : public VertexAlgebra {
 public:
  SemidirectVOA(const VertexAlgebra& v, const ModuleLike& w, const ContragredientModule& wp);

  const SpaceId& space() const override { return space_; }
  int max_degree() const override { return v_->max_degree(); }
  int level_dim(int n) const override { return v_->level_dim(n) + wp_->level_dim(n); }
  GradedVector mode(const GradedVector& a, int m, const GradedVector& b) const override;
  const GradedVector& vacuum() const override { return vacuum_; }
  const GradedVector& virasoro_vector() const override { return omega_; }
  const Rational& central_charge() const override { return v_->central_charge(); }
  std::string basis_label(BasisRef ref) const override;

  const VertexAlgebra& v() const { return *v_; }
  const ModuleLike& w() const { return *w_; }
  const ContragredientModule& wp() const { return *wp_; }

  bool is_v_ref(BasisRef ref) const { return ref.index < v_->level_dim(ref.level); }
  /// Reinterpret a U basis ref as a V (resp. W') basis ref.
  BasisRef to_v(BasisRef ref) const { return ref; }
  BasisRef to_wp(BasisRef ref) const {
    return BasisRef{ref.level, ref.index - v_->level_dim(ref.level)};
  }
  BasisRef from_v(BasisRef ref) const { return ref; }
  BasisRef from_wp(BasisRef ref) const {
    return BasisRef{ref.level, ref.index + v_->level_dim(ref.level)};
  }

  GradedVector embed_v(const GradedVector& a) const;
  GradedVector embed_wp(const GradedVector& f) const;
  /// Component of a U vector in V (resp. W'), retagged to that carrier.
  GradedVector project_v(const GradedVector& x) const;
  GradedVector project_wp(const GradedVector& x) const;

 private:
  const VertexAlgebra* v_;
  const ModuleLike* w_;
  const ContragredientModule* wp_;
  SpaceId space_;
  GradedVector vacuum_;
  GradedVector omega_;
};

}  // namespace vybe
