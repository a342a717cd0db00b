#include "vybe/semidirect.hpp"

#include <stdexcept>

namespace vybe {

SemidirectVOA::SemidirectVOA(const VertexAlgebra& v, const ModuleLike& w,
                             const ContragredientModule& wp)
    : v_(&v), w_(&w), wp_(&wp) {
  if (&w.parent() != &v && w.parent().space() != v.space())
    throw std::invalid_argument("SemidirectVOA: module is not over the given algebra");
  if (&wp.source() != &w && wp.source().space() != w.space())
    throw std::invalid_argument("SemidirectVOA: contragredient does not match the module");
  if (!w.conformal_weight().is_zero())
    throw std::invalid_argument("SemidirectVOA: module conformal weight must be 0, got " +
                                w.conformal_weight().str());
  space_ = "U[" + v.space() + "x|" + wp.space() + "]";
  vacuum_ = embed_v(v.vacuum());
  omega_ = embed_v(v.virasoro_vector());
}

std::string SemidirectVOA::basis_label(BasisRef ref) const {
  if (is_v_ref(ref)) return v_->basis_label(to_v(ref));
  return wp_->basis_label(to_wp(ref));
}

GradedVector SemidirectVOA::embed_v(const GradedVector& a) const {
  if (a.space() != v_->space())
    throw std::invalid_argument("embed_v: carrier mismatch '" + a.space() + "'");
  GradedVector out(space_);
  for (auto& [ref, c] : a.terms()) out.add(from_v(ref), c);
  return out;
}

GradedVector SemidirectVOA::embed_wp(const GradedVector& f) const {
  if (f.space() != wp_->space())
    throw std::invalid_argument("embed_wp: carrier mismatch '" + f.space() + "'");
  GradedVector out(space_);
  for (auto& [ref, c] : f.terms()) out.add(from_wp(ref), c);
  return out;
}

GradedVector SemidirectVOA::project_v(const GradedVector& x) const {
  if (x.space() != space_)
    throw std::invalid_argument("project_v: carrier mismatch '" + x.space() + "'");
  GradedVector out(v_->space());
  for (auto& [ref, c] : x.terms())
    if (is_v_ref(ref)) out.add(to_v(ref), c);
  return out;
}

GradedVector SemidirectVOA::project_wp(const GradedVector& x) const {
  if (x.space() != space_)
    throw std::invalid_argument("project_wp: carrier mismatch '" + x.space() + "'");
  GradedVector out(wp_->space());
  for (auto& [ref, c] : x.terms())
    if (!is_v_ref(ref)) out.add(to_wp(ref), c);
  return out;
}

GradedVector SemidirectVOA::mode(const GradedVector& a, int m, const GradedVector& b) const {
  if (a.space() != space_ || b.space() != space_)
    throw std::invalid_argument("SemidirectVOA::mode: carrier mismatch");
  GradedVector av = project_v(a), af = project_wp(a);
  GradedVector bv = project_v(b), bf = project_wp(b);
  GradedVector out(space_);
  if (!av.is_zero() && !bv.is_zero()) out += embed_v(v_->mode(av, m, bv));
  if (!av.is_zero() && !bf.is_zero()) out += embed_wp(wp_->act(av, m, bf));
  if (!af.is_zero() && !bv.is_zero()) out += embed_wp(skew_mode_action(*wp_, af, m, bv));
  // W' x W' is a square-zero ideal: no contribution.
  return out;
}

}  // namespace vybe
