#include "vybe/modules.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "vybe/errors.hpp"

namespace vybe {

GradedVector module_virasoro(const ModuleLike& W, int n, const GradedVector& u) {
  return W.act(W.parent().virasoro_vector(), n + 1, u);
}

GradedVector module_primed_mode(const ModuleLike& W, const GradedVector& a, int m,
                                const GradedVector& u) {
  GradedVector out(W.space());
  if (a.is_zero() || u.is_zero()) return out;
  if (!a.is_homogeneous())
    throw std::invalid_argument("module_primed_mode: non-homogeneous left argument");
  int wa = a.level();
  GradedVector la = a;
  for (int j = 0; !la.is_zero(); ++j) {
    Rational c = Rational(wa % 2 ? -1 : 1) / factorial(j);
    out += c * W.act(la, 2 * wa - m - j - 2, u);
    la = virasoro_mode(W.parent(), 1, la);
  }
  return out;
}

GradedVector module_primed_op_mode(const ModuleLike& W, const GradedVector& a, int m,
                                   const GradedVector& u) {
  GradedVector out(W.space());
  if (a.is_zero() || u.is_zero()) return out;
  if (!a.is_homogeneous())
    throw std::invalid_argument("module_primed_op_mode: non-homogeneous left argument");
  int wa = a.level();
  GradedVector lu = u;  // L(1)^i u on the module
  for (int i = 0; !lu.is_zero(); ++i) {
    GradedVector la = a;  // L(1)^j a in the parent
    for (int j = 0; !la.is_zero(); ++j) {
      Rational c = Rational((wa + m + i + 1) % 2 ? -1 : 1);
      c /= factorial(i) * factorial(j);
      out += c * W.act(la, 2 * wa - m - i - j - 2, lu);
      la = virasoro_mode(W.parent(), 1, la);
    }
    lu = module_virasoro(W, 1, lu);
  }
  return out;
}

GradedVector skew_mode_action(const ModuleLike& W, const GradedVector& u, int m,
                              const GradedVector& a) {
  GradedVector out(W.space());
  if (u.is_zero() || a.is_zero()) return out;
  int maxj = -1;
  for (auto& [uref, uc] : u.terms())
    for (auto& [aref, ac] : a.terms())
      maxj = std::max(maxj, aref.level + uref.level - m - 1);
  for (int j = 0; j <= maxj; ++j) {
    GradedVector t = W.act(a, m + j, u);
    if (t.is_zero()) continue;
    for (int p = 0; p < j; ++p) t = module_virasoro(W, -1, t);
    Rational c = Rational((m + j + 1) % 2 ? -1 : 1) / factorial(j);
    out += c * t;
  }
  return out;
}

FockModule::FockModule(const CurrentVOA& v, Rational lambda)
    : v_(&v), lambda_(std::move(lambda)) {
  if (!v.is_heisenberg_rank1())
    throw std::invalid_argument(
        "FockModule: parent must be the rank-one Heisenberg with k (alpha|alpha) = 1");
  SpaceId tag = "W[fock:" + lambda_.str() + "]@" + v.space();
  engine_ = std::make_unique<CurrentEngine>(&v.lie(), v.level(), v.max_degree(),
                                            std::vector<Rational>{lambda_}, tag,
                                            "|" + lambda_.str() + ">");
}

ContragredientModule::ContragredientModule(const ModuleLike& w) : w_(&w) {
  if (!w.conformal_weight().is_integer())
    throw std::invalid_argument(
        "ContragredientModule: conformal weight must be an integer, got " +
        w.conformal_weight().str());
  space_ = dual_space_of(w.space());
}

const GradedVector& ContragredientModule::basis_act(BasisRef aref, int m,
                                                    BasisRef fref) const {
  auto key = std::make_tuple(aref.level, aref.index, m, fref.level, fref.index);
  {
    std::shared_lock<std::shared_mutex> lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  // <a_m f, u> = <f, a'_m u>, so a_m f picks up, from each source basis vector
  // u at level fref.level + wt a - m - 1, the coefficient of f inside a'_m u.
  GradedVector out(space_);
  int lu = fref.level + aref.level - m - 1;
  if (lu >= 0 && lu <= max_degree()) {
    GradedVector a = GradedVector::unit(w_->parent().space(), aref);
    for (int j = 0; j < w_->level_dim(lu); ++j) {
      GradedVector w = module_primed_mode(*w_, a, m, w_->basis_vector(BasisRef{lu, j}));
      Rational c = w.coeff(fref);
      if (!c.is_zero()) out.add(BasisRef{lu, j}, c);
    }
  }
  std::unique_lock<std::shared_mutex> lock(memo_mu_);
  auto [it, inserted] = memo_.emplace(key, nullptr);
  if (inserted) it->second = std::make_unique<GradedVector>(std::move(out));
  return *it->second;
}

GradedVector ContragredientModule::act(const GradedVector& a, int m,
                                       const GradedVector& f) const {
  if (a.space() != w_->parent().space())
    throw std::invalid_argument("ContragredientModule::act: left argument tagged '" +
                                a.space() + "', expected '" + w_->parent().space() + "'");
  if (f.space() != space_)
    throw std::invalid_argument("ContragredientModule::act: right argument tagged '" +
                                f.space() + "', expected '" + space_ + "'");
  for (auto& [aref, ac] : a.terms())
    for (auto& [fref, fc] : f.terms()) {
      int target = fref.level + aref.level - m - 1;
      if (target > max_degree()) throw OutOfWindowError(target, max_degree());
    }
  GradedVector out(space_);
  for (auto& [aref, ac] : a.terms())
    for (auto& [fref, fc] : f.terms()) out += (ac * fc) * basis_act(aref, m, fref);
  return out;
}

GradedVector intertwiner_wwp_vp(const ModuleLike& W, const ContragredientModule& Wp,
                                const ContragredientModule& Vp, const GradedVector& u, int m,
                                const GradedVector& f) {
  if (u.space() != W.space())
    throw std::invalid_argument("intertwiner: u tagged '" + u.space() + "', expected '" +
                                W.space() + "'");
  if (f.space() != Wp.space())
    throw std::invalid_argument("intertwiner: f tagged '" + f.space() + "', expected '" +
                                Wp.space() + "'");
  GradedVector out(Vp.space());
  if (u.is_zero() || f.is_zero()) return out;
  if (!u.is_homogeneous())
    throw std::invalid_argument("intertwiner_wwp_vp: non-homogeneous u");
  const VertexAlgebra& V = W.parent();
  int wu = u.level();
  for (auto& [fref, fc] : f.terms()) {
    int la = fref.level + wu - m - 1;  // <u[m] f, a> pairs against V_{la}
    if (la < 0) continue;
    if (la > V.max_degree()) throw OutOfWindowError(la, V.max_degree());
    for (int ia = 0; ia < V.level_dim(la); ++ia) {
      GradedVector a = V.basis_vector(BasisRef{la, ia});
      Rational acc(0);
      GradedVector lu = u;  // L(1)^i u
      for (int i = 0; !lu.is_zero(); ++i) {
        GradedVector w = skew_mode_action(W, lu, 2 * wu - m - i - 2, a);
        if (!w.is_zero()) {
          Rational c = Rational(wu % 2 ? -1 : 1) / factorial(i);
          acc += c * fc * w.coeff(fref);
        }
        lu = module_virasoro(W, 1, lu);
      }
      if (!acc.is_zero()) out.add(BasisRef{la, ia}, acc);
    }
  }
  return out;
}

GradedVector intertwiner_wpw_vp(const ModuleLike& W, const ContragredientModule& Wp,
                                const ContragredientModule& Vp, const GradedVector& f, int m,
                                const GradedVector& u) {
  GradedVector out(Vp.space());
  if (u.is_zero() || f.is_zero()) return out;
  int maxj = -1;
  for (auto& [uref, uc] : u.terms())
    for (auto& [fref, fc] : f.terms())
      maxj = std::max(maxj, uref.level + fref.level - m - 1);
  for (int j = 0; j <= maxj; ++j) {
    GradedVector t(Vp.space());
    for (auto& [uref, uc] : u.terms()) {
      GradedVector uu = uc * W.basis_vector(uref);
      t += intertwiner_wwp_vp(W, Wp, Vp, uu, m + j, f);
    }
    if (t.is_zero()) continue;
    for (int p = 0; p < j; ++p) t = Vp.act(Vp.parent().virasoro_vector(), 0, t);
    Rational c = Rational((m + j + 1) % 2 ? -1 : 1) / factorial(j);
    out += c * t;
  }
  return out;
}

}  // namespace vybe
