#include "vybe/yang_baxter.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "vybe/errors.hpp"
#include "vybe/parallel.hpp"

namespace vybe {

namespace {

std::string pair_str(int s, int t, int m) {
  return "(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ",m=" + std::to_string(m) +
         ")";
}

std::string vec_str(const GradedVector& v, const std::function<std::string(BasisRef)>& label) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [ref, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")" << label(ref);
  }
  return os.str();
}

void require_carrier(const VertexAlgebra& U, const DiagonalTensor& r) {
  if (r.carrier() != U.space())
    throw std::invalid_argument("tensor carrier '" + r.carrier() + "' does not match '" +
                                U.space() + "'");
  if (r.max_level() > U.max_degree())
    throw OutOfWindowError(r.max_level(), U.max_degree());
}

const std::map<std::pair<int, int>, Rational> kEmptyLevel;

const std::map<std::pair<int, int>, Rational>& level_of(const DiagonalTensor& r, int t) {
  auto it = r.levels().find(t);
  return it == r.levels().end() ? kEmptyLevel : it->second;
}

}  // namespace

TripleProducts triple_products(const VertexAlgebra& U, const DiagonalTensor& r, int m, int s,
                               int t) {
  require_carrier(U, r);
  if (!r.is_skewsymmetric())
    throw std::invalid_argument("triple_products: tensor is not skewsymmetric");
  const int p = s + t - m - 1;
  if (p < 0 || p > U.max_degree()) throw OutOfWindowError(p, U.max_degree());

  std::array<int, 3> shape{p, s, t};
  TripleProducts out{TripleTensorComponent(U.space(), shape),
                     TripleTensorComponent(U.space(), shape),
                     TripleTensorComponent(U.space(), shape)};

  auto unit = [&U](int lvl, int idx) {
    return GradedVector::unit(U.space(), BasisRef{lvl, idx});
  };

  // r^s_12 ._m r^t_13: slot-1 product (e_a ._m e_c) = (e_c)_m (e_a).
  for (auto& [ab, cab] : level_of(r, s))
    for (auto& [cd, ccd] : level_of(r, t)) {
      GradedVector w = U.mode(unit(t, cd.first), m, unit(s, ab.first));
      for (auto& [ref, wc] : w.terms())
        out.p12_13.add({ref.index, ab.second, cd.second}, cab * ccd * wc);
    }
  // r^t_23 .'_m r^p_12: slot-2 product (e_a .'_m e_d) = a'_m d.
  for (auto& [ab, cab] : level_of(r, t))
    for (auto& [cd, ccd] : level_of(r, p)) {
      GradedVector w = primed_mode(U, unit(t, ab.first), m, unit(p, cd.second));
      for (auto& [ref, wc] : w.terms())
        out.p23_12.add({cd.first, ref.index, ab.second}, cab * ccd * wc);
    }
  // r^p_13 .'op_m r^s_23: slot-3 product (e_b .'op_m e_d) = d'op_m b.
  for (auto& [ab, cab] : level_of(r, p))
    for (auto& [cd, ccd] : level_of(r, s)) {
      GradedVector w = primed_op_mode(U, unit(s, cd.second), m, unit(p, ab.second));
      for (auto& [ref, wc] : w.terms())
        out.p13_23.add({ab.first, cd.first, ref.index}, cab * ccd * wc);
    }
  return out;
}

VoybeResidual voybe_residual(const VertexAlgebra& U, const DiagonalTensor& r, int m) {
  require_carrier(U, r);
  const int N = U.max_degree();
  VoybeResidual out;
  std::vector<std::pair<int, int>> todo;
  for (int s = 0; s <= N; ++s)
    for (int t = 0; t <= N; ++t) {
      if (s + t < m + 1) continue;
      if (s + t - m - 1 > N) {
        out.gaps.emplace_back(s, t);
        continue;
      }
      todo.emplace_back(s, t);
    }
  std::vector<TripleTensorComponent> results(todo.size());
  parallel_for(todo.size(), [&](std::size_t i) {
    auto [s, t] = todo[i];
    TripleProducts tp = triple_products(U, r, m, s, t);
    TripleTensorComponent alpha = tp.p12_13;
    alpha -= tp.p23_12;
    alpha += tp.p13_23;
    results[i] = std::move(alpha);
  });
  for (std::size_t i = 0; i < todo.size(); ++i) {
    out.alpha.emplace(todo[i], std::move(results[i]));
    out.coverage.push_back(todo[i]);
  }
  return out;
}

CheckReport check_voybe(const VertexAlgebra& U, const DiagonalTensor& r,
                        const std::vector<int>& m_set) {
  require_carrier(U, r);
  if (m_set.empty()) throw std::invalid_argument("check_voybe: empty m-set");
  if (!r.is_skewsymmetric())
    throw std::invalid_argument("check_voybe: tensor is not skewsymmetric");
  CheckReport rep("voybe[" + U.space() + "]");
  {
    std::ostringstream ms;
    for (int m : m_set) ms << " " << m;
    rep.note("m-set:" + ms.str() +
             " (finite subset; the full equation quantifies over every mode, so any finite "
             "m-set is a partial check)");
  }
  for (int m : m_set) {
    VoybeResidual res = voybe_residual(U, r, m);
    bool all_zero = true;
    for (auto& [st, alpha] : res.alpha) {
      if (!alpha.is_zero()) {
        auto& [idx, c] = *alpha.entries().begin();
        rep.add_fail("alpha" + pair_str(st.first, st.second, m),
                     "entry (" + U.basis_label({alpha.tri_levels()[0], idx[0]}) + ", " +
                         U.basis_label({alpha.tri_levels()[1], idx[1]}) + ", " +
                         U.basis_label({alpha.tri_levels()[2], idx[2]}) + ") = " + c.str());
        all_zero = false;
      }
    }
    if (all_zero) rep.add_pass("m=" + std::to_string(m) + ": all residual components vanish");
    for (auto& [s, t] : res.coverage) rep.add_coverage(pair_str(s, t, m));
    for (auto& [s, t] : res.gaps) rep.add_skip(pair_str(s, t, m));
  }
  return rep;
}

LevelwiseMatrix tensor_to_map(const VertexAlgebra& U, const DiagonalTensor& r) {
  require_carrier(U, r);
  if (!r.is_skewsymmetric())
    throw std::invalid_argument("tensor_to_map: tensor is not skewsymmetric");
  LevelwiseMatrix T(dual_space_of(U.space()), U.space(), 0);
  for (auto& [lvl, entries] : r.levels()) {
    int d = U.level_dim(lvl);
    std::vector<std::vector<Rational>> block(d, std::vector<Rational>(d, Rational(0)));
    for (auto& [ij, c] : entries) block[ij.first][ij.second] = c;
    T.set_block(lvl, std::move(block));
  }
  return T;
}

bool is_skew_lp_map(const LevelwiseMatrix& T) {
  if (T.degree_shift() != 0) return false;
  for (auto& [lvl, block] : T.blocks()) {
    int n = static_cast<int>(block.size());
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(block[i].size()) != n) return false;
      for (int j = 0; j < n; ++j)
        if (block[i][j] != -block[j][i]) return false;
    }
  }
  return true;
}

DiagonalTensor map_to_tensor(const VertexAlgebra& U, const LevelwiseMatrix& T) {
  if (T.degree_shift() != 0)
    throw std::invalid_argument("map_to_tensor: map must be level-preserving");
  if (T.source() != dual_space_of(U.space()) || T.target() != U.space())
    throw std::invalid_argument("map_to_tensor: map is not from the graded dual into U");
  if (!is_skew_lp_map(T))
    throw std::invalid_argument("map_to_tensor: map is not skewsymmetric");
  DiagonalTensor r(U.space());
  Rational half(1, 2);
  for (auto& [lvl, block] : T.blocks()) {
    int n = static_cast<int>(block.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational c = half * (block[i][j] - block[j][i]);
        r.add(lvl, i, j, c);
      }
  }
  return r;
}

CheckReport check_relative_rbo(const VertexAlgebra& V, const ModuleLike& W,
                               const LevelwiseMatrix& T, int m) {
  if (T.source() != W.space() || T.target() != V.space())
    throw std::invalid_argument("check_relative_rbo: map carriers ('" + T.source() + "' -> '" +
                                T.target() + "') do not match module '" + W.space() +
                                "' and algebra '" + V.space() + "'");
  const int N = V.max_degree();
  const int d = T.degree_shift();
  CheckReport rep("relative-rbo[m=" + std::to_string(m) + "]");
  rep.note("identity: T(u)_m T(v) = T(T(u)_m v) + T(u(m) T(v)), degree shift " +
           std::to_string(d));

  struct Task {
    BasisRef u, v;
  };
  std::vector<Task> tasks;
  std::vector<std::string> skips;
  for (int t = 0; t <= N; ++t)
    for (int i = 0; i < W.level_dim(t); ++i)
      for (int s = 0; s <= N; ++s)
        for (int k = 0; k < W.level_dim(s); ++k) {
          int top = t + s + 2 * d - m - 1;      // level of T(u)_m T(v)
          int mid = t + s + d - m - 1;          // level of T(u)_m v and u(m) T(v)
          if (t + d > N || s + d > N || top > N || mid > N) {
            skips.push_back("pair(u=" + std::to_string(t) + ":" + std::to_string(i) +
                            ",v=" + std::to_string(s) + ":" + std::to_string(k) + ")");
            continue;
          }
          tasks.push_back({BasisRef{t, i}, BasisRef{s, k}});
        }

  auto vlabel = [&V](BasisRef rf) { return V.basis_label(rf); };

  struct Outcome {
    bool pass = true;
    std::string witness;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t idx) {
    auto [uref, vref] = tasks[idx];
    GradedVector u = W.basis_vector(uref), v = W.basis_vector(vref);
    GradedVector tu = T.apply(u), tv = T.apply(v);
    GradedVector lhs =
        (tu.is_zero() || tv.is_zero()) ? GradedVector(V.space()) : V.mode(tu, m, tv);
    GradedVector mid1 = tu.is_zero() ? GradedVector(W.space()) : W.act(tu, m, v);
    GradedVector mid2 = tv.is_zero() ? GradedVector(W.space()) : skew_mode_action(W, u, m, tv);
    GradedVector rhs = T.apply(mid1) + T.apply(mid2);
    if (!(lhs == rhs)) {
      outcomes[idx].pass = false;
      outcomes[idx].witness = "u=" + W.basis_label(uref) + ", v=" + W.basis_label(vref) +
                              ", lhs=" + vec_str(lhs, vlabel) + ", rhs=" + vec_str(rhs, vlabel);
    }
  });

  bool all = true;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    auto [uref, vref] = tasks[idx];
    std::string id = "pair(u=" + std::to_string(uref.level) + ":" +
                     std::to_string(uref.index) + ",v=" + std::to_string(vref.level) + ":" +
                     std::to_string(vref.index) + ")";
    rep.add_coverage(id);
    if (!outcomes[idx].pass) {
      rep.add_fail(id, outcomes[idx].witness);
      all = false;
    }
  }
  for (auto& s : skips) rep.add_skip(s);
  if (all) rep.add_pass("identity holds on all covered pairs");
  return rep;
}

LevelwiseMatrix coadjoint_map(const VertexAlgebra& V, const ModuleLike& W,
                              const LevelwiseMatrix& T) {
  if (T.degree_shift() != 0)
    throw std::invalid_argument("coadjoint_map: map must be level-preserving");
  LevelwiseMatrix Ts(dual_space_of(V.space()), dual_space_of(W.space()), 0);
  for (auto& [lvl, block] : T.blocks()) {
    int rows = W.level_dim(lvl);
    int cols = V.level_dim(lvl);
    std::vector<std::vector<Rational>> tb(rows, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < static_cast<int>(block.size()); ++i)
      for (int j = 0; j < static_cast<int>(block[i].size()); ++j) tb[j][i] = block[i][j];
    Ts.set_block(lvl, std::move(tb));
  }
  return Ts;
}

StrongRboOutcome check_strong_rbo_detail(const VertexAlgebra& V, const ModuleLike& W,
                                         const LevelwiseMatrix& T, int m) {
  if (!W.conformal_weight().is_zero())
    throw std::invalid_argument("check_strong_rbo: module conformal weight must be 0, got " +
                                W.conformal_weight().str());
  if (T.degree_shift() != 0)
    throw std::invalid_argument("check_strong_rbo: map must be level-preserving");

  StrongRboOutcome out{CheckReport("strong-rbo[m=" + std::to_string(m) + "]")};

  CheckReport rel = check_relative_rbo(V, W, T, m);
  out.relative_ok = rel.passed();
  out.report.absorb(rel);

  AdjointModule adj(V);
  ContragredientModule Wp(W);
  ContragredientModule Vp(adj);
  LevelwiseMatrix Ts = coadjoint_map(V, W, T);

  const int N = V.max_degree();
  struct Task {
    BasisRef u, f;
  };
  std::vector<Task> tasks;
  for (int t = 0; t <= N; ++t)
    for (int i = 0; i < W.level_dim(t); ++i)
      for (int p = 0; p <= N; ++p)
        for (int j = 0; j < V.level_dim(p); ++j) {
          if (t + p - m - 1 > N) {
            out.report.add_skip("compat(u=" + std::to_string(t) + ":" + std::to_string(i) +
                                ",f=" + std::to_string(p) + ":" + std::to_string(j) + ")");
            continue;
          }
          tasks.push_back({BasisRef{t, i}, BasisRef{p, j}});
        }

  auto wplabel = [&Wp](BasisRef rf) { return Wp.basis_label(rf); };
  struct Outcome {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t idx) {
    auto [uref, fref] = tasks[idx];
    GradedVector u = W.basis_vector(uref);
    GradedVector f = GradedVector::unit(Vp.space(), fref);
    GradedVector tu = T.apply(u);
    GradedVector tf = Ts.apply(f);

    // Res_z z^m (Y_{W'}(Tu,z) T*f - T*(Y_{V'}(Tu,z) f) + T*(Y[u,z] T*f)) = 0
    GradedVector t1 = (tu.is_zero() || tf.is_zero()) ? GradedVector(Wp.space())
                                                     : Wp.act(tu, m, tf);
    GradedVector t2 = tu.is_zero() ? GradedVector(Wp.space()) : Ts.apply(Vp.act(tu, m, f));
    GradedVector t3 = tf.is_zero() ? GradedVector(Wp.space())
                                   : Ts.apply(intertwiner_wwp_vp(W, Wp, Vp, u, m, tf));
    GradedVector lhs1 = t1 - t2 + t3;
    if (!lhs1.is_zero()) {
      outcomes[idx].ok1 = false;
      outcomes[idx].w1 = "u=" + W.basis_label(uref) + ", f=" + Vp.basis_label(fref) +
                         ", value=" + vec_str(lhs1, wplabel);
    }

    // Res_z z^m (Y_{W'V}(T*f,z) Tu - T*(Y_{V'V}(f,z) Tu) + T*(Y[T*f,z] u)) = 0
    GradedVector s1 = (tu.is_zero() || tf.is_zero()) ? GradedVector(Wp.space())
                                                     : skew_mode_action(Wp, tf, m, tu);
    GradedVector s2 = tu.is_zero() ? GradedVector(Wp.space())
                                   : Ts.apply(skew_mode_action(Vp, f, m, tu));
    GradedVector s3 = tf.is_zero() ? GradedVector(Wp.space())
                                   : Ts.apply(intertwiner_wpw_vp(W, Wp, Vp, tf, m, u));
    GradedVector lhs2 = s1 - s2 + s3;
    if (!lhs2.is_zero()) {
      outcomes[idx].ok2 = false;
      outcomes[idx].w2 = "u=" + W.basis_label(uref) + ", f=" + Vp.basis_label(fref) +
                         ", value=" + vec_str(lhs2, wplabel);
    }
  });

  bool all1 = true, all2 = true;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    auto [uref, fref] = tasks[idx];
    std::string id = "(u=" + std::to_string(uref.level) + ":" + std::to_string(uref.index) +
                     ",f=" + std::to_string(fref.level) + ":" + std::to_string(fref.index) +
                     ")";
    out.report.add_coverage("compat" + id);
    if (!outcomes[idx].ok1) {
      out.report.add_fail("coadjoint-compat-1" + id, outcomes[idx].w1);
      all1 = false;
    }
    if (!outcomes[idx].ok2) {
      out.report.add_fail("coadjoint-compat-2" + id, outcomes[idx].w2);
      all2 = false;
    }
  }
  if (all1) out.report.add_pass("coadjoint-compat-1");
  if (all2) out.report.add_pass("coadjoint-compat-2");
  out.compat1_ok = all1;
  out.compat2_ok = all2;
  return out;
}

CheckReport check_strong_rbo(const VertexAlgebra& V, const ModuleLike& W,
                             const LevelwiseMatrix& T, int m) {
  return check_strong_rbo_detail(V, W, T, m).report;
}

DiagonalTensor build_r_from_T(const SemidirectVOA& U, const LevelwiseMatrix& T) {
  if (T.degree_shift() != 0)
    throw std::invalid_argument("build_r_from_T: map must be level-preserving");
  if (T.source() != U.w().space() || T.target() != U.v().space())
    throw std::invalid_argument("build_r_from_T: map carriers do not match the semidirect "
                                "factors");
  DiagonalTensor r(U.space());
  for (int t = 0; t <= U.max_degree(); ++t)
    for (int i = 0; i < U.w().level_dim(t); ++i) {
      GradedVector tv = T.apply(U.w().basis_vector(BasisRef{t, i}));
      if (tv.is_zero()) continue;
      int dual_idx = U.from_wp(BasisRef{t, i}).index;
      for (auto& [ref, c] : tv.terms()) {
        int v_idx = U.from_v(ref).index;
        r.add(t, v_idx, dual_idx, c);
        r.add(t, dual_idx, v_idx, -c);
      }
    }
  return r;
}

namespace {

void verify_form(const CurrentVOA& U, const InvariantForm& form) {
  const int N = U.max_degree();
  if (static_cast<int>(form.gram.size()) != N + 1)
    throw std::invalid_argument("form_transport: Gram block count mismatch");
  for (int n = 0; n <= N; ++n) {
    int d = U.level_dim(n);
    if (static_cast<int>(form.gram[n].size()) != d)
      throw std::invalid_argument("form_transport: Gram shape mismatch at level " +
                                  std::to_string(n));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (form.gram[n][i][j] != form.gram[n][j][i])
          throw std::invalid_argument("form_transport: form is not symmetric");
    if (!is_invertible(form.gram[n]))
      throw std::domain_error("form_transport: form degenerate at level " + std::to_string(n));
  }
  // Window invariance: (a_m b | c) = (b | a'_m c) on basis triples.
  for (int la = 0; la <= N; ++la)
    for (int ia = 0; ia < U.level_dim(la); ++ia) {
      GradedVector a = U.basis_vector(BasisRef{la, ia});
      for (int lb = 0; lb <= N; ++lb)
        for (int ib = 0; ib < U.level_dim(lb); ++ib) {
          GradedVector b = U.basis_vector(BasisRef{lb, ib});
          for (int m = -2; m <= 2; ++m) {
            int lab = la + lb - m - 1;
            if (lab < 0 || lab > N) continue;
            GradedVector ab = U.mode(a, m, b);
            for (int ic = 0; ic < U.level_dim(lab); ++ic) {
              GradedVector cvec = U.basis_vector(BasisRef{lab, ic});
              Rational lhs = form.pair(ab, cvec);
              Rational rhs = form.pair(b, primed_mode(U, a, m, cvec));
              if (lhs != rhs)
                throw std::invalid_argument("form_transport: form is not invariant at (" +
                                            U.basis_label({la, ia}) + ", " +
                                            U.basis_label({lb, ib}) + ", m=" +
                                            std::to_string(m) + ")");
            }
          }
        }
    }
}

}  // namespace

LevelwiseMatrix form_transport(const CurrentVOA& U, const DiagonalTensor& r,
                               const InvariantForm& form) {
  require_carrier(U, r);
  if (!r.is_skewsymmetric())
    throw std::invalid_argument("form_transport: tensor is not skewsymmetric");
  verify_form(U, form);
  // T~ = T_r o phi: block_t = C_t G_t with C the tensor coefficients and G the
  // Gram matrix; a map from the adjoint module into U.
  LevelwiseMatrix out(U.space(), U.space(), 0);
  for (auto& [lvl, entries] : r.levels()) {
    int d = U.level_dim(lvl);
    std::vector<std::vector<Rational>> c(d, std::vector<Rational>(d, Rational(0)));
    for (auto& [ij, v] : entries) c[ij.first][ij.second] = v;
    out.set_block(lvl, matmul(c, form.gram[lvl]));
  }
  return out;
}

CheckReport check_voybe_rbo_transport(const CurrentVOA& U, const DiagonalTensor& r,
                                      const InvariantForm& form, int m) {
  // The verdict of this report is the *equivalence* of the two checks; the
  // individual outcomes (with witnesses, when failing) are recorded as notes.
  CheckReport rep("voybe-rbo-transport[m=" + std::to_string(m) + "]");
  CheckReport voybe = check_voybe(U, r, {m});
  LevelwiseMatrix tr = form_transport(U, r, form);
  AdjointModule adj(U);
  CheckReport rbo = check_relative_rbo(U, adj, tr, m);
  auto describe = [](const CheckReport& sub) {
    if (sub.all_components_pass()) return std::string("pass");
    const CheckComponent* f = sub.first_failure();
    return "fail at " + f->id + " (" + f->witness + ")";
  };
  rep.note("voybe: " + describe(voybe));
  rep.note("transported map: " + describe(rbo));
  bool agree = voybe.all_components_pass() == rbo.all_components_pass();
  if (agree)
    rep.add_pass("equivalence: voybe verdict matches transported-map verdict (" +
                 std::string(voybe.all_components_pass() ? "both pass" : "both fail") + ")");
  else
    rep.add_fail("equivalence",
                 std::string("voybe ") + (voybe.all_components_pass() ? "passes" : "fails") +
                     " but transported map " + (rbo.all_components_pass() ? "passes" : "fails"));
  for (const auto& c : voybe.coverage()) rep.add_coverage("voybe/" + c);
  for (const auto& c : rbo.coverage()) rep.add_coverage("rbo/" + c);
  return rep;
}

CheckReport check_tensor_operator_correspondence(const VertexAlgebra& U,
                                                 const DiagonalTensor& r, int m) {
  require_carrier(U, r);
  if (!r.is_skewsymmetric())
    throw std::invalid_argument("correspondence: tensor is not skewsymmetric");
  CheckReport rep("tensor-operator-correspondence[m=" + std::to_string(m) + "]");
  const int N = U.max_degree();
  AdjointModule adj(U);
  ContragredientModule Up(adj);
  LevelwiseMatrix Tr = tensor_to_map(U, r);
  VoybeResidual res = voybe_residual(U, r, m);

  auto ulabel = [&U](BasisRef rf) { return U.basis_label(rf); };
  bool all = true;
  for (int t = 0; t <= N; ++t)
    for (int i = 0; i < U.level_dim(t); ++i)
      for (int s = 0; s <= N; ++s)
        for (int k = 0; k < U.level_dim(s); ++k) {
          int L = t + s - m - 1;
          if (L > N) {
            rep.add_skip("f=" + std::to_string(t) + ":" + std::to_string(i) +
                         ",g=" + std::to_string(s) + ":" + std::to_string(k));
            continue;
          }
          GradedVector f = GradedVector::unit(Up.space(), BasisRef{t, i});
          GradedVector g = GradedVector::unit(Up.space(), BasisRef{s, k});
          GradedVector trf = Tr.apply(f), trg = Tr.apply(g);
          GradedVector lhs(U.space());
          if (!trf.is_zero() && !trg.is_zero()) lhs += U.mode(trf, m, trg);
          if (!trf.is_zero()) lhs -= Tr.apply(Up.act(trf, m, g));
          if (!trg.is_zero()) lhs -= Tr.apply(skew_mode_action(Up, f, m, trg));

          GradedVector rhs(U.space());
          if (L >= 0) {
            auto it = res.alpha.find({s, t});
            if (it != res.alpha.end())
              for (auto& [idx, c] : it->second.entries())
                if (idx[1] == k && idx[2] == i) rhs.add(BasisRef{L, idx[0]}, c);
          }
          std::string id = "(f=" + std::to_string(t) + ":" + std::to_string(i) +
                           ",g=" + std::to_string(s) + ":" + std::to_string(k) + ")";
          rep.add_coverage(id);
          if (!(lhs == rhs)) {
            rep.add_fail("componentwise" + id, "operator side=" + vec_str(lhs, ulabel) +
                                                   ", tensor side=" + vec_str(rhs, ulabel));
            all = false;
          }
        }
  if (all) rep.add_pass("operator side equals residual contraction on all covered pairs");
  return rep;
}

ResidualBlocks classify_residual_blocks(const SemidirectVOA& U, const VoybeResidual& res) {
  ResidualBlocks out;
  for (auto& [st, alpha] : res.alpha) {
    auto [p1, p2, p3] = alpha.tri_levels();
    for (auto& [idx, c] : alpha.entries()) {
      bool v1 = U.is_v_ref(BasisRef{p1, idx[0]});
      bool v2 = U.is_v_ref(BasisRef{p2, idx[1]});
      bool v3 = U.is_v_ref(BasisRef{p3, idx[2]});
      if (v1 && !v2 && !v3)
        out.a_zero = false;
      else if (!v1 && v2 && !v3)
        out.b_zero = false;
      else if (!v1 && !v2 && v3)
        out.c_zero = false;
      else
        out.other_zero = false;
    }
  }
  return out;
}

}  // namespace vybe
