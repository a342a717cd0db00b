#include "vybe/lie_reduction.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace vybe {

namespace {

std::vector<Rational> coords_level(const GradedVector& v, int level, int dim) {
  std::vector<Rational> out(dim, Rational(0));
  for (auto& [ref, c] : v.terms()) {
    if (ref.level != level)
      throw std::logic_error("level-one reduction: vector leaks outside level " +
                             std::to_string(level));
    out[ref.index] = c;
  }
  return out;
}

std::string coords_str(const std::vector<Rational>& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v[i] << ")" << labels[i];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::vector<Rational> LieLevelOne::bracket_vec(const std::vector<Rational>& a,
                                               const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      for (int k = 0; k < dim; ++k) out[k] += a[i] * b[j] * brackets[i][j][k];
    }
  }
  return out;
}

RationalMatrix LieLevelOne::ad(int a) const {
  RationalMatrix m(dim, std::vector<Rational>(dim, Rational(0)));
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m[k][j] = brackets[a][j][k];
  return m;
}

LieLevelOne level1_lie(const VertexAlgebra& U) {
  LieLevelOne g;
  g.dim = U.level_dim(1);
  g.origin = U.space();
  g.brackets.assign(g.dim, std::vector<std::vector<Rational>>(
                               g.dim, std::vector<Rational>(g.dim, Rational(0))));
  g.quasi_primary = true;
  for (int i = 0; i < g.dim; ++i) {
    g.labels.push_back(U.basis_label(BasisRef{1, i}));
    if (!virasoro_mode(U, 1, U.basis_vector(BasisRef{1, i})).is_zero()) g.quasi_primary = false;
  }
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      g.brackets[i][j] = coords_level(
          U.mode(U.basis_vector(BasisRef{1, i}), 0, U.basis_vector(BasisRef{1, j})), 1, g.dim);
  // Antisymmetry and Jacobi are consequences of the algebra axioms; checked.
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (g.brackets[i][j][k] != -g.brackets[j][i][k])
          throw std::logic_error("level1_lie: bracket not antisymmetric");
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        std::vector<Rational> acc(g.dim, Rational(0));
        auto addv = [&](const std::vector<Rational>& x) {
          for (int t = 0; t < g.dim; ++t) acc[t] += x[t];
        };
        std::vector<Rational> ei(g.dim, Rational(0)), ej(g.dim, Rational(0)),
            ek(g.dim, Rational(0));
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        ek[k] = Rational(1);
        addv(g.bracket_vec(g.brackets[i][j], ek));
        addv(g.bracket_vec(g.brackets[j][k], ei));
        addv(g.bracket_vec(g.brackets[k][i], ej));
        for (int t = 0; t < g.dim; ++t)
          if (!acc[t].is_zero()) throw std::logic_error("level1_lie: Jacobi fails");
      }
  return g;
}

LieModuleOne level1_module(const VertexAlgebra& V, const ModuleLike& W,
                           const ContragredientModule& Wp) {
  LieModuleOne M;
  M.dim_g = V.level_dim(1);
  M.dim_w = W.level_dim(1);
  M.quasi_primary = true;
  for (int j = 0; j < M.dim_w; ++j) {
    M.labels_w.push_back(W.basis_label(BasisRef{1, j}));
    if (!module_virasoro(W, 1, W.basis_vector(BasisRef{1, j})).is_zero())
      M.quasi_primary = false;
  }
  for (int a = 0; a < M.dim_g; ++a) {
    GradedVector xa = V.basis_vector(BasisRef{1, a});
    RationalMatrix rho(M.dim_w, std::vector<Rational>(M.dim_w, Rational(0)));
    for (int j = 0; j < M.dim_w; ++j) {
      auto col = coords_level(W.act(xa, 0, W.basis_vector(BasisRef{1, j})), 1, M.dim_w);
      for (int i = 0; i < M.dim_w; ++i) rho[i][j] = col[i];
    }
    M.rho.push_back(rho);
    // rho*(a) = -rho(a)^T; cross-checked against the contragredient zero-mode.
    RationalMatrix rs(M.dim_w, std::vector<Rational>(M.dim_w, Rational(0)));
    for (int i = 0; i < M.dim_w; ++i)
      for (int j = 0; j < M.dim_w; ++j) rs[i][j] = -rho[j][i];
    for (int j = 0; j < M.dim_w; ++j) {
      auto col = coords_level(
          Wp.act(xa, 0, GradedVector::unit(Wp.space(), BasisRef{1, j})), 1, M.dim_w);
      for (int i = 0; i < M.dim_w; ++i)
        if (col[i] != rs[i][j])
          throw std::logic_error(
              "level1_module: contragredient zero-mode disagrees with -rho^T (is the level "
              "quasi-primary?)");
    }
    M.rho_star.push_back(std::move(rs));
  }
  return M;
}

void LieTensor::add(int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
  }
}

Rational LieTensor::coeff(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Rational(0) : it->second;
}

bool LieTensor::is_skewsymmetric() const {
  for (auto& [ij, c] : entries)
    if (coeff(ij.second, ij.first) != -c) return false;
  return true;
}

void LieTriple::add(std::array<int, 3> idx, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
  }
}

LieTriple& LieTriple::operator+=(const LieTriple& o) {
  for (auto& [idx, c] : o.entries) add(idx, c);
  return *this;
}

LieTriple CybeBrackets::total() const {
  LieTriple t = b12_13;
  t += b12_23;
  t += b13_23;
  return t;
}

CybeBrackets cybe_brackets(const LieLevelOne& g, const LieTensor& R) {
  if (R.dim != g.dim)
    throw std::invalid_argument("cybe_brackets: tensor dimension does not match the algebra");
  CybeBrackets out;
  for (auto& [ij, cij] : R.entries)
    for (auto& [kl, ckl] : R.entries) {
      Rational c = cij * ckl;
      auto [i, j] = ij;
      auto [k, l] = kl;
      for (int t = 0; t < g.dim; ++t) {
        // [R12, R13] = sum [x_i, x_k] (x) x_j (x) x_l
        if (!g.brackets[i][k][t].is_zero())
          out.b12_13.add({t, j, l}, c * g.brackets[i][k][t]);
        // [R12, R23] = sum x_i (x) [x_j, x_k] (x) x_l
        if (!g.brackets[j][k][t].is_zero())
          out.b12_23.add({i, t, l}, c * g.brackets[j][k][t]);
        // [R13, R23] = sum x_i (x) x_k (x) [x_j, x_l]
        if (!g.brackets[j][l][t].is_zero())
          out.b13_23.add({i, k, t}, c * g.brackets[j][l][t]);
      }
    }
  return out;
}

CheckReport check_lie_o_operator(const LieLevelOne& g, const std::vector<RationalMatrix>& pi,
                                 const RationalMatrix& T) {
  if (static_cast<int>(pi.size()) != g.dim)
    throw std::invalid_argument("check_lie_o_operator: action table size mismatch");
  int dim_m = pi.empty() ? 0 : static_cast<int>(pi[0].size());
  if (static_cast<int>(T.size()) != g.dim)
    throw std::invalid_argument("check_lie_o_operator: T must map the module into the algebra");
  CheckReport rep("lie-o-operator");
  rep.note("identity: [T(u),T(v)] = T(pi(T(u))v) - T(pi(T(v))u)");

  auto apply_T = [&](const std::vector<Rational>& u) {
    std::vector<Rational> out(g.dim, Rational(0));
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < dim_m; ++j) out[i] += T[i][j] * u[j];
    return out;
  };
  auto apply_pi = [&](const std::vector<Rational>& x, const std::vector<Rational>& u) {
    std::vector<Rational> out(dim_m, Rational(0));
    for (int a = 0; a < g.dim; ++a) {
      if (x[a].is_zero()) continue;
      for (int i = 0; i < dim_m; ++i)
        for (int j = 0; j < dim_m; ++j) out[i] += x[a] * pi[a][i][j] * u[j];
    }
    return out;
  };

  bool all = true;
  for (int u = 0; u < dim_m; ++u)
    for (int v = 0; v < dim_m; ++v) {
      std::vector<Rational> eu(dim_m, Rational(0)), ev(dim_m, Rational(0));
      eu[u] = Rational(1);
      ev[v] = Rational(1);
      auto tu = apply_T(eu), tv = apply_T(ev);
      auto lhs = g.bracket_vec(tu, tv);
      auto m1 = apply_pi(tu, ev);
      auto m2 = apply_pi(tv, eu);
      std::vector<Rational> arg(dim_m, Rational(0));
      for (int i = 0; i < dim_m; ++i) arg[i] = m1[i] - m2[i];
      auto rhs = apply_T(arg);
      bool ok = true;
      for (int i = 0; i < g.dim; ++i)
        if (lhs[i] != rhs[i]) ok = false;
      rep.add_coverage("pair(" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (!ok) {
        rep.add_fail("pair(" + std::to_string(u) + "," + std::to_string(v) + ")",
                     "lhs=" + coords_str(lhs, g.labels) + ", rhs=" + coords_str(rhs, g.labels));
        all = false;
      }
    }
  if (dim_m == 0) rep.add_coverage("empty-module");
  if (all) rep.add_pass("identity holds on all pairs");
  return rep;
}

LieTensor reduce_tensor(const VertexAlgebra& U, const DiagonalTensor& r) {
  if (r.carrier() != U.space())
    throw std::invalid_argument("reduce_tensor: tensor carrier mismatch");
  LieTensor R;
  R.carrier = "lie@" + U.space();
  R.dim = U.level_dim(1);
  auto it = r.levels().find(1);
  if (it != r.levels().end())
    for (auto& [ij, c] : it->second) R.add(ij.first, ij.second, c);
  return R;
}

RationalMatrix reduce_map(const VertexAlgebra& U, const LevelwiseMatrix& T) {
  int d = U.level_dim(1);
  if (T.has_block(1)) return T.block(1);
  int cols = d;
  return RationalMatrix(d, std::vector<Rational>(cols, Rational(0)));
}

RationalMatrix lie_tensor_to_map(const LieTensor& R) {
  RationalMatrix m(R.dim, std::vector<Rational>(R.dim, Rational(0)));
  for (auto& [ij, c] : R.entries) m[ij.first][ij.second] = c;
  return m;
}

namespace {

LieTriple triple_from_component(const TripleTensorComponent& t) {
  LieTriple out;
  for (auto& [idx, c] : t.entries()) out.add(idx, c);
  return out;
}

std::string triple_str(const LieTriple& t, const std::vector<std::string>& labels) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [idx, c] : t.entries) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")" << labels[idx[0]] << "(x)" << labels[idx[1]] << "(x)"
       << labels[idx[2]];
  }
  return os.str();
}

LieTriple negate(LieTriple t) {
  for (auto& [idx, c] : t.entries) c = -c;
  return t;
}

}  // namespace

CheckReport verify_reduction(const ReductionContext& ctx, int m) {
  if (!ctx.U) throw std::invalid_argument("verify_reduction: no carrier algebra");
  if (ctx.sd && (!ctx.W || !ctx.Wp))
    throw std::invalid_argument("verify_reduction: semidirect context needs W and W'");
  const VertexAlgebra& U = *ctx.U;
  CheckReport rep("level1-reduction[" + U.space() + "]");

  DiagonalTensor r_local;
  const DiagonalTensor* r = ctx.r;
  if (!r && ctx.T && ctx.sd) {
    r_local = build_r_from_T(*ctx.sd, *ctx.T);
    r = &r_local;
  }

  LieLevelOne g = level1_lie(U);
  if (!g.quasi_primary)
    throw std::invalid_argument(
        "verify_reduction: level one is not spanned by quasi-primary vectors");
  rep.add_pass("quasi-primary(level-1 of " + U.space() + ")");

  // Module data for the mixed identities: the semidirect factors when given,
  // otherwise the algebra acting on its own coadjoint side.
  const ModuleLike* W = ctx.W;
  const ContragredientModule* Wp = ctx.Wp;
  AdjointModule self_adj(ctx.sd ? ctx.sd->v() : U);
  std::unique_ptr<ContragredientModule> own_dual;
  if (!W) {
    W = &self_adj;
    own_dual = std::make_unique<ContragredientModule>(self_adj);
    Wp = own_dual.get();
  }
  const VertexAlgebra& V = W->parent();
  LieModuleOne M = level1_module(V, *W, *Wp);
  if (!M.quasi_primary)
    throw std::invalid_argument(
        "verify_reduction: the module level one is not spanned by quasi-primary vectors");

  // (iii) Nine zero-mode sign identities on level-one elements. When the
  // carrier is a semidirect product the rows act on V_1 and W(1)* as embedded;
  // otherwise rows two and three run over the coadjoint companion.
  if (m == 0) {
    LieLevelOne gv = ctx.sd ? level1_lie(ctx.sd->v()) : g;
    bool ok = true;
    auto fail = [&](const std::string& id, const std::string& wit) {
      rep.add_fail(id, wit);
      ok = false;
    };
    // Rows on a, b in V_1 inside the carrier of r.
    auto embed_a = [&](int i) {
      if (ctx.sd) return ctx.sd->embed_v(ctx.sd->v().basis_vector(BasisRef{1, i}));
      return U.basis_vector(BasisRef{1, i});
    };
    auto embed_f = [&](int j) -> GradedVector {
      if (ctx.sd) return ctx.sd->embed_wp(GradedVector::unit(ctx.Wp->space(), BasisRef{1, j}));
      return GradedVector();  // unused in the plain path
    };
    for (int i = 0; i < gv.dim; ++i)
      for (int j = 0; j < gv.dim; ++j) {
        GradedVector a = embed_a(i), b = embed_a(j);
        GradedVector br(U.space());
        for (int t = 0; t < gv.dim; ++t) {
          if (gv.brackets[i][j][t].is_zero()) continue;
          br += gv.brackets[i][j][t] * embed_a(t);
        }
        if (!(U.mode(a, 0, b) == br)) fail("row1-plain(" + gv.labels[i] + "," + gv.labels[j] + ")", "a_0 b != [a,b]");
        GradedVector neg = Rational(-1) * br;
        if (!(primed_mode(U, a, 0, b) == neg))
          fail("row1-primed(" + gv.labels[i] + "," + gv.labels[j] + ")", "a'_0 b != -[a,b]");
        if (!(primed_op_mode(U, a, 0, b) == br))
          fail("row1-primed-op(" + gv.labels[i] + "," + gv.labels[j] + ")", "a'op_0 b != [a,b]");
        rep.add_coverage("row1(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    if (ctx.sd) {
      for (int i = 0; i < gv.dim; ++i)
        for (int j = 0; j < M.dim_w; ++j) {
          GradedVector a = embed_a(i), f = embed_f(j);
          GradedVector rs(U.space());
          for (int t = 0; t < M.dim_w; ++t) {
            if (M.rho_star[i][t][j].is_zero()) continue;
            rs += M.rho_star[i][t][j] * embed_f(t);
          }
          GradedVector neg = Rational(-1) * rs;
          if (!(U.mode(a, 0, f) == rs))
            fail("row2-plain(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 "a_0 v* != rho*(a) v*");
          if (!(primed_mode(U, a, 0, f) == neg))
            fail("row2-primed(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 "a'_0 v* != -rho*(a) v*");
          if (!(primed_op_mode(U, a, 0, f) == rs))
            fail("row2-primed-op(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 "a'op_0 v* != rho*(a) v*");
          if (!(U.mode(f, 0, a) == neg))
            fail("row3-plain(" + std::to_string(j) + "," + std::to_string(i) + ")",
                 "v*(0) a != -rho*(a) v*");
          if (!(primed_mode(U, f, 0, a) == rs))
            fail("row3-primed(" + std::to_string(j) + "," + std::to_string(i) + ")",
                 "(v*)'(0) a != rho*(a) v*");
          if (!(primed_op_mode(U, f, 0, a) == neg))
            fail("row3-primed-op(" + std::to_string(j) + "," + std::to_string(i) + ")",
                 "(v*)'op(0) a != -rho*(a) v*");
          rep.add_coverage("rows23(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      // The level-one bracket of the semidirect carrier is the semidirect Lie
      // algebra [a + u*, b + v*] = [a,b] + rho*(a) v* - rho*(b) u*.
      bool sd_ok = true;
      int dv = gv.dim;
      for (int i = 0; i < g.dim && sd_ok; ++i)
        for (int j = 0; j < g.dim && sd_ok; ++j) {
          std::vector<Rational> want(g.dim, Rational(0));
          bool iv = i < dv, jv = j < dv;
          if (iv && jv)
            for (int t = 0; t < dv; ++t) want[t] = gv.brackets[i][j][t];
          else if (iv && !jv)
            for (int t = 0; t < M.dim_w; ++t) want[dv + t] = M.rho_star[i][t][j - dv];
          else if (!iv && jv)
            for (int t = 0; t < M.dim_w; ++t) want[dv + t] = -M.rho_star[j][t][i - dv];
          for (int t = 0; t < g.dim; ++t)
            if (g.brackets[i][j][t] != want[t]) sd_ok = false;
        }
      if (sd_ok)
        rep.add_pass("semidirect-level1-bracket");
      else
        rep.add_fail("semidirect-level1-bracket",
                     "carrier level-one bracket differs from [a,b] + rho*(a)v* - rho*(b)u*");
    }
    if (ok) rep.add_pass("zero-mode sign identities");
  } else {
    rep.add_skip("zero-mode identities (only defined at m=0)");
  }

  if (r) {
    LieTensor R = reduce_tensor(U, *r);
    CybeBrackets cb = cybe_brackets(g, R);

    // (i) windowed solution reduces to a classical solution.
    bool voybe_pass = check_voybe(U, *r, {m}).all_components_pass();
    bool cybe_zero = cb.total().is_zero();
    rep.note(std::string("voybe(m=") + std::to_string(m) + ") " +
             (voybe_pass ? "passes" : "fails") + "; [[R,R]] " +
             (cybe_zero ? "= 0" : "!= 0"));
    if (voybe_pass && !cybe_zero)
      rep.add_fail("reduction-implication-tensor",
                   "windowed solution but [[R,R]] = " + triple_str(cb.total(), g.labels));
    else
      rep.add_pass("reduction-implication-tensor");
    rep.add_coverage("tensor");

    // (ii) operator side.
    LevelwiseMatrix Tr = tensor_to_map(U, *r);
    AdjointModule adj(U);
    ContragredientModule Up(adj);
    bool rbo_pass = check_relative_rbo(U, Up, Tr, m).all_components_pass();
    std::vector<RationalMatrix> coad;
    for (int a = 0; a < g.dim; ++a) {
      RationalMatrix ad = g.ad(a);
      RationalMatrix rs(g.dim, std::vector<Rational>(g.dim, Rational(0)));
      for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) rs[i][j] = -ad[j][i];
      coad.push_back(std::move(rs));
    }
    bool o_pass = check_lie_o_operator(g, coad, reduce_map(U, Tr)).all_components_pass();
    rep.note(std::string("relative-rbo(Phi(r), m=") + std::to_string(m) + ") " +
             (rbo_pass ? "passes" : "fails") + "; lie O-operator " +
             (o_pass ? "passes" : "fails"));
    if (rbo_pass && !o_pass)
      rep.add_fail("reduction-implication-operator",
                   "relative RBO passes but the level-one O-operator check fails");
    else
      rep.add_pass("reduction-implication-operator");
    rep.add_coverage("operator");

    // (iv) signed (1,1,1)-projections against the classical brackets.
    if (m == 0 && 1 <= U.max_degree()) {
      TripleProducts tp = triple_products(U, *r, 0, 1, 1);
      LieTriple p1 = triple_from_component(tp.p12_13);
      LieTriple p2 = triple_from_component(tp.p23_12);
      LieTriple p3 = triple_from_component(tp.p13_23);
      bool ok1 = p1 == negate(cb.b12_13);
      bool ok2 = negate(p2) == negate(cb.b12_23);
      bool ok3 = p3 == negate(cb.b13_23);
      if (ok1 && ok2 && ok3)
        rep.add_pass("projection-identities");
      else {
        std::ostringstream os;
        if (!ok1)
          os << "p111(r12 .0 r13)=" << triple_str(p1, g.labels) << " vs -[R12,R13]="
             << triple_str(negate(cb.b12_13), g.labels) << "; ";
        if (!ok2)
          os << "p111(-r23 .'0 r12)=" << triple_str(negate(p2), g.labels)
             << " vs -[R12,R23]=" << triple_str(negate(cb.b12_23), g.labels) << "; ";
        if (!ok3)
          os << "p111(r13 .'op0 r23)=" << triple_str(p3, g.labels)
             << " vs -[R13,R23]=" << triple_str(negate(cb.b13_23), g.labels);
        rep.add_fail("projection-identities", os.str());
      }
      rep.add_coverage("projections");
    }
  }

  // Semidirect map path: the strong verdict reduces to the classical
  // O-operator verdict for the level-one block, and the level-one slice of
  // r_T is the skewsymmetrization of that block.
  if (ctx.T && ctx.sd && ctx.W) {
    StrongRboOutcome strong =
        check_strong_rbo_detail(ctx.sd->v(), *ctx.W, *ctx.T, m);
    RationalMatrix t1 = reduce_map(ctx.sd->v(), *ctx.T);
    bool o_pass = check_lie_o_operator(level1_lie(ctx.sd->v()), M.rho, t1)
                      .all_components_pass();
    bool any = strong.relative_ok || strong.compat1_ok || strong.compat2_ok;
    rep.note(std::string("strong-rbo axes: relative ") +
             (strong.relative_ok ? "pass" : "fail") + ", compat1 " +
             (strong.compat1_ok ? "pass" : "fail") + ", compat2 " +
             (strong.compat2_ok ? "pass" : "fail") + "; level-one O-operator " +
             (o_pass ? "pass" : "fail"));
    if (any && !o_pass)
      rep.add_fail("reduction-implication-strong",
                   "a strong axiom holds but the level-one O-operator check fails");
    else
      rep.add_pass("reduction-implication-strong");
    rep.add_coverage("strong-map");

    if (r) {
      LieTensor R = reduce_tensor(U, *r);
      LieTensor want;
      want.carrier = R.carrier;
      want.dim = R.dim;
      int dv = ctx.sd->v().level_dim(1);
      for (int i = 0; i < static_cast<int>(t1.size()); ++i)
        for (int j = 0; j < static_cast<int>(t1[i].size()); ++j) {
          want.add(i, dv + j, t1[i][j]);
          want.add(dv + j, i, -t1[i][j]);
        }
      if (R == want)
        rep.add_pass("level1-slice-is-skewsymmetrized-block");
      else
        rep.add_fail("level1-slice-is-skewsymmetrized-block", "mismatch");
      rep.add_coverage("slice");
    }
  }

  return rep;
}

}  // namespace vybe
