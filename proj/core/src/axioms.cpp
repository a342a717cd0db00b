#include "vybe/axioms.hpp"

#include <sstream>

#include "vybe/parallel.hpp"

namespace vybe {

namespace {

std::string ref_str(BasisRef r) {
  return std::to_string(r.level) + ":" + std::to_string(r.index);
}

std::string vec_str(const GradedVector& v,
                    const std::function<std::string(BasisRef)>& label) {
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

struct PairTask {
  BasisRef a, b;
};

// Shared sweep over the operator identities; `act` is the mode action of the
// algebra on the target carrier (the carrier is the algebra itself for the
// VOA axioms, a module otherwise).
struct IdentitySweep {
  const VertexAlgebra& U;
  const AxiomOptions& opt;
  int N;
  std::function<GradedVector(const GradedVector&, int, const GradedVector&)> act;
  std::function<int(int)> carrier_dim;
  std::function<std::string(BasisRef)> carrier_label;
  SpaceId carrier_space;

  GradedVector carrier_basis(BasisRef r) const {
    return GradedVector::unit(carrier_space, r);
  }

  // [a_p, b_q] v = sum_i C(p,i) (a_i b)_{p+q-i} v. Requires la + lb - 1 <= N.
  void commutator(BasisRef aref, BasisRef bref, std::vector<CheckComponent>& out,
                  std::vector<std::string>& coverage,
                  std::vector<std::string>& skips) const {
    int la = aref.level, lb = bref.level;
    if (la + lb - 1 > N) {
      skips.push_back("commutator(" + ref_str(aref) + "," + ref_str(bref) + ")");
      return;
    }
    GradedVector a = U.basis_vector(aref), b = U.basis_vector(bref);
    bool checked = false;
    for (int n = 0; n <= N; ++n)
      for (int iv = 0; iv < carrier_dim(n); ++iv) {
        GradedVector v = carrier_basis(BasisRef{n, iv});
        for (int p = opt.mode_lo; p <= opt.mode_hi; ++p) {
          if (la + n - p - 1 > N) continue;  // a_p v out of window
          for (int q = opt.mode_lo; q <= opt.mode_hi; ++q) {
            if (lb + n - q - 1 > N) continue;
            int final_level = la + lb + n - p - q - 2;
            if (final_level < 0 || final_level > N) continue;
            GradedVector lhs = act(a, p, act(b, q, v)) - act(b, q, act(a, p, v));
            GradedVector rhs(carrier_space);
            for (int i = 0; i <= la + lb - 1; ++i) {
              Rational c = binomial(p, i);
              if (c.is_zero()) continue;
              GradedVector ab = U.mode(a, i, b);
              if (ab.is_zero()) continue;
              rhs += c * act(ab, p + q - i, v);
            }
            checked = true;
            if (!(lhs == rhs)) {
              out.push_back({"commutator(a=" + ref_str(aref) + ",b=" + ref_str(bref) +
                                 ",v=" + ref_str({n, iv}) + ",p=" + std::to_string(p) +
                                 ",q=" + std::to_string(q) + ")",
                             false,
                             "lhs=" + vec_str(lhs, carrier_label) +
                                 " rhs=" + vec_str(rhs, carrier_label)});
              return;
            }
          }
        }
      }
    if (checked)
      coverage.push_back("commutator(" + ref_str(aref) + "," + ref_str(bref) + ")");
  }

  // (a_p b)_q v = sum_i (-1)^i C(p,i) (a_{p-i} b_{q+i} - (-1)^p b_{p+q-i} a_i) v.
  void iterate(BasisRef aref, BasisRef bref, std::vector<CheckComponent>& out,
               std::vector<std::string>& coverage, std::vector<std::string>& skips) const {
    int la = aref.level, lb = bref.level;
    GradedVector a = U.basis_vector(aref), b = U.basis_vector(bref);
    bool checked = false, skipped = false;
    for (int n = 0; n <= N; ++n)
      for (int iv = 0; iv < carrier_dim(n); ++iv) {
        if (la + n - 1 > N) {
          skipped = true;  // a_i v not computable for all i >= 0
          continue;
        }
        GradedVector v = carrier_basis(BasisRef{n, iv});
        for (int p = opt.mode_lo; p <= opt.mode_hi; ++p) {
          int lab = la + lb - p - 1;
          if (lab < 0 || lab > N) continue;
          GradedVector ab = U.mode(a, p, b);
          for (int q = opt.mode_lo; q <= opt.mode_hi; ++q) {
            if (lb + n - q - 1 > N) continue;
            int final_level = la + lb + n - p - q - 2;
            if (final_level < 0 || final_level > N) continue;
            GradedVector lhs = act(ab, q, v);
            GradedVector rhs(carrier_space);
            int bound1 = lb + n - q - 1;
            for (int i = 0; i <= bound1; ++i) {
              Rational c = binomial(p, i);
              if (i % 2) c = -c;
              if (c.is_zero()) continue;
              GradedVector inner = act(b, q + i, v);
              if (!inner.is_zero()) rhs += c * act(a, p - i, inner);
            }
            for (int i = 0; i <= la + n - 1; ++i) {
              Rational c = binomial(p, i);
              if ((p + i) % 2 == 0) c = -c;  // -(-1)^p (-1)^i
              if (c.is_zero()) continue;
              GradedVector inner = act(a, i, v);
              if (!inner.is_zero()) rhs += c * act(b, p + q - i, inner);
            }
            checked = true;
            if (!(lhs == rhs)) {
              out.push_back({"iterate(a=" + ref_str(aref) + ",b=" + ref_str(bref) +
                                 ",v=" + ref_str({n, iv}) + ",p=" + std::to_string(p) +
                                 ",q=" + std::to_string(q) + ")",
                             false,
                             "lhs=" + vec_str(lhs, carrier_label) +
                                 " rhs=" + vec_str(rhs, carrier_label)});
              return;
            }
          }
        }
      }
    if (checked) coverage.push_back("iterate(" + ref_str(aref) + "," + ref_str(bref) + ")");
    if (skipped) skips.push_back("iterate(" + ref_str(aref) + "," + ref_str(bref) + ")");
  }

  // Virasoro bracket, L(0) grading/eigenvalue, L(-1)-derivative, vacuum,
  // truncation live in the per-checker functions below.
};

}  // namespace

CheckReport verify_voa_axioms(const VertexAlgebra& U, const AxiomOptions& opt) {
  CheckReport rep("voa-axioms[" + U.space() + "]");
  const int N = U.max_degree();
  rep.note("window: levels 0.." + std::to_string(N) + ", identity modes " +
           std::to_string(opt.mode_lo) + ".." + std::to_string(opt.mode_hi) +
           ", virasoro modes " + std::to_string(opt.virasoro_lo) + ".." +
           std::to_string(opt.virasoro_hi));

  auto label = [&U](BasisRef r) { return U.basis_label(r); };

  // L(0) grading.
  {
    bool ok = true;
    for (int n = 0; n <= N && ok; ++n)
      for (int i = 0; i < U.level_dim(n); ++i) {
        GradedVector v = U.basis_vector(BasisRef{n, i});
        GradedVector lhs = virasoro_mode(U, 0, v);
        if (!(lhs == Rational(n) * v)) {
          rep.add_fail("L0-grading(v=" + ref_str({n, i}) + ")",
                       "L(0)v=" + vec_str(lhs, label));
          ok = false;
          break;
        }
        rep.add_coverage("L0(" + ref_str({n, i}) + ")");
      }
    if (ok) rep.add_pass("L0-grading");
  }

  // Vacuum property Y(1,z) = id.
  {
    bool ok = true;
    for (int n = 0; n <= N && ok; ++n)
      for (int i = 0; i < U.level_dim(n); ++i) {
        GradedVector v = U.basis_vector(BasisRef{n, i});
        for (int m = -3; m <= 2 && ok; ++m) {
          if (n - m - 1 > N) continue;  // property not checkable in-window
          GradedVector got = U.mode(U.vacuum(), m, v);
          GradedVector want = (m == -1) ? v : GradedVector(U.space());
          if (!(got == want)) {
            rep.add_fail("vacuum(m=" + std::to_string(m) + ",v=" + ref_str({n, i}) + ")",
                         "got " + vec_str(got, label));
            ok = false;
          }
        }
        rep.add_coverage("vacuum(" + ref_str({n, i}) + ")");
      }
    if (ok) rep.add_pass("vacuum");
  }

  // Creation property: a_{-1} vac = a, a_{m>=0} vac = 0, a_{-2} vac = L(-1)a.
  {
    bool ok = true;
    for (int n = 0; n <= N && ok; ++n)
      for (int i = 0; i < U.level_dim(n) && ok; ++i) {
        GradedVector a = U.basis_vector(BasisRef{n, i});
        if (!(U.mode(a, -1, U.vacuum()) == a)) {
          rep.add_fail("creation(a=" + ref_str({n, i}) + ",m=-1)", "a_{-1}vac != a");
          ok = false;
          break;
        }
        for (int m = 0; m <= n + 1; ++m)
          if (!U.mode(a, m, U.vacuum()).is_zero()) {
            rep.add_fail("creation(a=" + ref_str({n, i}) + ",m=" + std::to_string(m) + ")",
                         "a_m vac != 0");
            ok = false;
            break;
          }
        if (ok && n + 1 <= N) {
          if (!(U.mode(a, -2, U.vacuum()) == virasoro_mode(U, -1, a))) {
            rep.add_fail("creation(a=" + ref_str({n, i}) + ",m=-2)", "a_{-2}vac != L(-1)a");
            ok = false;
          }
        }
        rep.add_coverage("creation(" + ref_str({n, i}) + ")");
      }
    if (ok) rep.add_pass("creation");
  }

  // Pair-indexed sweeps, fanned out in parallel with a deterministic merge.
  std::vector<PairTask> pairs;
  for (int la = 0; la <= N; ++la)
    for (int ia = 0; ia < U.level_dim(la); ++ia)
      for (int lb = 0; lb <= N; ++lb)
        for (int ib = 0; ib < U.level_dim(lb); ++ib)
          pairs.push_back({BasisRef{la, ia}, BasisRef{lb, ib}});

  IdentitySweep sweep{
      U,
      opt,
      N,
      [&U](const GradedVector& a, int m, const GradedVector& v) { return U.mode(a, m, v); },
      [&U](int n) { return U.level_dim(n); },
      label,
      U.space()};

  struct PairResult {
    std::vector<CheckComponent> fails;
    std::vector<std::string> coverage, skips;
  };
  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    auto& r = results[idx];
    auto [aref, bref] = pairs[idx];
    int la = aref.level, lb = bref.level;
    GradedVector a = U.basis_vector(aref), b = U.basis_vector(bref);

    // Truncation: a_n b = 0 once the result weight drops below zero.
    for (int n = la + lb; n <= la + lb + 1; ++n)
      if (!U.mode(a, n, b).is_zero()) {
        r.fails.push_back({"truncation(a=" + ref_str(aref) + ",b=" + ref_str(bref) +
                               ",n=" + std::to_string(n) + ")",
                           false, "nonzero below level 0"});
        return;
      }
    r.coverage.push_back("truncation(" + ref_str(aref) + "," + ref_str(bref) + ")");

    // Skewsymmetry Y(a,z)b = e^{zL(-1)} Y(b,-z) a componentwise.
    {
      bool checked = false;
      for (int m = opt.mode_lo; m <= la + lb - 1; ++m) {
        int lvl = la + lb - m - 1;
        if (lvl < 0 || lvl > N) continue;
        GradedVector lhs = U.mode(a, m, b);
        GradedVector rhs = skew_mode(U, a, m, b);
        checked = true;
        if (!(lhs == rhs)) {
          r.fails.push_back({"skewsymmetry(a=" + ref_str(aref) + ",b=" + ref_str(bref) +
                                 ",m=" + std::to_string(m) + ")",
                             false,
                             "lhs=" + vec_str(lhs, [&U](BasisRef x) { return U.basis_label(x); }) +
                                 " rhs=" + vec_str(rhs, [&U](BasisRef x) { return U.basis_label(x); })});
          return;
        }
      }
      if (checked)
        r.coverage.push_back("skewsymmetry(" + ref_str(aref) + "," + ref_str(bref) + ")");
    }

    // L(-1)-derivative: (L(-1)a)_m b = -m a_{m-1} b.
    if (la + 1 <= N) {
      GradedVector da = virasoro_mode(U, -1, a);
      bool checked = false;
      for (int m = opt.mode_lo; m <= opt.mode_hi; ++m) {
        int lvl = la + 1 + lb - m - 1;
        if (lvl < 0 || lvl > N) continue;
        GradedVector lhs = U.mode(da, m, b);
        GradedVector rhs = Rational(-m) * U.mode(a, m - 1, b);
        checked = true;
        if (!(lhs == rhs)) {
          r.fails.push_back({"L-1-derivative(a=" + ref_str(aref) + ",b=" + ref_str(bref) +
                                 ",m=" + std::to_string(m) + ")",
                             false, "mismatch"});
          return;
        }
      }
      if (checked)
        r.coverage.push_back("L-1-derivative(" + ref_str(aref) + "," + ref_str(bref) + ")");
    } else {
      r.skips.push_back("L-1-derivative(" + ref_str(aref) + "," + ref_str(bref) + ")");
    }

    sweep.commutator(aref, bref, r.fails, r.coverage, r.skips);
    sweep.iterate(aref, bref, r.fails, r.coverage, r.skips);
  });

  bool pair_fail = false;
  for (auto& r : results) {
    for (auto& f : r.fails) {
      rep.add_component(f);
      pair_fail = true;
    }
    for (auto& c : r.coverage) rep.add_coverage(c);
    for (auto& s : r.skips) rep.add_skip(s);
  }
  if (!pair_fail) {
    rep.add_pass("truncation");
    rep.add_pass("skewsymmetry");
    rep.add_pass("L-1-derivative");
    rep.add_pass("commutator-identity");
    rep.add_pass("iterate-identity");
  }

  // Virasoro relation [L(p),L(q)] = (p-q) L(p+q) + c/12 (p^3-p) delta_{p+q,0}.
  {
    bool ok = true;
    const Rational& c = U.central_charge();
    for (int n = 0; n <= N && ok; ++n)
      for (int i = 0; i < U.level_dim(n) && ok; ++i) {
        GradedVector v = U.basis_vector(BasisRef{n, i});
        for (int p = opt.virasoro_lo; p <= opt.virasoro_hi && ok; ++p) {
          if (n - p > N) continue;
          for (int q = opt.virasoro_lo; q <= opt.virasoro_hi; ++q) {
            if (n - q > N || n - p - q > N || n - p - q < 0) continue;
            GradedVector lhs = virasoro_mode(U, p, virasoro_mode(U, q, v)) -
                               virasoro_mode(U, q, virasoro_mode(U, p, v));
            GradedVector rhs = Rational(p - q) * virasoro_mode(U, p + q, v);
            if (p + q == 0) {
              Rational central =
                  Rational(p) * Rational(p) * Rational(p) - Rational(p);
              rhs += (central / Rational(12)) * c * v;
            }
            if (!(lhs == rhs)) {
              rep.add_fail("virasoro(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                               ",v=" + ref_str({n, i}) + ")",
                           "lhs=" + vec_str(lhs, label) + " rhs=" + vec_str(rhs, label));
              ok = false;
              break;
            }
          }
        }
        rep.add_coverage("virasoro(" + ref_str({n, i}) + ")");
      }
    if (ok) rep.add_pass("virasoro-relation(c=" + U.central_charge().str() + ")");
  }

  return rep;
}

CheckReport verify_module_axioms(const ModuleLike& W, const AxiomOptions& opt) {
  const VertexAlgebra& U = W.parent();
  CheckReport rep("module-axioms[" + W.space() + "]");
  const int N = W.max_degree();
  rep.note("window: levels 0.." + std::to_string(N) + ", identity modes " +
           std::to_string(opt.mode_lo) + ".." + std::to_string(opt.mode_hi));

  auto wlabel = [&W](BasisRef r) { return W.basis_label(r); };

  // Vacuum acts as the identity; L(0) has eigenvalue lambda + n.
  {
    bool vac_ok = true, l0_ok = true;
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i < W.level_dim(n); ++i) {
        GradedVector u = W.basis_vector(BasisRef{n, i});
        for (int m = -2; m <= 1; ++m) {
          if (n - m - 1 > N) continue;  // property not checkable in-window
          GradedVector got = W.act(U.vacuum(), m, u);
          GradedVector want = (m == -1) ? u : GradedVector(W.space());
          if (!(got == want) && vac_ok) {
            rep.add_fail("vacuum(m=" + std::to_string(m) + ",u=" + ref_str({n, i}) + ")",
                         "got " + vec_str(got, wlabel));
            vac_ok = false;
          }
        }
        GradedVector l0 = module_virasoro(W, 0, u);
        if (!(l0 == (W.conformal_weight() + Rational(n)) * u) && l0_ok) {
          rep.add_fail("L0-eigenvalue(u=" + ref_str({n, i}) + ")",
                       "L(0)u=" + vec_str(l0, wlabel));
          l0_ok = false;
        }
        rep.add_coverage("vector(" + ref_str({n, i}) + ")");
      }
    if (vac_ok) rep.add_pass("vacuum");
    if (l0_ok) rep.add_pass("L0-eigenvalue(lambda=" + W.conformal_weight().str() + ")");
  }

  std::vector<PairTask> pairs;
  for (int la = 0; la <= U.max_degree(); ++la)
    for (int ia = 0; ia < U.level_dim(la); ++ia)
      for (int lb = 0; lb <= U.max_degree(); ++lb)
        for (int ib = 0; ib < U.level_dim(lb); ++ib)
          pairs.push_back({BasisRef{la, ia}, BasisRef{lb, ib}});

  IdentitySweep sweep{
      U,
      opt,
      N,
      [&W](const GradedVector& a, int m, const GradedVector& v) { return W.act(a, m, v); },
      [&W](int n) { return W.level_dim(n); },
      wlabel,
      W.space()};

  struct PairResult {
    std::vector<CheckComponent> fails;
    std::vector<std::string> coverage, skips;
  };
  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    auto& r = results[idx];
    auto [aref, bref] = pairs[idx];
    GradedVector a = U.basis_vector(aref), b = U.basis_vector(bref);
    int la = aref.level;

    // Truncation on the module.
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i < W.level_dim(n); ++i) {
        GradedVector u = W.basis_vector(BasisRef{n, i});
        if (!W.act(a, la + n, u).is_zero()) {
          r.fails.push_back({"truncation(a=" + ref_str(aref) + ",u=" + ref_str({n, i}) + ")",
                             false, "nonzero below level 0"});
          return;
        }
      }
    r.coverage.push_back("truncation(a=" + ref_str(aref) + ")");

    sweep.commutator(aref, bref, r.fails, r.coverage, r.skips);
    sweep.iterate(aref, bref, r.fails, r.coverage, r.skips);

    // L(-1)-derivative on the module.
    if (la + 1 <= U.max_degree()) {
      GradedVector da = virasoro_mode(U, -1, a);
      for (int n = 0; n <= N; ++n)
        for (int i = 0; i < W.level_dim(n); ++i) {
          GradedVector u = W.basis_vector(BasisRef{n, i});
          for (int m = opt.mode_lo; m <= opt.mode_hi; ++m) {
            int lvl = la + 1 + n - m - 1;
            if (lvl < 0 || lvl > N) continue;
            if (!(W.act(da, m, u) == Rational(-m) * W.act(a, m - 1, u))) {
              r.fails.push_back({"L-1-derivative(a=" + ref_str(aref) + ",u=" +
                                     ref_str({n, i}) + ",m=" + std::to_string(m) + ")",
                                 false, "mismatch"});
              return;
            }
          }
        }
      r.coverage.push_back("L-1-derivative(a=" + ref_str(aref) + ")");
    }
  });

  bool pair_fail = false;
  for (auto& r : results) {
    for (auto& f : r.fails) {
      rep.add_component(f);
      pair_fail = true;
    }
    for (auto& c : r.coverage) rep.add_coverage(c);
    for (auto& s : r.skips) rep.add_skip(s);
  }
  if (!pair_fail) {
    rep.add_pass("truncation");
    rep.add_pass("commutator-identity");
    rep.add_pass("iterate-identity");
    rep.add_pass("L-1-derivative");
  }

  // Virasoro relation on the module with the parent central charge.
  {
    bool ok = true;
    const Rational& c = U.central_charge();
    for (int n = 0; n <= N && ok; ++n)
      for (int i = 0; i < W.level_dim(n) && ok; ++i) {
        GradedVector u = W.basis_vector(BasisRef{n, i});
        for (int p = opt.virasoro_lo; p <= opt.virasoro_hi && ok; ++p) {
          if (n - p > N) continue;
          for (int q = opt.virasoro_lo; q <= opt.virasoro_hi; ++q) {
            if (n - q > N || n - p - q > N || n - p - q < 0) continue;
            GradedVector lhs = module_virasoro(W, p, module_virasoro(W, q, u)) -
                               module_virasoro(W, q, module_virasoro(W, p, u));
            GradedVector rhs = Rational(p - q) * module_virasoro(W, p + q, u);
            if (p + q == 0) {
              Rational central = Rational(p) * Rational(p) * Rational(p) - Rational(p);
              rhs += (central / Rational(12)) * c * u;
            }
            if (!(lhs == rhs)) {
              rep.add_fail("virasoro(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                               ",u=" + ref_str({n, i}) + ")",
                           "lhs=" + vec_str(lhs, wlabel) + " rhs=" + vec_str(rhs, wlabel));
              ok = false;
              break;
            }
          }
        }
        rep.add_coverage("virasoro(" + ref_str({n, i}) + ")");
      }
    if (ok) rep.add_pass("virasoro-relation(c=" + U.central_charge().str() + ")");
  }

  return rep;
}

}  // namespace vybe
