#include <doctest.h>

#include "oracle_util.hpp"
#include "vybe/lie_reduction.hpp"
#include "vybe/semidirect.hpp"

using namespace vybe;

namespace {
CurrentVOA heisenberg(int N) {
  return CurrentVOA(LieAlgebraData::abelian(1, identity_matrix(1)), Rational(1), N);
}

std::map<std::pair<int, int>, Rational> entries_of(const LieTensor& R) { return R.entries; }
}  // namespace

TEST_CASE("level-one extraction: abelian for the Heisenberg, sl2 table for sl2") {
  CurrentVOA H = heisenberg(3);
  LieLevelOne gh = level1_lie(H);
  CHECK(gh.dim == 1);
  CHECK(gh.quasi_primary);
  CHECK(gh.brackets[0][0][0].is_zero());

  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  LieLevelOne gs = level1_lie(S);
  CHECK(gs.dim == 3);
  CHECK(gs.quasi_primary);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(gs.brackets[i][j][k] == S.lie().structure_constant(i, j, k));
}

TEST_CASE("level-one module: dual action antisymmetry") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  AdjointModule W(S);
  ContragredientModule Wp(W);
  LieModuleOne M = level1_module(S, W, Wp);
  CHECK(M.quasi_primary);
  for (int a = 0; a < M.dim_g; ++a)
    for (int i = 0; i < M.dim_w; ++i)
      for (int j = 0; j < M.dim_w; ++j)
        CHECK(M.rho_star[a][i][j] == -M.rho[a][j][i]);
  // representation property rho([a,b]) = [rho(a), rho(b)]
  LieLevelOne g = level1_lie(S);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      RationalMatrix want(M.dim_w, std::vector<Rational>(M.dim_w, Rational(0)));
      for (int k = 0; k < 3; ++k) {
        if (g.brackets[a][b][k].is_zero()) continue;
        for (int i = 0; i < M.dim_w; ++i)
          for (int j = 0; j < M.dim_w; ++j) want[i][j] += g.brackets[a][b][k] * M.rho[k][i][j];
      }
      RationalMatrix got = matmul(M.rho[a], M.rho[b]);
      RationalMatrix ba = matmul(M.rho[b], M.rho[a]);
      for (int i = 0; i < M.dim_w; ++i)
        for (int j = 0; j < M.dim_w; ++j) CHECK(got[i][j] - ba[i][j] == want[i][j]);
    }
}

TEST_CASE("classical brackets: zero and abelian inputs vanish") {
  CurrentVOA H = heisenberg(3);
  LieLevelOne g = level1_lie(H);
  LieTensor R;
  R.carrier = "lie@" + H.space();
  R.dim = 1;
  CHECK(cybe_brackets(g, R).total().is_zero());
  R.add(0, 0, Rational(5));  // any tensor over an abelian algebra
  CHECK(cybe_brackets(g, R).total().is_zero());
}

TEST_CASE("classical brackets agree with the word-expansion oracle on sl2") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  LieLevelOne g = level1_lie(S);
  oracle::Rng rng(606);
  for (int rep = 0; rep < 10; ++rep) {
    LieTensor R;
    R.carrier = "lie@" + S.space();
    R.dim = 3;
    for (int k = 0; k < 3; ++k) {
      int i = rng.int_in(0, 2), j = rng.int_in(0, 2);
      Rational c = rng.rational();
      R.add(i, j, c);
      R.add(j, i, -c);
    }
    oracle::TripleMap brute = oracle::cybe_brute(S.lie(), entries_of(R));
    LieTriple got = cybe_brackets(g, R).total();
    CHECK(got.entries == brute);
  }

  // frozen fixture: R = e (x) h - h (x) e solves the classical equation
  LieTensor R;
  R.carrier = "lie@" + S.space();
  R.dim = 3;
  R.add(0, 1, Rational(1));
  R.add(1, 0, Rational(-1));
  CHECK(cybe_brackets(g, R).total().is_zero());
  CHECK(oracle::cybe_brute(S.lie(), entries_of(R)).empty());

  // and a fixture that does not: R = e (x) f - f (x) e
  LieTensor Rf;
  Rf.carrier = R.carrier;
  Rf.dim = 3;
  Rf.add(0, 2, Rational(1));
  Rf.add(2, 0, Rational(-1));
  LieTriple bad = cybe_brackets(g, Rf).total();
  CHECK_FALSE(bad.is_zero());
  CHECK(bad.entries == oracle::cybe_brute(S.lie(), entries_of(Rf)));
}

TEST_CASE("bracket expansion is equivariant under algebra automorphisms") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  LieLevelOne g = level1_lie(S);
  // phi = exp(t ad e): e -> e, h -> h - 2t e, f -> f + t h - t^2 e
  for (const Rational& t : {Rational(1), Rational(2), Rational(-1, 2)}) {
    RationalMatrix phi = identity_matrix(3);
    phi[0][1] = Rational(-2) * t;           // h picks up -2t e
    phi[0][2] = Rational(-1) * t * t;       // f picks up -t^2 e
    phi[1][2] = t;                          // f picks up t h
    // verify phi is an automorphism: [phi x, phi y] = phi [x, y]
    auto apply_phi = [&](const std::vector<Rational>& v) {
      std::vector<Rational> out(3, Rational(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += phi[i][j] * v[j];
      return out;
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::vector<Rational> ei(3, Rational(0)), ej(3, Rational(0));
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        auto lhs = g.bracket_vec(apply_phi(ei), apply_phi(ej));
        auto rhs = apply_phi(g.brackets[i][j]);
        for (int k = 0; k < 3; ++k) REQUIRE(lhs[k] == rhs[k]);
      }
    oracle::Rng rng(13);
    for (int rep = 0; rep < 5; ++rep) {
      LieTensor R;
      R.carrier = "lie@" + S.space();
      R.dim = 3;
      int i = rng.int_in(0, 2), j = rng.int_in(0, 2);
      Rational c = rng.nonzero_rational();
      R.add(i, j, c);
      R.add(j, i, -c);
      LieTensor phiR;
      phiR.carrier = R.carrier;
      phiR.dim = 3;
      for (auto& [ij, cc] : R.entries)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) phiR.add(a, b, cc * phi[a][ij.first] * phi[b][ij.second]);
      LieTriple lhs = cybe_brackets(g, phiR).total();
      LieTriple rhs;
      for (auto& [idx, cc] : cybe_brackets(g, R).total().entries)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int cidx = 0; cidx < 3; ++cidx)
              rhs.add({a, b, cidx},
                      cc * phi[a][idx[0]] * phi[b][idx[1]] * phi[cidx][idx[2]]);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("lie O-operator checker: trivial passes and the coadjoint pipeline") {
  CurrentVOA H = heisenberg(3);
  LieLevelOne gh = level1_lie(H);
  // any map into an abelian algebra with the trivial action passes
  std::vector<RationalMatrix> trivial = {RationalMatrix(1, {Rational(0)})};
  RationalMatrix T1(1, std::vector<Rational>(1, Rational(7)));
  CHECK(check_lie_o_operator(gh, trivial, T1).passed());
  // zero map passes over sl2 with the coadjoint action
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  LieLevelOne gs = level1_lie(S);
  std::vector<RationalMatrix> coad;
  for (int a = 0; a < 3; ++a) {
    RationalMatrix ad = gs.ad(a);
    RationalMatrix rs(3, std::vector<Rational>(3, Rational(0)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rs[i][j] = -ad[j][i];
    coad.push_back(rs);
  }
  RationalMatrix zero(3, std::vector<Rational>(3, Rational(0)));
  CHECK(check_lie_o_operator(gs, coad, zero).passed());
  // the contraction map of the e^h solution is an O-operator w.r.t. the
  // coadjoint action (this pins the Kupershmidt sign)
  LieTensor R;
  R.carrier = "lie@" + S.space();
  R.dim = 3;
  R.add(0, 1, Rational(1));
  R.add(1, 0, Rational(-1));
  RationalMatrix TR = lie_tensor_to_map(R);
  CHECK(check_lie_o_operator(gs, coad, TR).passed());
  // flipping a sign in T_R breaks it
  RationalMatrix bad = TR;
  bad[0][1] = -bad[0][1];
  CHECK_FALSE(check_lie_o_operator(gs, coad, bad).all_components_pass());
}

TEST_CASE("reduction naturality: maps and tensors reduce compatibly") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  oracle::Rng rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    DiagonalTensor r = oracle::random_skew_tensor(S, rng, 2);
    LevelwiseMatrix Tr = tensor_to_map(S, r);
    CHECK(reduce_map(S, Tr) == lie_tensor_to_map(reduce_tensor(S, r)));
  }
  // tensors supported above level one reduce to zero
  DiagonalTensor high(S.space());
  high.add(2, 0, 1, Rational(1));
  high.add(2, 1, 0, Rational(-1));
  CHECK(reduce_tensor(S, high).is_zero());
}

TEST_CASE("verify_reduction: degenerate abelian case passes") {
  CurrentVOA H = heisenberg(3);
  DiagonalTensor zero(H.space());
  ReductionContext ctx;
  ctx.U = &H;
  ctx.r = &zero;
  CHECK(verify_reduction(ctx, 0).passed());
}

TEST_CASE("verify_reduction on sl2: solution fixture and random sweeps") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 3);
  DiagonalTensor r(S.space());
  r.add(1, 0, 1, Rational(1));
  r.add(1, 1, 0, Rational(-1));
  ReductionContext ctx;
  ctx.U = &S;
  ctx.r = &r;
  CheckReport rep = verify_reduction(ctx, 0);
  CHECK(rep.passed());

  oracle::Rng rng(888);
  for (int i = 0; i < 4; ++i) {
    DiagonalTensor gamma(S.space());
    gamma.add(1, rng.int_in(0, 2), rng.int_in(0, 2), rng.nonzero_rational());
    gamma.add(1, rng.int_in(0, 2), rng.int_in(0, 2), rng.rational());
    DiagonalTensor rr = skewsymmetrize(gamma);
    ReductionContext c2;
    c2.U = &S;
    c2.r = &rr;
    CHECK(verify_reduction(c2, 0).passed());
  }
}

TEST_CASE("verify_reduction on the semidirect carrier with a map") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  AdjointModule W(S);
  ContragredientModule Wp(W);
  SemidirectVOA U(S, W, Wp);
  oracle::Rng rng(99);
  // extension of a level-one O-operator w.r.t. rho: from the e^h classical
  // solution T_R is an O-operator for the coadjoint, so here instead take the
  // zero level-one block (always an O-operator) plus a vacuum component,
  // and a nontrivial one from the classical solution transported to rho.
  LevelwiseMatrix T(W.space(), S.space(), 0);
  T.set_block(0, {{rng.rational()}});
  ReductionContext ctx;
  ctx.U = &U;
  ctx.T = &T;
  ctx.sd = &U;
  ctx.W = &W;
  ctx.Wp = &Wp;
  CheckReport rep = verify_reduction(ctx, 0);
  CHECK(rep.passed());
}

TEST_CASE("quasi-primary preconditions are enforced") {
  // A Fock module with nonzero label has L(1)-nonkilled level one; the
  // reduction path must reject it before producing wrong tables.
  CurrentVOA H = heisenberg(3);
  FockModule W(H, Rational(2));
  ContragredientModule Wp(W);
  CHECK_FALSE(level1_module(H, W, Wp).quasi_primary);
  DiagonalTensor zero(H.space());
  ReductionContext ctx;
  ctx.U = &H;
  ctx.r = &zero;
  ctx.W = &W;
  ctx.Wp = &Wp;
  CHECK_THROWS(verify_reduction(ctx, 0));
}
