#include <benchmark/benchmark.h>

#include "vybe/axioms.hpp"
#include "vybe/semidirect.hpp"
#include "vybe/yang_baxter.hpp"

using namespace vybe;

namespace {

CurrentVOA heisenberg(int N) {
  return CurrentVOA(LieAlgebraData::abelian(1, identity_matrix(1)), Rational(1), N);
}

void BM_ModeTableFill(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CurrentVOA H = heisenberg(N);
    // fill every in-window basis-pair mode
    for (int la = 0; la <= N; ++la)
      for (int ia = 0; ia < H.level_dim(la); ++ia)
        for (int lb = 0; lb <= N; ++lb)
          for (int ib = 0; ib < H.level_dim(lb); ++ib)
            for (int m = la + lb - N - 1; m <= la + lb; ++m)
              benchmark::DoNotOptimize(H.mode(H.basis_vector({la, ia}), m,
                                              H.basis_vector({lb, ib})));
  }
}
BENCHMARK(BM_ModeTableFill)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VoaAxioms(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CurrentVOA H = heisenberg(N);
    benchmark::DoNotOptimize(verify_voa_axioms(H).passed());
  }
}
BENCHMARK(BM_VoaAxioms)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VoybeResidualSemidirect(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  CurrentVOA H = heisenberg(N);
  AdjointModule W(H);
  ContragredientModule Wp(W);
  SemidirectVOA U(H, W, Wp);
  LevelwiseMatrix T(W.space(), H.space(), 0);
  T.set_block(0, {{Rational(1, 3)}});
  T.set_block(1, {{Rational(2)}});
  DiagonalTensor r = build_r_from_T(U, T);
  for (auto _ : state) benchmark::DoNotOptimize(voybe_residual(U, r, 0).alpha.size());
}
BENCHMARK(BM_VoybeResidualSemidirect)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RelativeRboCheck(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  CurrentVOA H = heisenberg(N);
  AdjointModule W(H);
  LevelwiseMatrix T(W.space(), H.space(), 0);
  T.set_block(2, {{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(check_relative_rbo(H, W, T, 1).passed());
}
BENCHMARK(BM_RelativeRboCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
