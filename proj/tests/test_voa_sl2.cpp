#include <doctest.h>

#include "oracle_util.hpp"
#include "vybe/axioms.hpp"
#include "vybe/voa.hpp"

using namespace vybe;

TEST_CASE("universal affine sl2 at level 1: dimensions are PBW counts") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 3);
  auto counts = oracle::monomial_counts(3, 3);
  for (int n = 0; n <= 3; ++n) CHECK(S.level_dim(n) == counts[n]);
  CHECK(S.level_dim(1) == 3);
  CHECK(S.level_dim(2) == 9);
}

TEST_CASE("sl2 level 1 central charge is 1") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  CHECK(S.central_charge() == Rational(1));  // k dim/(k + h_dual) = 3/3
  CurrentVOA S2(LieAlgebraData::sl2(), Rational(2), 2);
  CHECK(S2.central_charge() == Rational(3, 2));
}

TEST_CASE("critical level is rejected") {
  CHECK_THROWS(CurrentVOA(LieAlgebraData::sl2(), Rational(-2), 2));
}

TEST_CASE("zero modes of currents realize the bracket") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  const auto& lie = S.lie();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      GradedVector x = S.generator_state(i), y = S.generator_state(j);
      GradedVector want(S.space());
      for (int k = 0; k < 3; ++k)
        want += lie.structure_constant(i, j, k) * S.generator_state(k);
      CHECK(S.mode(x, 0, y) == want);
      // x(1) y(-1)vac = k kappa(x,y) vac
      CHECK(S.mode(x, 1, y) == lie.form_entry(i, j) * S.vacuum());
    }
}

TEST_CASE("sl2 axiom suite passes in a small window") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  CheckReport rep = verify_voa_axioms(S);
  CHECK(rep.passed());
}

TEST_CASE("level-1 currents are quasi-primary") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  for (int i = 0; i < 3; ++i) CHECK(virasoro_mode(S, 1, S.generator_state(i)).is_zero());
}

TEST_CASE("level-one dot products all reduce to the bracket") {
  CurrentVOA S(LieAlgebraData::sl2(), Rational(1), 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      GradedVector a = S.generator_state(i), b = S.generator_state(j);
      GradedVector ba = S.mode(b, 0, a);  // [b, a]
      CHECK(m_dot(S, MDotKind::plain, a, 0, b) == ba);
      CHECK(m_dot(S, MDotKind::primed, a, 0, b) == ba);
      CHECK(m_dot(S, MDotKind::primed_op, a, 0, b) == ba);
    }
}
