#include <doctest.h>

#include "oracle_util.hpp"
#include "vybe/graded.hpp"

using namespace vybe;

namespace {
GradedVector unit(const SpaceId& s, int level, int index) {
  return GradedVector::unit(s, BasisRef{level, index});
}
}  // namespace

TEST_CASE("linear_combine: inverses, distributivity, exactness") {
  SpaceId V = "testspace";
  GradedVector v = unit(V, 1, 0);
  CHECK(linear_combine({Rational(1), Rational(-1)}, {v, v}).is_zero());
  GradedVector a2 = unit(V, 2, 0);
  CHECK(linear_combine({Rational(2), Rational(3)}, {a2, a2}) == Rational(5) * a2);
  CHECK(linear_combine({Rational(1, 2), Rational(1, 3)}, {a2, a2}) == Rational(5, 6) * a2);
  GradedVector w = unit("otherspace", 1, 0);
  CHECK_THROWS(linear_combine({Rational(1), Rational(1)}, {v, w}));
}

TEST_CASE("zero purging makes equality structural") {
  SpaceId V = "testspace";
  GradedVector v(V);
  v.add(BasisRef{1, 0}, Rational(1, 2));
  v.add(BasisRef{1, 0}, Rational(-1, 2));
  CHECK(v.is_zero());
  CHECK(v.terms().empty());
  CHECK(v == GradedVector(V));
}

TEST_CASE("dual pairing: delta on dual bases, level-orthogonal, bilinear") {
  SpaceId V = "testspace";
  SpaceId Vd = dual_space_of(V);
  GradedVector f = unit(Vd, 1, 0);
  CHECK(dual_pairing(f, unit(V, 1, 0)) == Rational(1));
  CHECK(dual_pairing(f, unit(V, 1, 1)) == Rational(0));
  CHECK(dual_pairing(f, unit(V, 2, 0)) == Rational(0));
  CHECK(dual_pairing(Rational(2) * unit(Vd, 2, 0), Rational(3) * unit(V, 2, 0)) ==
        Rational(6));
  CHECK_THROWS(dual_pairing(unit(V, 1, 0), unit(V, 1, 0)));

  oracle::Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    GradedVector x(V), y(V), g(Vd);
    for (int i = 0; i < 3; ++i) {
      x.add(BasisRef{rng.int_in(0, 2), rng.int_in(0, 1)}, rng.rational());
      y.add(BasisRef{rng.int_in(0, 2), rng.int_in(0, 1)}, rng.rational());
      g.add(BasisRef{rng.int_in(0, 2), rng.int_in(0, 1)}, rng.rational());
    }
    CHECK(dual_pairing(g, x + y) == dual_pairing(g, x) + dual_pairing(g, y));
  }
}

TEST_CASE("levelwise matrix application commutes with linear combinations") {
  SpaceId V = "testspace", W = "targetspace";
  LevelwiseMatrix T(V, W, 1);
  T.set_block(1, {{Rational(2), Rational(0)}, {Rational(1), Rational(3)}});
  oracle::Rng rng(7);
  for (int rep = 0; rep < 30; ++rep) {
    GradedVector x(V), y(V);
    x.add(BasisRef{1, rng.int_in(0, 1)}, rng.rational());
    y.add(BasisRef{1, rng.int_in(0, 1)}, rng.rational());
    Rational c = rng.rational(), d = rng.rational();
    CHECK(T.apply(linear_combine({c, d}, {x, y})) ==
          linear_combine({c, d}, {T.apply(x), T.apply(y)}));
  }
  // absent block acts as zero
  GradedVector z(V);
  z.add(BasisRef{0, 0}, Rational(4));
  CHECK(T.apply(z).is_zero());
  // degree shift moves levels
  GradedVector e = GradedVector::unit(V, BasisRef{1, 0});
  CHECK(T.apply(e).terms().begin()->first.level == 2);
}
