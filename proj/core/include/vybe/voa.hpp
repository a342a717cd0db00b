#pragma once

#include <memory>
#include <string>

#include "vybe/engine.hpp"
#include "vybe/graded.hpp"
#include "vybe/lie_algebra.hpp"

namespace vybe {

/// Truncated Z>=0-graded vertex operator algebra: per-level bases up to the
/// truncation degree, exact mode actions, vacuum, Virasoro vector, central
/// charge. Both the current-algebra construction and the semidirect product
/// implement this surface; every checker is written against it.
class VertexAlgebra {
 public:
  virtual ~VertexAlgebra() = default;
  virtual const SpaceId& space() const = 0;
  virtual int max_degree() const = 0;
  virtual int level_dim(int n) const = 0;
  virtual GradedVector mode(const GradedVector& a, int m, const GradedVector& b) const = 0;
  virtual const GradedVector& vacuum() const = 0;
  virtual const GradedVector& virasoro_vector() const = 0;
  virtual const Rational& central_charge() const = 0;
  virtual std::string basis_label(BasisRef ref) const = 0;

  GradedVector basis_vector(BasisRef ref) const { return GradedVector::unit(space(), ref); }
  int total_dim() const {
    int d = 0;
    for (int n = 0; n <= max_degree(); ++n) d += level_dim(n);
    return d;
  }
};

/// Mode query (a, m, b); on homogeneous inputs the result is homogeneous of
/// weight wt(a) + wt(b) - m - 1.
struct ModeQuery {
  GradedVector a;
  int m = 0;
  GradedVector b;
};
GradedVector evaluate(const VertexAlgebra& U, const ModeQuery& q);

/// L(n) b = omega_{n+1} b.
GradedVector virasoro_mode(const VertexAlgebra& U, int n, const GradedVector& b);

/// a'_m b: the mode of Y'(a, z) b = Y(e^{zL(1)} (-z^{-2})^{L(0)} a, z^{-1}) b,
/// in closed form sum_{j>=0} (-1)^{wt a}/j! (L(1)^j a)_{2 wt a - m - j - 2} b.
/// a must be homogeneous.
GradedVector primed_mode(const VertexAlgebra& U, const GradedVector& a, int m,
                         const GradedVector& b);

/// a'op_m b: the mode of Y'op(a, z) b = Y(e^{-zL(1)} (-z^{-2})^{L(0)} a, -z^{-1}) e^{zL(1)} b,
/// in closed form sum_{i,j>=0} (-1)^{wt a + m + i + 1}/(i! j!)
/// (L(1)^j a)_{2 wt a - m - i - j - 2} L(1)^i b. a must be homogeneous.
GradedVector primed_op_mode(const VertexAlgebra& U, const GradedVector& a, int m,
                            const GradedVector& b);

enum class MDotKind { plain, primed, primed_op };

/// The three m-dot products: plain a._m b = b_m a, primed a.'_m b = a'_m b,
/// primed_op a.'op_m b = b'op_m a. Note the argument flips on plain and primed_op.
GradedVector m_dot(const VertexAlgebra& U, MDotKind kind, const GradedVector& alpha, int m,
                   const GradedVector& beta);

/// u(m) a = sum_{j>=0} (-1)^{m+j+1} L(-1)^j / j!  a_{m+j} u, the adjoint-module
/// companion operator (skewsymmetry formula), valued back in U.
GradedVector skew_mode(const VertexAlgebra& U, const GradedVector& u, int m,
                       const GradedVector& a);

/// Truncated current-algebra VOA over a finite-dimensional Lie algebra with
/// invariant form and level: free-boson/Heisenberg tower when abelian, the
/// universal affine vertex algebra otherwise. omega is the Sugawara vector
/// 1/(2(k + h_dual)) sum kappa^{ab} x_a(-1) x_b(-1) vac and
/// c = k dim / (k + h_dual).
class CurrentVOA final : public VertexAlgebra {
 public:
  CurrentVOA(LieAlgebraData lie, Rational level, int max_degree);

  const SpaceId& space() const override { return engine_->space(); }
  int max_degree() const override { return engine_->max_degree(); }
  int level_dim(int n) const override { return engine_->level_dim(n); }
  GradedVector mode(const GradedVector& a, int m, const GradedVector& b) const override {
    return engine_->mode(*engine_, a, m, b);
  }
  const GradedVector& vacuum() const override { return vacuum_; }
  const GradedVector& virasoro_vector() const override { return omega_; }
  const Rational& central_charge() const override { return c_; }
  std::string basis_label(BasisRef ref) const override { return engine_->label(ref); }

  const LieAlgebraData& lie() const { return lie_; }
  const Rational& level() const { return level_; }
  const CurrentEngine& engine() const { return *engine_; }

  /// The state x_g(-1) vac of the g-th generator.
  GradedVector generator_state(int g) const;
  GradedVector monomial_vector(const PBWMonomial& m) const {
    return engine_->monomial_vector(m);
  }

  /// Rank-1 Heisenberg in the (alpha|alpha) = 1 normalization (k kappa = 1)?
  bool is_heisenberg_rank1() const;

 private:
  LieAlgebraData lie_;
  Rational level_;
  std::unique_ptr<CurrentEngine> engine_;
  GradedVector vacuum_;
  GradedVector omega_;
  Rational c_;
};

/// The unique invariant bilinear form with (vac|vac) = 1, as per-level Gram
/// matrices computed from the adjoint relation (x(-n) a' | b) = -(a' | x(n) b)
/// for quasi-primary weight-1 generators. Symmetry, window invariance
/// ((a_m b | c) = (b | a'_m c)) and nondegeneracy are verified; throws when the
/// form is degenerate on some level.
struct InvariantForm {
  std::vector<RationalMatrix> gram;  // gram[n] on level n
  Rational pair(const GradedVector& a, const GradedVector& b) const;
};
InvariantForm canonical_invariant_form(const CurrentVOA& U);

}  // namespace vybe
