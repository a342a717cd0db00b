#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vybe/rational.hpp"

namespace vybe {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(int n);
/// Inverse by exact Gaussian elimination; throws std::domain_error if singular.
RationalMatrix invert(const RationalMatrix& m);
bool is_invertible(const RationalMatrix& m);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);

/// Finite-dimensional Lie algebra with an invariant symmetric bilinear form,
/// the input datum for current-algebra constructions. Structure constants are
/// validated at construction: antisymmetry, the Jacobi identity, symmetry and
/// invariance of the form, all exactly.
class LieAlgebraData {
 public:
  /// brackets[i][j] = coordinates of [x_i, x_j] in the basis.
  LieAlgebraData(int dim, std::vector<std::vector<std::vector<Rational>>> brackets,
                 RationalMatrix form, std::optional<Rational> h_dual,
                 std::vector<std::string> names = {});

  static LieAlgebraData abelian(int dim, RationalMatrix form);
  /// Basis e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h and the normalized
  /// invariant form kappa(h,h)=2, kappa(e,f)=1 (dual Coxeter number 2).
  static LieAlgebraData sl2();

  int dim() const { return dim_; }
  bool abelian_q() const { return abelian_; }
  const RationalMatrix& form() const { return form_; }
  bool form_nondegenerate() const { return form_invertible_; }
  const RationalMatrix& form_inverse() const;
  /// Dual Coxeter number for the configured form: half the adjoint Casimir
  /// eigenvalue. Validated against a configured value when one was supplied.
  const Rational& h_dual() const { return h_dual_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Coordinates of [x_i, x_j].
  const std::vector<Rational>& bracket(int i, int j) const { return brackets_[i][j]; }
  Rational structure_constant(int i, int j, int k) const { return brackets_[i][j][k]; }
  Rational form_entry(int i, int j) const { return form_[i][j]; }

  /// Bracket of arbitrary coordinate vectors.
  std::vector<Rational> bracket_vec(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) const;

 private:
  int dim_;
  std::vector<std::vector<std::vector<Rational>>> brackets_;
  RationalMatrix form_;
  RationalMatrix form_inv_;
  bool form_invertible_ = false;
  bool abelian_ = false;
  Rational h_dual_;
  std::vector<std::string> names_;
};

}  // namespace vybe
