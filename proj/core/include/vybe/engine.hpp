#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "vybe/graded.hpp"
#include "vybe/lie_algebra.hpp"

namespace vybe {

/// Sparse element in monomial coordinates, the engine's working currency.
using MonoVec = std::map<PBWMonomial, Rational>;

/// Computational core shared by the current-algebra VOA and its highest-weight
/// modules: enumerates the PBW basis per level up to the truncation degree and
/// evaluates current modes x_g(m) and composite modes a_m by exact
/// normal-ordering against [x(m), y(p)] = [x,y](m+p) + m k kappa(x,y) d_{m+p,0}.
///
/// The top vector satisfies x_g(m) top = 0 for m > 0 and
/// x_g(0) top = top_eigen[g] * top (the vacuum is the all-zero case).
class CurrentEngine {
 public:
  CurrentEngine(const LieAlgebraData* lie, Rational level_k, int max_degree,
                std::vector<Rational> top_eigen, SpaceId space, std::string top_label);

  const SpaceId& space() const { return space_; }
  int max_degree() const { return max_degree_; }
  const LieAlgebraData& lie() const { return *lie_; }
  const Rational& level_k() const { return level_k_; }

  int level_dim(int n) const {
    if (n < 0 || n > max_degree_) return 0;
    return static_cast<int>(basis_[n].size());
  }
  const PBWMonomial& monomial(BasisRef ref) const { return basis_[ref.level][ref.index]; }
  BasisRef ref_of(const PBWMonomial& m) const;
  std::string label(BasisRef ref) const {
    return monomial(ref).str(lie_->names(), top_label_);
  }

  GradedVector to_vector(const MonoVec& mv) const;
  GradedVector monomial_vector(const PBWMonomial& m) const {
    return GradedVector::unit(space_, ref_of(m));
  }
  GradedVector top() const { return monomial_vector(PBWMonomial{}); }

  /// x_g(m) applied to a vector in this carrier. Exact; throws OutOfWindowError
  /// if the result would land above the truncation degree.
  GradedVector generator_action(int g, int m, const GradedVector& v) const;

  /// Composite mode a_m b: a lives in the VOA whose monomial structure is
  /// `voa` (the engine over the vacuum), b lives in this carrier. Peels the
  /// leading factor of a and recurses through the iterate identity
  /// (x_{-n} a')_m = sum_i (-1)^i C(-n,i) (x(-n-i) a'_{m+i} - (-1)^n a'_{-n+m-i} x(i)).
  GradedVector mode(const CurrentEngine& voa, const GradedVector& a, int m,
                    const GradedVector& b) const;

 private:
  MonoVec normal_order(std::vector<std::pair<int, int>> word, Rational coeff) const;
  const GradedVector& basis_mode(const CurrentEngine& voa, BasisRef a, int m, BasisRef b) const;
  GradedVector mode_unchecked(const CurrentEngine& voa, const GradedVector& a, int m,
                              const GradedVector& b) const;

  const LieAlgebraData* lie_;
  Rational level_k_;
  int max_degree_;
  std::vector<Rational> top_eigen_;
  SpaceId space_;
  std::string top_label_;
  std::vector<std::vector<PBWMonomial>> basis_;
  std::vector<std::map<PBWMonomial, int>> index_;

  mutable std::shared_mutex memo_mu_;
  mutable std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<GradedVector>> memo_;
};

}  // namespace vybe
