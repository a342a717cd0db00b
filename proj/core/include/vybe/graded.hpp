#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vybe/rational.hpp"

namespace vybe {

/// Identifies which graded carrier a vector lives in. Structural: two carriers
/// built from the same data produce equal tags. The graded-dual carrier of a
/// space tagged X is tagged X + "'".
using SpaceId = std::string;

inline SpaceId dual_space_of(const SpaceId& s) { return s + "'"; }

/// Normally ordered creation monomial: factors (generator, mode) with mode <= -1,
/// sorted by mode descending, generator index ascending as tie-break. The empty
/// monomial is the top vector of whatever carrier interprets it.
struct PBWMonomial {
  std::vector<std::pair<int, int>> factors;  // (gen, mode)

  int level() const {
    int w = 0;
    for (auto& [g, m] : factors) w -= m;
    return w;
  }
  bool empty() const { return factors.empty(); }

  /// (g, m) belongs before (h, p) in normal order?
  static bool factor_leq(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.second != b.second) return a.second > b.second;  // mode descending
    return a.first <= b.first;                             // generator ascending
  }
  bool is_normal_order() const {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      if (!factor_leq(factors[i], factors[i + 1])) return false;
    return true;
  }

  auto operator<=>(const PBWMonomial&) const = default;

  /// e.g. "a(-1)b(-2)" with single-letter names, or "x0(-1)" fallback.
  std::string str(const std::vector<std::string>& gen_names, const std::string& top) const;
};

/// Position of a basis vector inside a carrier: graded level plus index into
/// the carrier's canonical basis order at that level.
struct BasisRef {
  int level = 0;
  int index = 0;
  auto operator<=>(const BasisRef&) const = default;
};

/// Exact sparse element of a graded carrier, in basis coordinates.
/// Zero coefficients are purged on every write, so operator== is semantic
/// equality. Arithmetic across different carriers throws.
class GradedVector {
 public:
  GradedVector() = default;
  explicit GradedVector(SpaceId space) : space_(std::move(space)) {}

  static GradedVector unit(SpaceId space, BasisRef ref) {
    GradedVector v(std::move(space));
    v.add(ref, Rational(1));
    return v;
  }

  const SpaceId& space() const { return space_; }
  const std::map<BasisRef, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c onto the coefficient at ref, purging if the sum is zero.
  void add(BasisRef ref, const Rational& c);

  Rational coeff(BasisRef ref) const {
    auto it = terms_.find(ref);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Sub-sum of terms at graded level n.
  GradedVector component(int n) const;
  /// True when all terms sit at a single level (the zero vector is homogeneous).
  bool is_homogeneous() const;
  /// Level of a nonzero homogeneous vector; throws on zero or mixed input.
  int level() const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& operator*=(const Rational& c);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const Rational& c, GradedVector v) { return v *= c; }

  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  SpaceId space_;
  std::map<BasisRef, Rational> terms_;
};

/// Exact linear combination sum_i coeffs[i] * vecs[i]. All vectors must share
/// one space tag; an empty list is rejected (no tag to give the result).
GradedVector linear_combine(const std::vector<Rational>& coeffs,
                            const std::vector<GradedVector>& vecs);

/// Pairing of a graded-dual vector f against v: the dual basis at each level is
/// the coordinate dual of the source basis, so <(b_i)*, b_j> = delta_ij and the
/// pairing is the levelwise coordinate contraction. f must be tagged as the
/// dual of v's carrier.
Rational dual_pairing(const GradedVector& f, const GradedVector& v);

/// Family of per-level matrix blocks with a fixed degree shift d: the block at
/// level n maps source level n to target level n+d. Absent block = zero.
/// Block layout: rows index the target basis, columns the source basis.
class LevelwiseMatrix {
 public:
  LevelwiseMatrix() = default;
  LevelwiseMatrix(SpaceId source, SpaceId target, int degree_shift)
      : source_(std::move(source)), target_(std::move(target)), shift_(degree_shift) {}

  const SpaceId& source() const { return source_; }
  const SpaceId& target() const { return target_; }
  int degree_shift() const { return shift_; }

  void set_block(int source_level, std::vector<std::vector<Rational>> block);
  bool has_block(int source_level) const { return blocks_.count(source_level) > 0; }
  const std::vector<std::vector<Rational>>& block(int source_level) const;
  /// Entry (row, col) of the block at source_level; zero when the block is absent.
  Rational entry(int source_level, int row, int col) const;
  const std::map<int, std::vector<std::vector<Rational>>>& blocks() const { return blocks_; }

  /// Applies to a vector in the source carrier; highest source level with a
  /// block bound must cover the vector's support (absent blocks act as zero).
  GradedVector apply(const GradedVector& v) const;

 private:
  SpaceId source_, target_;
  int shift_ = 0;
  std::map<int, std::vector<std::vector<Rational>>> blocks_;
};

}  // namespace vybe
