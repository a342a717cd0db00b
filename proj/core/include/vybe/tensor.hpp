#pragma once

#include <array>
#include <map>
#include <utility>

#include "vybe/graded.hpp"

namespace vybe {

/// Diagonal two-tensor: an element of prod_t U(t) (x) U(t), stored canonically
/// as per-level coefficient matrices indexed by basis pairs, so zero-testing
/// and equality are structural. Pairs added through vectors are expanded and
/// merged immediately.
class DiagonalTensor {
 public:
  DiagonalTensor() = default;
  explicit DiagonalTensor(SpaceId carrier) : carrier_(std::move(carrier)) {}

  const SpaceId& carrier() const { return carrier_; }
  bool is_zero() const { return levels_.empty(); }
  int max_level() const { return levels_.empty() ? -1 : levels_.rbegin()->first; }

  void add(int level, int i, int j, const Rational& c);
  Rational coeff(int level, int i, int j) const;
  /// Adds coeff * left (x) right; both vectors must be homogeneous of the same
  /// level in this carrier (diagonality).
  void add_pair(const GradedVector& left, const GradedVector& right, const Rational& coeff);

  const std::map<int, std::map<std::pair<int, int>, Rational>>& levels() const {
    return levels_;
  }

  DiagonalTensor sigma() const;  // the flip left <-> right
  bool is_skewsymmetric() const;

  DiagonalTensor& operator+=(const DiagonalTensor& o);
  DiagonalTensor& operator-=(const DiagonalTensor& o);
  DiagonalTensor& operator*=(const Rational& c);
  friend DiagonalTensor operator-(DiagonalTensor a, const DiagonalTensor& b) { return a -= b; }
  friend bool operator==(const DiagonalTensor& a, const DiagonalTensor& b) {
    return a.carrier_ == b.carrier_ && a.levels_ == b.levels_;
  }

 private:
  SpaceId carrier_;
  std::map<int, std::map<std::pair<int, int>, Rational>> levels_;
};

/// gamma - sigma(gamma); the output satisfies sigma(r) = -r exactly.
DiagonalTensor skewsymmetrize(const DiagonalTensor& gamma);

/// Element of U(p1) (x) U(p2) (x) U(p3) as a sparse map over basis-index
/// triples.
class TripleTensorComponent {
 public:
  TripleTensorComponent() = default;
  TripleTensorComponent(SpaceId carrier, std::array<int, 3> levels)
      : carrier_(std::move(carrier)), levels_(levels) {}

  const SpaceId& carrier() const { return carrier_; }
  const std::array<int, 3>& tri_levels() const { return levels_; }
  bool is_zero() const { return entries_.empty(); }

  void add(std::array<int, 3> idx, const Rational& c);
  Rational coeff(std::array<int, 3> idx) const;
  const std::map<std::array<int, 3>, Rational>& entries() const { return entries_; }

  TripleTensorComponent& operator+=(const TripleTensorComponent& o);
  TripleTensorComponent& operator-=(const TripleTensorComponent& o);
  TripleTensorComponent& operator*=(const Rational& c);
  friend bool operator==(const TripleTensorComponent& a, const TripleTensorComponent& b) {
    return a.carrier_ == b.carrier_ && a.levels_ == b.levels_ && a.entries_ == b.entries_;
  }

 private:
  SpaceId carrier_;
  std::array<int, 3> levels_{0, 0, 0};
  std::map<std::array<int, 3>, Rational> entries_;
};

}  // namespace vybe
