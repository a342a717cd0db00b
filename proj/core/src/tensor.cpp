#include "vybe/tensor.hpp"

#include <stdexcept>

namespace vybe {

void DiagonalTensor::add(int level, int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto& lv = levels_[level];
  auto key = std::make_pair(i, j);
  auto [it, inserted] = lv.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) lv.erase(it);
  }
  if (lv.empty()) levels_.erase(level);
}

Rational DiagonalTensor::coeff(int level, int i, int j) const {
  auto lt = levels_.find(level);
  if (lt == levels_.end()) return Rational(0);
  auto it = lt->second.find({i, j});
  return it == lt->second.end() ? Rational(0) : it->second;
}

void DiagonalTensor::add_pair(const GradedVector& left, const GradedVector& right,
                              const Rational& coeff) {
  if (coeff.is_zero() || left.is_zero() || right.is_zero()) return;
  if (left.space() != carrier_ || right.space() != carrier_)
    throw std::invalid_argument("DiagonalTensor: pair carrier mismatch");
  if (!left.is_homogeneous() || !right.is_homogeneous() || left.level() != right.level())
    throw std::invalid_argument(
        "DiagonalTensor: pairs must be level-homogeneous at a common level (diagonality)");
  for (auto& [lr, lc] : left.terms())
    for (auto& [rr, rc] : right.terms()) add(lr.level, lr.index, rr.index, coeff * lc * rc);
}

DiagonalTensor DiagonalTensor::sigma() const {
  DiagonalTensor out(carrier_);
  for (auto& [lvl, entries] : levels_)
    for (auto& [ij, c] : entries) out.add(lvl, ij.second, ij.first, c);
  return out;
}

bool DiagonalTensor::is_skewsymmetric() const {
  for (auto& [lvl, entries] : levels_)
    for (auto& [ij, c] : entries)
      if (coeff(lvl, ij.second, ij.first) != -c) return false;
  return true;
}

DiagonalTensor& DiagonalTensor::operator+=(const DiagonalTensor& o) {
  if (carrier_.empty()) carrier_ = o.carrier_;
  if (o.carrier_ != carrier_) throw std::invalid_argument("DiagonalTensor: carrier mismatch");
  for (auto& [lvl, entries] : o.levels_)
    for (auto& [ij, c] : entries) add(lvl, ij.first, ij.second, c);
  return *this;
}

DiagonalTensor& DiagonalTensor::operator-=(const DiagonalTensor& o) {
  if (carrier_.empty()) carrier_ = o.carrier_;
  if (o.carrier_ != carrier_) throw std::invalid_argument("DiagonalTensor: carrier mismatch");
  for (auto& [lvl, entries] : o.levels_)
    for (auto& [ij, c] : entries) add(lvl, ij.first, ij.second, -c);
  return *this;
}

DiagonalTensor& DiagonalTensor::operator*=(const Rational& c) {
  if (c.is_zero()) {
    levels_.clear();
    return *this;
  }
  for (auto& [lvl, entries] : levels_)
    for (auto& [ij, v] : entries) v *= c;
  return *this;
}

DiagonalTensor skewsymmetrize(const DiagonalTensor& gamma) {
  DiagonalTensor out = gamma;
  out -= gamma.sigma();
  return out;
}

void TripleTensorComponent::add(std::array<int, 3> idx, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Rational TripleTensorComponent::coeff(std::array<int, 3> idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

TripleTensorComponent& TripleTensorComponent::operator+=(const TripleTensorComponent& o) {
  if (o.carrier_ != carrier_ || o.levels_ != levels_)
    throw std::invalid_argument("TripleTensorComponent: shape mismatch");
  for (auto& [idx, c] : o.entries_) add(idx, c);
  return *this;
}

TripleTensorComponent& TripleTensorComponent::operator-=(const TripleTensorComponent& o) {
  if (o.carrier_ != carrier_ || o.levels_ != levels_)
    throw std::invalid_argument("TripleTensorComponent: shape mismatch");
  for (auto& [idx, c] : o.entries_) add(idx, -c);
  return *this;
}

TripleTensorComponent& TripleTensorComponent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [idx, v] : entries_) v *= c;
  return *this;
}

}  // namespace vybe
