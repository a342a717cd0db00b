#include "vybe/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace vybe {

std::string PBWMonomial::str(const std::vector<std::string>& gen_names,
                             const std::string& top) const {
  std::ostringstream os;
  for (auto& [g, m] : factors) {
    if (g >= 0 && g < static_cast<int>(gen_names.size()))
      os << gen_names[g];
    else
      os << "x" << g;
    os << "(" << m << ")";
  }
  os << top;
  return os.str();
}

void GradedVector::add(BasisRef ref, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(ref, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedVector GradedVector::component(int n) const {
  GradedVector out(space_);
  auto it = terms_.lower_bound(BasisRef{n, 0});
  for (; it != terms_.end() && it->first.level == n; ++it) out.add(it->first, it->second);
  return out;
}

bool GradedVector::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.level == terms_.rbegin()->first.level;
}

int GradedVector::level() const {
  if (terms_.empty() || !is_homogeneous())
    throw std::logic_error("GradedVector::level: zero or mixed-level vector");
  return terms_.begin()->first.level;
}

static void require_same_space(const GradedVector& a, const GradedVector& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("graded vector carrier mismatch: '" + a.space() + "' vs '" +
                                b.space() + "'");
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  if (space_.empty()) space_ = o.space_;
  if (!o.terms_.empty() || !o.space_.empty()) require_same_space(*this, o);
  for (auto& [ref, c] : o.terms_) add(ref, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  if (space_.empty()) space_ = o.space_;
  if (!o.terms_.empty() || !o.space_.empty()) require_same_space(*this, o);
  for (auto& [ref, c] : o.terms_) add(ref, -c);
  return *this;
}

GradedVector& GradedVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [ref, v] : terms_) v *= c;
  return *this;
}

GradedVector linear_combine(const std::vector<Rational>& coeffs,
                            const std::vector<GradedVector>& vecs) {
  if (coeffs.size() != vecs.size())
    throw std::invalid_argument("linear_combine: length mismatch");
  if (vecs.empty()) throw std::invalid_argument("linear_combine: empty input");
  GradedVector out(vecs.front().space());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].space() != out.space()) require_same_space(out, vecs[i]);
    for (auto& [ref, c] : vecs[i].terms()) out.add(ref, coeffs[i] * c);
  }
  return out;
}

Rational dual_pairing(const GradedVector& f, const GradedVector& v) {
  if (f.space() != dual_space_of(v.space()))
    throw std::invalid_argument("dual_pairing: '" + f.space() + "' is not the dual of '" +
                                v.space() + "'");
  Rational acc(0);
  const auto& fv = f.terms();
  const auto& vv = v.terms();
  auto fi = fv.begin();
  auto vi = vv.begin();
  while (fi != fv.end() && vi != vv.end()) {
    if (fi->first < vi->first)
      ++fi;
    else if (vi->first < fi->first)
      ++vi;
    else {
      acc += fi->second * vi->second;
      ++fi;
      ++vi;
    }
  }
  return acc;
}

void LevelwiseMatrix::set_block(int source_level, std::vector<std::vector<Rational>> block) {
  blocks_[source_level] = std::move(block);
}

const std::vector<std::vector<Rational>>& LevelwiseMatrix::block(int source_level) const {
  auto it = blocks_.find(source_level);
  if (it == blocks_.end())
    throw std::out_of_range("LevelwiseMatrix: no block at source level " +
                            std::to_string(source_level));
  return it->second;
}

Rational LevelwiseMatrix::entry(int source_level, int row, int col) const {
  auto it = blocks_.find(source_level);
  if (it == blocks_.end()) return Rational(0);
  const auto& b = it->second;
  if (row < 0 || row >= static_cast<int>(b.size())) return Rational(0);
  if (col < 0 || col >= static_cast<int>(b[row].size())) return Rational(0);
  return b[row][col];
}

GradedVector LevelwiseMatrix::apply(const GradedVector& v) const {
  if (v.space() != source_)
    throw std::invalid_argument("LevelwiseMatrix: input tagged '" + v.space() +
                                "', expected '" + source_ + "'");
  GradedVector out(target_);
  for (auto& [ref, c] : v.terms()) {
    auto it = blocks_.find(ref.level);
    if (it == blocks_.end()) continue;
    const auto& b = it->second;
    for (int row = 0; row < static_cast<int>(b.size()); ++row) {
      if (ref.index >= static_cast<int>(b[row].size()))
        throw std::out_of_range("LevelwiseMatrix: block at level " + std::to_string(ref.level) +
                                " too narrow for index " + std::to_string(ref.index));
      out.add(BasisRef{ref.level + shift_, row}, b[row][ref.index] * c);
    }
  }
  return out;
}

}  // namespace vybe
