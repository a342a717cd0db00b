#include "vybe/engine.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "vybe/errors.hpp"

namespace vybe {

namespace {

// Enumerates all normally ordered monomials of total weight n over `dim`
// generators, appending to out. Factors are chosen mode-descending with
// generator-ascending tie-break, matching PBWMonomial::factor_leq.
void enumerate_level(int dim, int n, std::vector<std::pair<int, int>>& prefix,
                     std::vector<PBWMonomial>& out) {
  if (n == 0) {
    out.push_back(PBWMonomial{prefix});
    return;
  }
  for (int mode = -1; -mode <= n; --mode) {
    for (int g = 0; g < dim; ++g) {
      std::pair<int, int> f{g, mode};
      if (!prefix.empty() && !PBWMonomial::factor_leq(prefix.back(), f)) continue;
      prefix.push_back(f);
      enumerate_level(dim, n + mode, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

CurrentEngine::CurrentEngine(const LieAlgebraData* lie, Rational level_k, int max_degree,
                             std::vector<Rational> top_eigen, SpaceId space,
                             std::string top_label)
    : lie_(lie), level_k_(std::move(level_k)), max_degree_(max_degree),
      top_eigen_(std::move(top_eigen)), space_(std::move(space)),
      top_label_(std::move(top_label)) {
  if (max_degree_ < 0) throw std::invalid_argument("CurrentEngine: negative max_degree");
  if (top_eigen_.empty()) top_eigen_.assign(lie_->dim(), Rational(0));
  if (static_cast<int>(top_eigen_.size()) != lie_->dim())
    throw std::invalid_argument("CurrentEngine: top eigenvalue count mismatch");
  basis_.resize(max_degree_ + 1);
  index_.resize(max_degree_ + 1);
  for (int n = 0; n <= max_degree_; ++n) {
    std::vector<std::pair<int, int>> prefix;
    enumerate_level(lie_->dim(), n, prefix, basis_[n]);
    std::sort(basis_[n].begin(), basis_[n].end());
    for (int i = 0; i < static_cast<int>(basis_[n].size()); ++i) index_[n][basis_[n][i]] = i;
  }
}

BasisRef CurrentEngine::ref_of(const PBWMonomial& m) const {
  int n = m.level();
  if (n < 0 || n > max_degree_) throw OutOfWindowError(n, max_degree_);
  auto it = index_[n].find(m);
  if (it == index_[n].end())
    throw std::logic_error("CurrentEngine: monomial not in basis (not normally ordered?)");
  return BasisRef{n, it->second};
}

GradedVector CurrentEngine::to_vector(const MonoVec& mv) const {
  GradedVector out(space_);
  for (auto& [mono, c] : mv) out.add(ref_of(mono), c);
  return out;
}

MonoVec CurrentEngine::normal_order(std::vector<std::pair<int, int>> word,
                                    Rational coeff) const {
  MonoVec out;
  std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> work;
  work.emplace_back(std::move(word), std::move(coeff));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    // Trailing annihilator hits the top vector.
    while (!w.empty() && w.back().second >= 0) {
      auto [g, m] = w.back();
      if (m > 0) {
        c = Rational(0);
        break;
      }
      c *= top_eigen_[g];
      if (c.is_zero()) break;
      w.pop_back();
    }
    if (c.is_zero()) continue;

    // Rightmost adjacent pair that is out of order: an annihilator left of a
    // creation, or two creations violating the canonical order.
    int bad = -1;
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) {
      auto a = w[i];
      auto b = w[i + 1];
      bool swap_needed = (a.second >= 0 && b.second <= -1) ||
                         (a.second <= -1 && b.second <= -1 && !PBWMonomial::factor_leq(a, b));
      if (swap_needed) {
        bad = i;
        break;
      }
    }
    if (bad < 0) {
      PBWMonomial mono{std::move(w)};
      auto [it, inserted] = out.emplace(std::move(mono), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }

    auto [g, m] = w[bad];
    auto [h, p] = w[bad + 1];
    // Swapped word.
    {
      auto w2 = w;
      std::swap(w2[bad], w2[bad + 1]);
      work.emplace_back(std::move(w2), c);
    }
    // Bracket term [x_g, x_h](m+p) replacing the pair.
    const auto& br = lie_->bracket(g, h);
    for (int k = 0; k < lie_->dim(); ++k) {
      if (br[k].is_zero()) continue;
      auto w2 = w;
      w2[bad] = {k, m + p};
      w2.erase(w2.begin() + bad + 1);
      work.emplace_back(std::move(w2), c * br[k]);
    }
    // Central term m k kappa(g,h) when m + p == 0.
    if (m + p == 0) {
      Rational central = Rational(m) * level_k_ * lie_->form_entry(g, h);
      if (!central.is_zero()) {
        auto w2 = w;
        w2.erase(w2.begin() + bad, w2.begin() + bad + 2);
        work.emplace_back(std::move(w2), c * central);
      }
    }
  }
  return out;
}

GradedVector CurrentEngine::generator_action(int g, int m, const GradedVector& v) const {
  if (v.space() != space_)
    throw std::invalid_argument("generator_action: carrier mismatch '" + v.space() + "'");
  GradedVector out(space_);
  for (auto& [ref, c] : v.terms()) {
    int target = ref.level - m;
    if (target > max_degree_) throw OutOfWindowError(target, max_degree_);
    if (target < 0) continue;
    std::vector<std::pair<int, int>> word;
    word.reserve(monomial(ref).factors.size() + 1);
    word.emplace_back(g, m);
    for (auto& f : monomial(ref).factors) word.push_back(f);
    for (auto& [mono, mc] : normal_order(std::move(word), c)) out.add(ref_of(mono), mc);
  }
  return out;
}

const GradedVector& CurrentEngine::basis_mode(const CurrentEngine& voa, BasisRef aref, int m,
                                              BasisRef bref) const {
  auto key = std::make_tuple(aref.level, aref.index, m, bref.level, bref.index);
  {
    std::shared_lock<std::shared_mutex> lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }

  const PBWMonomial& a = voa.monomial(aref);
  GradedVector out(space_);
  if (a.empty()) {
    // Vacuum property: Y(1, z) = id.
    if (m == -1) out = GradedVector::unit(space_, bref);
  } else {
    auto [g, mode_g] = a.factors.front();
    int n = -mode_g;  // a = x_g(-n) a'
    PBWMonomial ap{std::vector<std::pair<int, int>>(a.factors.begin() + 1, a.factors.end())};
    BasisRef apref = voa.ref_of(ap);
    GradedVector b = GradedVector::unit(space_, bref);

    // sum_i (-1)^i C(-n,i) x_g(-n-i) (a'_{m+i} b)
    int bound1 = ap.level() + bref.level - m - 1;
    for (int i = 0; i <= bound1; ++i) {
      const GradedVector& inner = basis_mode(voa, apref, m + i, bref);
      if (inner.is_zero()) continue;
      Rational c = binomial(-n, i);
      if (i % 2) c = -c;
      out += c * generator_action(g, -n - i, inner);
    }
    // -(-1)^n sum_i (-1)^i C(-n,i) a'_{-n+m-i} (x_g(i) b)
    for (int i = 0; i <= bref.level; ++i) {
      GradedVector w = generator_action(g, i, b);
      if (w.is_zero()) continue;
      Rational c = binomial(-n, i);
      if ((n + i) % 2 == 0) c = -c;
      out += c * mode_unchecked(voa, GradedVector::unit(voa.space(), apref), -n + m - i, w);
    }
  }

  std::unique_lock<std::shared_mutex> lock(memo_mu_);
  auto [it, inserted] = memo_.emplace(key, nullptr);
  if (inserted) it->second = std::make_unique<GradedVector>(std::move(out));
  return *it->second;
}

GradedVector CurrentEngine::mode_unchecked(const CurrentEngine& voa, const GradedVector& a,
                                           int m, const GradedVector& b) const {
  GradedVector out(space_);
  for (auto& [aref, ac] : a.terms())
    for (auto& [bref, bc] : b.terms()) {
      int target = aref.level + bref.level - m - 1;
      if (target < 0) continue;
      const GradedVector& r = basis_mode(voa, aref, m, bref);
      out += (ac * bc) * r;
    }
  return out;
}

GradedVector CurrentEngine::mode(const CurrentEngine& voa, const GradedVector& a, int m,
                                 const GradedVector& b) const {
  if (a.space() != voa.space())
    throw std::invalid_argument("mode: left argument tagged '" + a.space() +
                                "', expected the acting algebra '" + voa.space() + "'");
  if (b.space() != space_)
    throw std::invalid_argument("mode: right argument tagged '" + b.space() + "', expected '" +
                                space_ + "'");
  for (auto& [aref, ac] : a.terms())
    for (auto& [bref, bc] : b.terms()) {
      int target = aref.level + bref.level - m - 1;
      if (target > max_degree_) throw OutOfWindowError(target, max_degree_);
    }
  return mode_unchecked(voa, a, m, b);
}

}  // namespace vybe
