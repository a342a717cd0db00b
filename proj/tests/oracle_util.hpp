#pragma once

// Shared test utilities: partition/monomial counting, deterministic random
// data, and independent enveloping-algebra style bracket expansion for the
// classical Yang-Baxter checks.

#include <array>
#include <map>
#include <random>
#include <vector>

#include "vybe/lie_algebra.hpp"
#include "vybe/tensor.hpp"
#include "vybe/voa.hpp"

namespace oracle {

using vybe::Rational;

// Number of monomials of weight n over d generators: coefficient of q^n in
// prod_{k>=1} (1 - q^k)^{-d}, by dynamic programming.
inline std::vector<long> monomial_counts(int d, int max_n) {
  std::vector<long> dp(max_n + 1, 0);
  dp[0] = 1;
  for (int k = 1; k <= max_n; ++k)
    for (int copy = 0; copy < d; ++copy)
      for (int n = k; n <= max_n; ++n) dp[n] += dp[n - k];
  return dp;
}

inline std::vector<long> partition_counts(int max_n) { return monomial_counts(1, max_n); }

// Deterministic small rationals.
struct Rng {
  explicit Rng(unsigned seed) : gen(seed) {}
  std::mt19937 gen;
  int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational rational() {
    int num = int_in(-6, 6);
    int den = int_in(1, 4);
    return Rational(num, den);
  }
  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
};

// Random skewsymmetric diagonal tensor over U, supported on levels <= max_level.
inline vybe::DiagonalTensor random_skew_tensor(const vybe::VertexAlgebra& U, Rng& rng,
                                               int max_level, int pairs_per_level = 2) {
  vybe::DiagonalTensor gamma(U.space());
  for (int t = 0; t <= max_level; ++t) {
    int d = U.level_dim(t);
    if (d == 0) continue;
    for (int p = 0; p < pairs_per_level; ++p) {
      int i = rng.int_in(0, d - 1);
      int j = rng.int_in(0, d - 1);
      gamma.add(t, i, j, rng.rational());
    }
  }
  return vybe::skewsymmetrize(gamma);
}

// Independent bracket expansion in (a slice of) the universal enveloping
// algebra: slots hold words of length <= 2; the commutator of two placements
// cancels the length-2 words in the shared slot and leaves the bracket.
struct SlotWord {
  std::vector<int> letters;  // Lie basis indices, at most 2 in the shared slot
};

using TripleKey = std::array<int, 3>;
using TripleMap = std::map<TripleKey, Rational>;

// [R_ab, R_cd] where placement pairs share exactly one slot; computed by
// multiplying words and reducing xy - yx -> [x,y] via the structure constants.
// pos_a/pos_b name the two slots of each placement (e.g. {0,1} for R12).
inline TripleMap bracket_of_placements(const vybe::LieAlgebraData& g,
                                       const std::map<std::pair<int, int>, Rational>& R,
                                       std::array<int, 2> place1, std::array<int, 2> place2) {
  TripleMap out;
  auto add = [&out](TripleKey k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  // Find the shared slot and the free slots.
  int shared = -1;
  for (int s1 : place1)
    for (int s2 : place2)
      if (s1 == s2) shared = s1;
  for (auto& [ij, c1] : R)
    for (auto& [kl, c2] : R) {
      // letters placed per slot by each placement
      std::array<int, 3> first_letter{-1, -1, -1}, second_letter{-1, -1, -1};
      first_letter[place1[0]] = ij.first;
      first_letter[place1[1]] = ij.second;
      second_letter[place2[0]] = kl.first;
      second_letter[place2[1]] = kl.second;
      // In the shared slot both act: commutator leaves [x, y]; in free slots a
      // single letter each.
      int x = first_letter[shared];
      int y = second_letter[shared];
      std::array<int, 3> free_idx{0, 0, 0};
      for (int s = 0; s < 3; ++s) {
        if (s == shared) continue;
        free_idx[s] = first_letter[s] >= 0 ? first_letter[s] : second_letter[s];
      }
      const auto& br = g.bracket(x, y);
      for (int t = 0; t < g.dim(); ++t) {
        if (br[t].is_zero()) continue;
        TripleKey key{};
        for (int s = 0; s < 3; ++s) key[s] = (s == shared) ? t : free_idx[s];
        add(key, c1 * c2 * br[t]);
      }
    }
  return out;
}

inline TripleMap add_triples(const TripleMap& a, const TripleMap& b) {
  TripleMap out = a;
  for (auto& [k, c] : b) {
    auto [it, inserted] = out.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// [[R,R]] = [R12,R13] + [R12,R23] + [R13,R23] by the word-expansion route.
inline TripleMap cybe_brute(const vybe::LieAlgebraData& g,
                            const std::map<std::pair<int, int>, Rational>& R) {
  TripleMap out = bracket_of_placements(g, R, {0, 1}, {0, 2});
  out = add_triples(out, bracket_of_placements(g, R, {0, 1}, {1, 2}));
  out = add_triples(out, bracket_of_placements(g, R, {0, 2}, {1, 2}));
  return out;
}

}  // namespace oracle
