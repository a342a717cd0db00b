#include "vybe/voa.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "vybe/errors.hpp"

namespace vybe {

GradedVector virasoro_mode(const VertexAlgebra& U, int n, const GradedVector& b) {
  return U.mode(U.virasoro_vector(), n + 1, b);
}

GradedVector evaluate(const VertexAlgebra& U, const ModeQuery& q) {
  return U.mode(q.a, q.m, q.b);
}

namespace {

int weight_of(const GradedVector& a, const char* who) {
  if (a.is_zero()) return 0;
  if (!a.is_homogeneous())
    throw std::invalid_argument(std::string(who) + ": non-homogeneous left argument");
  return a.level();
}

}  // namespace

GradedVector primed_mode(const VertexAlgebra& U, const GradedVector& a, int m,
                         const GradedVector& b) {
  GradedVector out(U.space());
  if (a.is_zero() || b.is_zero()) return out;
  int wa = weight_of(a, "primed_mode");
  GradedVector la = a;  // L(1)^j a
  for (int j = 0; !la.is_zero(); ++j) {
    Rational c = Rational(wa % 2 ? -1 : 1) / factorial(j);
    out += c * U.mode(la, 2 * wa - m - j - 2, b);
    la = virasoro_mode(U, 1, la);
  }
  return out;
}

GradedVector primed_op_mode(const VertexAlgebra& U, const GradedVector& a, int m,
                            const GradedVector& b) {
  GradedVector out(U.space());
  if (a.is_zero() || b.is_zero()) return out;
  int wa = weight_of(a, "primed_op_mode");
  GradedVector lb = b;  // L(1)^i b
  for (int i = 0; !lb.is_zero(); ++i) {
    GradedVector la = a;  // L(1)^j a
    for (int j = 0; !la.is_zero(); ++j) {
      Rational c = Rational((wa + m + i + 1) % 2 ? -1 : 1);
      c /= factorial(i) * factorial(j);
      out += c * U.mode(la, 2 * wa - m - i - j - 2, lb);
      la = virasoro_mode(U, 1, la);
    }
    lb = virasoro_mode(U, 1, lb);
  }
  return out;
}

GradedVector m_dot(const VertexAlgebra& U, MDotKind kind, const GradedVector& alpha, int m,
                   const GradedVector& beta) {
  switch (kind) {
    case MDotKind::plain:
      return U.mode(beta, m, alpha);
    case MDotKind::primed:
      return primed_mode(U, alpha, m, beta);
    case MDotKind::primed_op:
      return primed_op_mode(U, beta, m, alpha);
  }
  throw std::logic_error("m_dot: bad kind");
}

GradedVector skew_mode(const VertexAlgebra& U, const GradedVector& u, int m,
                       const GradedVector& a) {
  GradedVector out(U.space());
  if (u.is_zero() || a.is_zero()) return out;
  int maxj = -1;
  for (auto& [uref, uc] : u.terms())
    for (auto& [aref, ac] : a.terms())
      maxj = std::max(maxj, aref.level + uref.level - m - 1);
  for (int j = 0; j <= maxj; ++j) {
    GradedVector t = U.mode(a, m + j, u);
    if (t.is_zero()) continue;
    for (int p = 0; p < j; ++p) t = virasoro_mode(U, -1, t);
    Rational c = Rational((m + j + 1) % 2 ? -1 : 1) / factorial(j);
    out += c * t;
  }
  return out;
}

namespace {

// Short stable digest (FNV-1a) of the algebra data so equal constructions
// share a tag, independent of platform hashing.
std::string data_digest(const LieAlgebraData& lie, const Rational& k, int N) {
  std::ostringstream os;
  os << lie.dim() << ";" << k.str() << ";" << N << ";";
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = 0; j < lie.dim(); ++j) {
      for (int t = 0; t < lie.dim(); ++t) os << lie.structure_constant(i, j, t).str() << ",";
      os << lie.form_entry(i, j).str() << ";";
    }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream tag;
  tag << std::hex << (h & 0xffffffffu);
  return tag.str();
}

}  // namespace

CurrentVOA::CurrentVOA(LieAlgebraData lie, Rational level, int max_degree)
    : lie_(std::move(lie)), level_(std::move(level)) {
  if (max_degree < 2)
    throw std::invalid_argument(
        "CurrentVOA: max_degree must be at least 2 (the Virasoro vector lives at level 2)");
  if (!lie_.form_nondegenerate())
    throw std::domain_error("CurrentVOA: the invariant form must be nondegenerate");
  Rational shifted = level_ + lie_.h_dual();
  if (shifted.is_zero())
    throw std::domain_error("CurrentVOA: critical level k + h_dual = 0");

  SpaceId tag = "V[" + std::to_string(lie_.dim()) + (lie_.abelian_q() ? "ab" : "na") + ";k=" +
                level_.str() + ";N=" + std::to_string(max_degree) + ";" +
                data_digest(lie_, level_, max_degree) + "]";
  engine_ = std::make_unique<CurrentEngine>(&lie_, level_, max_degree,
                                            std::vector<Rational>{}, tag, "|0>");
  vacuum_ = engine_->top();

  // Sugawara vector.
  omega_ = GradedVector(space());
  const RationalMatrix& kinv = lie_.form_inverse();
  Rational norm = Rational(1) / (Rational(2) * shifted);
  for (int a = 0; a < lie_.dim(); ++a)
    for (int b = 0; b < lie_.dim(); ++b) {
      if (kinv[a][b].is_zero()) continue;
      GradedVector xb = engine_->monomial_vector(PBWMonomial{{{b, -1}}});
      omega_ += (norm * kinv[a][b]) * engine_->generator_action(a, -1, xb);
    }
  c_ = level_ * Rational(lie_.dim()) / shifted;
}

GradedVector CurrentVOA::generator_state(int g) const {
  return engine_->monomial_vector(PBWMonomial{{{g, -1}}});
}

bool CurrentVOA::is_heisenberg_rank1() const {
  return lie_.abelian_q() && lie_.dim() == 1 &&
         level_ * lie_.form_entry(0, 0) == Rational(1);
}

Rational InvariantForm::pair(const GradedVector& a, const GradedVector& b) const {
  Rational acc(0);
  for (auto& [ar, ac] : a.terms()) {
    if (ar.level >= static_cast<int>(gram.size())) continue;
    for (auto& [br, bc] : b.terms()) {
      if (br.level != ar.level) continue;
      acc += ac * bc * gram[ar.level][ar.index][br.index];
    }
  }
  return acc;
}

InvariantForm canonical_invariant_form(const CurrentVOA& U) {
  const int N = U.max_degree();
  const auto& eng = U.engine();
  InvariantForm form;
  form.gram.resize(N + 1);
  // Level-1 generators of a current VOA are quasi-primary, so
  // (x(-n) a' | b) = (a' | x'_{-n} b) = -(x(n) b | a') componentwise.
  std::function<Rational(const GradedVector&, const GradedVector&)> pair =
      [&](const GradedVector& a, const GradedVector& b) -> Rational {
    Rational acc(0);
    for (auto& [ar, ac] : a.terms()) {
      const PBWMonomial& mono = eng.monomial(ar);
      if (mono.empty()) {
        acc += ac * b.coeff(ar);  // (vac | vac) = 1 at level 0
        continue;
      }
      auto [g, mode] = mono.factors.front();
      PBWMonomial rest{
          std::vector<std::pair<int, int>>(mono.factors.begin() + 1, mono.factors.end())};
      GradedVector ap = eng.monomial_vector(rest);
      GradedVector xb = eng.generator_action(g, -mode, b);
      if (!xb.is_zero()) acc += ac * -pair(ap, xb);
    }
    return acc;
  };
  for (int n = 0; n <= N; ++n) {
    int d = U.level_dim(n);
    form.gram[n].assign(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        form.gram[n][i][j] =
            pair(U.basis_vector(BasisRef{n, i}), U.basis_vector(BasisRef{n, j}));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < i; ++j)
        if (form.gram[n][i][j] != form.gram[n][j][i])
          throw std::logic_error("canonical_invariant_form: asymmetric Gram block");
    if (!is_invertible(form.gram[n]))
      throw std::domain_error("canonical_invariant_form: degenerate at level " +
                              std::to_string(n));
  }
  return form;
}

}  // namespace vybe
