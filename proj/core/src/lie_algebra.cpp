#include "vybe/lie_algebra.hpp"

#include <stdexcept>

namespace vybe {

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  RationalMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  int r = static_cast<int>(m.size());
  int c = r ? static_cast<int>(m[0].size()) : 0;
  RationalMatrix out(c, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out[j][i] = m[i][j];
  return out;
}

static bool gauss_invert(RationalMatrix a, RationalMatrix* out) {
  int n = static_cast<int>(a.size());
  RationalMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (int j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  if (out) *out = std::move(inv);
  return true;
}

RationalMatrix invert(const RationalMatrix& m) {
  RationalMatrix out;
  if (!gauss_invert(m, &out)) throw std::domain_error("invert: singular matrix");
  return out;
}

bool is_invertible(const RationalMatrix& m) { return gauss_invert(m, nullptr); }

LieAlgebraData::LieAlgebraData(int dim,
                               std::vector<std::vector<std::vector<Rational>>> brackets,
                               RationalMatrix form, std::optional<Rational> h_dual,
                               std::vector<std::string> names)
    : dim_(dim), brackets_(std::move(brackets)), form_(std::move(form)),
      names_(std::move(names)) {
  if (dim_ <= 0) throw std::invalid_argument("LieAlgebraData: dimension must be positive");
  if (static_cast<int>(brackets_.size()) != dim_ ||
      static_cast<int>(form_.size()) != dim_)
    throw std::invalid_argument("LieAlgebraData: table size mismatch");
  for (auto& row : brackets_) {
    if (static_cast<int>(row.size()) != dim_)
      throw std::invalid_argument("LieAlgebraData: bracket table size mismatch");
    for (auto& v : row)
      if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("LieAlgebraData: bracket vector size mismatch");
  }
  for (auto& row : form_)
    if (static_cast<int>(row.size()) != dim_)
      throw std::invalid_argument("LieAlgebraData: form size mismatch");
  if (names_.empty())
    for (int i = 0; i < dim_; ++i) names_.push_back("x" + std::to_string(i));

  // Antisymmetry.
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (brackets_[i][j][k] != -brackets_[j][i][k])
          throw std::invalid_argument("LieAlgebraData: bracket not antisymmetric at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
  // Jacobi identity [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0.
  auto bracket_basis = [&](const std::vector<Rational>& a, int j) {
    std::vector<Rational> out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (int k = 0; k < dim_; ++k) out[k] += a[i] * brackets_[i][j][k];
    }
    return out;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        std::vector<Rational> acc(dim_, Rational(0));
        auto add = [&](const std::vector<Rational>& v) {
          for (int t = 0; t < dim_; ++t) acc[t] += v[t];
        };
        add(bracket_basis(brackets_[i][j], k));
        add(bracket_basis(brackets_[j][k], i));
        add(bracket_basis(brackets_[k][i], j));
        for (int t = 0; t < dim_; ++t)
          if (!acc[t].is_zero())
            throw std::invalid_argument("LieAlgebraData: Jacobi identity fails at (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
      }
  // Symmetry and invariance kappa([x,y],z) = kappa(x,[y,z]).
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (form_[i][j] != form_[j][i])
        throw std::invalid_argument("LieAlgebraData: form not symmetric");
  auto form_vec = [&](const std::vector<Rational>& a, int j) {
    Rational acc(0);
    for (int i = 0; i < dim_; ++i) acc += a[i] * form_[i][j];
    return acc;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (form_vec(brackets_[i][j], k) != form_vec(brackets_[j][k], i))
          throw std::invalid_argument("LieAlgebraData: form not invariant at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");

  abelian_ = true;
  for (int i = 0; i < dim_ && abelian_; ++i)
    for (int j = 0; j < dim_ && abelian_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (!brackets_[i][j][k].is_zero()) {
          abelian_ = false;
          break;
        }

  form_invertible_ = is_invertible(form_);
  if (form_invertible_) form_inv_ = invert(form_);

  // Dual Coxeter number: the adjoint Casimir sum_a ad(u_a) ad(u^a) w.r.t. the
  // configured form must be 2 h_dual * id. Abelian algebras give 0.
  if (abelian_) {
    h_dual_ = Rational(0);
    if (h_dual && *h_dual != Rational(0))
      throw std::invalid_argument("LieAlgebraData: abelian algebra requires h_dual = 0");
  } else {
    if (!form_invertible_) {
      if (!h_dual)
        throw std::invalid_argument(
            "LieAlgebraData: degenerate form on a nonabelian algebra; supply h_dual");
      h_dual_ = *h_dual;
    } else {
      // Casimir matrix C[k][t]: coordinates of sum_{a,b} kappa^{ab} [x_a,[x_b,x_t]].
      RationalMatrix cas(dim_, std::vector<Rational>(dim_, Rational(0)));
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) {
          if (form_inv_[a][b].is_zero()) continue;
          for (int t = 0; t < dim_; ++t) {
            // bracket_basis gives [[x_b, x_t], x_a]; the Casimir needs
            // [x_a, [x_b, x_t]], hence the sign.
            auto outer = bracket_basis(brackets_[b][t], a);
            for (int k = 0; k < dim_; ++k) cas[k][t] += form_inv_[a][b] * (-outer[k]);
          }
        }
      Rational eig = cas[0][0];
      for (int k = 0; k < dim_; ++k)
        for (int t = 0; t < dim_; ++t)
          if (cas[k][t] != (k == t ? eig : Rational(0)))
            throw std::invalid_argument(
                "LieAlgebraData: adjoint Casimir is not scalar for this form; "
                "unsupported (form, algebra) combination");
      h_dual_ = eig / Rational(2);
      if (h_dual && *h_dual != h_dual_)
        throw std::invalid_argument("LieAlgebraData: configured h_dual " + h_dual->str() +
                                    " contradicts the Casimir value " + h_dual_.str());
    }
  }
}

const RationalMatrix& LieAlgebraData::form_inverse() const {
  if (!form_invertible_) throw std::domain_error("LieAlgebraData: form is degenerate");
  return form_inv_;
}

std::vector<Rational> LieAlgebraData::bracket_vec(const std::vector<Rational>& a,
                                                  const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      for (int k = 0; k < dim_; ++k) out[k] += a[i] * b[j] * brackets_[i][j][k];
    }
  }
  return out;
}

LieAlgebraData LieAlgebraData::abelian(int dim, RationalMatrix form) {
  std::vector<std::vector<std::vector<Rational>>> br(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back(dim == 1 ? "a" : "a" + std::to_string(i));
  return LieAlgebraData(dim, std::move(br), std::move(form), Rational(0), std::move(names));
}

LieAlgebraData LieAlgebraData::sl2() {
  const int E = 0, H = 1, F = 2;
  std::vector<std::vector<std::vector<Rational>>> br(
      3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
  br[H][E][E] = Rational(2);
  br[E][H][E] = Rational(-2);
  br[H][F][F] = Rational(-2);
  br[F][H][F] = Rational(2);
  br[E][F][H] = Rational(1);
  br[F][E][H] = Rational(-1);
  RationalMatrix form(3, std::vector<Rational>(3, Rational(0)));
  form[E][F] = form[F][E] = Rational(1);
  form[H][H] = Rational(2);
  return LieAlgebraData(3, std::move(br), std::move(form), Rational(2), {"e", "h", "f"});
}

}  // namespace vybe
