#ifndef FLAGTWIST_BIGCELL_HPP
#define FLAGTWIST_BIGCELL_HPP

#include "flagtwist/groupword.hpp"

namespace flagtwist {

/// Coordinates on the big cell U_- U_+ L: u = prod exp(x_a f_a),
/// v = prod exp(y_a e_a), factors in the canonical root order.
template <class R>
struct BigCellPoint {
  std::vector<R> x, y;  // per Psi position

  explicit BigCellPoint(int n) : x(n, R(0L)), y(n, R(0L)) {}
  BigCellPoint() {}
};

/// theta'([x, a, (xi, c) + l]) = dchi(xi^l) + c.
template <class R>
R theta_prime(const ParabolicData& p, const Character& ch,
              const LieVector<R>& xi, const R& c) {
  auto parts = p.template triangular_parts<R>(xi);
  return ch.dchi(parts.levi) + c;
}

/// lambda-connection scaling; lambda = 1 recovers theta_prime.
template <class R>
R theta_prime_lambda(const ParabolicData& p, const Character& ch,
                     const LieVector<R>& xi, const R& c, const R& lambda) {
  return lambda * theta_prime(p, ch, xi, c);
}

/// X_a = Ad_{(B_a v)^-1} f_a with B_a the trailing U_- factors after a.
template <class R>
LieVector<R> x_tangent(const ParabolicData& p, const BigCellPoint<R>& pt,
                       int a) {
  const auto& alg = *p.algebra;
  GroupWord<R> tail;
  for (int b = a + 1; b < p.n(); ++b) {
    auto l = alg.template zero_vector<R>();
    l[alg.f_index(p.psi[b])] = pt.x[b];
    tail.letters.push_back(std::move(l));
  }
  for (int b = 0; b < p.n(); ++b) {
    auto l = alg.template zero_vector<R>();
    l[alg.e_index(p.psi[b])] = pt.y[b];
    tail.letters.push_back(std::move(l));
  }
  return ad_word_inv_apply(
      alg, tail, alg.template basis_vector<R>(alg.f_index(p.psi[a])));
}

/// Y_a = Ad over the trailing U_+ factors of e_a; lies in u_+.
template <class R>
LieVector<R> y_tangent(const ParabolicData& p, const BigCellPoint<R>& pt,
                       int a) {
  const auto& alg = *p.algebra;
  GroupWord<R> tail;
  for (int b = a + 1; b < p.n(); ++b) {
    auto l = alg.template zero_vector<R>();
    l[alg.e_index(p.psi[b])] = pt.y[b];
    tail.letters.push_back(std::move(l));
  }
  return ad_word_inv_apply(
      alg, tail, alg.template basis_vector<R>(alg.e_index(p.psi[a])));
}

/// theta = sum dchi(X_a^l) dx_a; returns the dx-coefficient list.
template <class R>
std::vector<R> theta_coefficients(const ParabolicData& p, const Character& ch,
                                  const BigCellPoint<R>& pt) {
  std::vector<R> out;
  for (int a = 0; a < p.n(); ++a) {
    auto xa = x_tangent(p, pt, a);
    auto parts = p.template triangular_parts<R>(xa);
    out.push_back(ch.dchi(parts.levi));
  }
  return out;
}

/// tau_C^* theta = -conj(theta) at pt: dchi(dtau(X_a)^l) = -conj(dchi(X_a^l))
/// and dchi(dtau(Y_a)^l) = 0, exact per alpha.
template <class R>
bool reality_identities(const ParabolicData& p, const Character& ch,
                        const BigCellPoint<R>& pt) {
  const auto& alg = *p.algebra;
  for (int a = 0; a < p.n(); ++a) {
    auto xa = x_tangent(p, pt, a);
    auto lhs = ch.dchi(p.template triangular_parts<R>(dtau(alg, xa)).levi);
    auto rhs =
        -conj_value(ch.dchi(p.template triangular_parts<R>(xa).levi));
    if (!(lhs == rhs)) return false;
    auto ya = y_tangent(p, pt, a);
    auto yl = ch.dchi(p.template triangular_parts<R>(dtau(alg, ya)).levi);
    if (!yl.is_zero()) return false;
  }
  return true;
}

/// d(scale * theta) over the coordinate basis (x_1..x_n, y_1..y_n); partial
/// derivatives taken exactly with dual scalars, then antisymmetrized. The
/// scale is constant in the coordinates (lambda of the lambda-connection).
template <class R>
std::vector<std::vector<R>> curvature_matrix(const ParabolicData& p,
                                             const Character& ch,
                                             const BigCellPoint<R>& pt,
                                             const R& scale = R(1L)) {
  int n = p.n(), m = 2 * n;
  // jac[i][a] = d theta_a / d coord_i
  std::vector<std::vector<R>> jac(m);
  for (int i = 0; i < m; ++i) {
    BigCellPoint<Dual<R>> dp(n);
    for (int k = 0; k < n; ++k) {
      dp.x[k] = Dual<R>(pt.x[k]);
      dp.y[k] = Dual<R>(pt.y[k]);
    }
    if (i < n)
      dp.x[i].deriv = R(1L);
    else
      dp.y[i - n].deriv = R(1L);
    auto th = theta_coefficients(p, ch, dp);
    for (auto& t : th) jac[i].push_back((t * Dual<R>(scale)).deriv);
  }
  std::vector<std::vector<R>> mat(m, std::vector<R>(m, R(0L)));
  // theta has dx-components only: theta_j = jac-target for j < n, else 0.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      R v(0L);
      if (j < n) v += jac[i][j];
      if (i < n) v -= jac[j][i];
      mat[i][j] = v;
    }
  return mat;
}

/// Exact determinant by fraction-free-ish elimination over a field ring.
template <class R>
R matrix_determinant(std::vector<std::vector<R>> m) {
  int n = static_cast<int>(m.size());
  R det(1L);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return R(0L);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    R inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      R factor = m[r][c] * inv;
      for (int k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

}  // namespace flagtwist

#endif
