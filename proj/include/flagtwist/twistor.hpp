#ifndef FLAGTWIST_TWISTOR_HPP
#define FLAGTWIST_TWISTOR_HPP

#include <string>

#include "flagtwist/bigcell.hpp"
#include "flagtwist/connspace.hpp"

namespace flagtwist {

/// sigma(lambda) = -conj(lambda)^{-1} on C^x.
inline GQ sigma_circ(const GQ& lambda) {
  if (lambda.is_zero()) throw std::domain_error("sigma_circ: lambda = 0");
  return -conj_scalar(lambda).inverse();
}

/// Point [word, nu] of the associated bundle; the group slot is a word of
/// unipotent exponentials.
template <class R>
struct FiberedPoint {
  GroupWord<R> word;
  NuMap<R> nu;
};

template <class R>
NuMap<R> scale_nu(const NuMap<R>& nu, const R& s) {
  NuMap<R> out = nu;
  for (auto& c : out.col) c = c.scaled(s);
  if (out.scalar_sigma) out.scalar_sigma = *out.scalar_sigma * s;
  return out;
}

/// gamma(z) = (pi(z)^{-1} . z, pi(z)); errors on the lambda = 0 fibre.
inline std::pair<FiberedPoint<GQ>, GQ> gamma_map(const FiberedPoint<GQ>& pt) {
  auto nu = pt.nu;
  if (!nu.detect_sigma() || nu.scalar_sigma->is_zero())
    throw std::domain_error("gamma: point not in Z^x");
  GQ lambda = *nu.scalar_sigma;
  return {FiberedPoint<GQ>{pt.word, scale_nu(nu, lambda.inverse())}, lambda};
}

inline FiberedPoint<GQ> gamma_inverse(const FiberedPoint<GQ>& y,
                                      const GQ& lambda) {
  return {y.word, scale_nu(y.nu, lambda)};
}

/// tau_C([g, nu]) = [tau(g) tau(exp E), nu_0] with E = solve(nu).
template <class R>
FiberedPoint<R> tau_C_point(const ParabolicData& p, const Character& ch,
                            const FiberedPoint<R>& pt) {
  const auto& alg = *p.algebra;
  auto e = solve_unipotent(p, ch, pt.nu);
  auto w = pt.word;
  w.letters.push_back(nilpotent_lie(p, e));
  return {tau_word(alg, w), nu_zero<R>(p)};
}

/// tau_circ = gamma^{-1} . (tau_C x sigma_circ) . gamma on Z^x.
inline FiberedPoint<GQ> tau_circ(const ParabolicData& p, const Character& ch,
                                 const FiberedPoint<GQ>& pt) {
  auto [y, lambda] = gamma_map(pt);
  auto ty = tau_C_point(p, ch, y);
  return gamma_inverse(ty, sigma_circ(lambda));
}

/// Canonical form for point comparison: push the fibre to nu_0 through the
/// unique unipotent and take the adjoint matrix of the resulting word.
inline std::pair<std::vector<LieVector<GQ>>, GQ> canonical_point(
    const ParabolicData& p, const Character& ch, const FiberedPoint<GQ>& pt) {
  const auto& alg = *p.algebra;
  auto nu = pt.nu;
  if (!nu.detect_sigma() || nu.scalar_sigma->is_zero())
    throw std::domain_error("canonical_point: lambda = 0");
  GQ lambda = *nu.scalar_sigma;
  auto e = solve_unipotent(p, ch, scale_nu(nu, lambda.inverse()));
  auto w = pt.word;
  w.letters.push_back(nilpotent_lie(p, e));
  return {ad_word_matrix(alg, w), lambda};
}

/// c_alpha(mu) with c_alpha(0) = 0: solve over Poly with target nu_0 + mu phi.
inline NilpotentParam<Poly> line_polynomials(const ParabolicData& p,
                                             const Character& ch,
                                             const CovectorPhi<GQ>& phi) {
  auto nu = nu_zero<Poly>(p);
  Poly mu = Poly::variable();
  for (int k = 0; k < p.n(); ++k) nu.col[k].c = mu * Poly(phi.z[k]);
  return solve_unipotent(p, ch, nu);
}

/// Normal-bundle chart transition: 2n x 2n polynomials in t = conj(mu).
struct TransitionMatrix {
  int n = 0;
  std::vector<std::vector<Poly>> entry;  // entry[row][col]
  std::vector<int> dec_order;            // psi positions, height-decreasing
  int max_degree = 0;
};

struct O1Verdict {
  bool pass = true;
  std::string witness;  // first failing entry, empty on pass
};

/// pass iff diagonal = x_i * t with x_i != 0, strict lower zero, strict
/// upper with zero constant term.
inline O1Verdict check_o1_pattern(const TransitionMatrix& t) {
  int m = 2 * t.n;
  auto fail = [&](int r, int c, const std::string& why) {
    return O1Verdict{false, "entry (" + std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + "): " + why};
  };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      const Poly& e = t.entry[r][c];
      if (r == c) {
        if (e.degree() != 1 || !e.constant_term().is_zero() ||
            e.coeff(1).is_zero())
          return fail(r, c, "diagonal not of the form x*t with x nonzero");
      } else if (r > c) {
        if (!e.is_zero()) return fail(r, c, "nonzero below the diagonal");
      } else {
        if (!e.constant_term().is_zero())
          return fail(r, c, "nonzero constant term above the diagonal");
      }
    }
  return {};
}

namespace detail {

/// Left log-derivative: exp(F0)^{-1} d/deps exp(F0 + eps F1) =
/// sum_k (-ad_F0)^k F1 / (k+1)!, a terminating series.
template <class R>
LieVector<R> left_log_derivative(const ChevalleyAlgebra& alg,
                                 const LieVector<R>& f0,
                                 const LieVector<R>& f1) {
  auto g = alg.template zero_vector<R>();
  auto term = f1;
  long fact = 1;
  for (int k = 0;; ++k) {
    if (k > alg.dim) throw std::domain_error("left_log_derivative: not nilpotent");
    fact *= (k + 1);
    bool zero = true;
    for (const auto& c : term) zero = zero && c.is_zero();
    if (zero) break;
    R inv = scalar_rat<R>(rat_frac(1, fact));
    for (int i = 0; i < alg.dim; ++i) g[i] += term[i] * inv;
    term = alg.bracket(f0, term);
    for (auto& c : term) c = -c;
  }
  return g;
}

}  // namespace detail

template <class S>
S scalar_gq(const GQ& z) = delete;
template <>
inline GQ scalar_gq<GQ>(const GQ& z) {
  return z;
}
template <>
inline Poly scalar_gq<Poly>(const GQ& z) {
  return Poly(z);
}

/// Transition matrix of the normal bundle of the twistor line through
/// [e, phi], in the height-decreasing p/q frames. Generic over the scalar
/// ring S used for the chart-1 variable (Poly for the symbolic matrix, GQ
/// for a numeric specialization at a real-rational t).
template <class S>
std::vector<std::vector<S>> frame_transition_generic(const ParabolicData& p,
                                                     const Character& ch,
                                                     const CovectorPhi<GQ>& phi,
                                                     const S& mu) {
  const auto& alg = *p.algebra;
  int n = p.n(), m = 2 * n;
  std::vector<int> dec(n);
  for (int i = 0; i < n; ++i) dec[i] = n - 1 - i;  // reverse canonical order

  std::vector<std::vector<S>> entry(m, std::vector<S>(m, S(0L)));

  // Base solve u(mu, phi) over S and its tau-image.
  auto nu_base = nu_zero<S>(p);
  for (int k = 0; k < n; ++k) nu_base.col[k].c = mu * scalar_gq<S>(phi.z[k]);
  auto e_base = solve_unipotent(p, ch, nu_base);
  auto f_base = dtau(alg, nilpotent_lie(p, e_base));

  // Fibre columns: perturb phi along the Killing dual of e_i.
  for (int i = 0; i < n; ++i) {
    int a = dec[i];
    long kap = alg.killing_basis(alg.e_index(p.psi[a]), alg.f_index(p.psi[a]));
    auto nu = nu_zero<Dual<S>>(p);
    for (int k = 0; k < n; ++k) {
      S val = mu * scalar_gq<S>(phi.z[k]);
      S der = (k == a) ? mu * scalar_rat<S>(Rational(kap)) : S(0L);
      nu.col[k].c = Dual<S>(val, der);
    }
    auto e_dual = solve_unipotent(p, ch, nu);
    auto e0 = alg.template zero_vector<S>();
    auto e1 = alg.template zero_vector<S>();
    for (int k = 0; k < n; ++k) {
      e0[alg.e_index(p.psi[k])] = e_dual.c[k].value;
      e1[alg.e_index(p.psi[k])] = e_dual.c[k].deriv;
    }
    auto f0 = dtau(alg, e0);
    auto f1 = dtau(alg, e1);
    auto g = detail::left_log_derivative(alg, f0, f1);
    // Pure group motion in u_-: q-rows 1..n.
    for (int r = 0; r < n; ++r)
      entry[r][i] = g[alg.f_index(p.psi[dec[r]])];
    {
      auto parts = p.template triangular_parts<S>(g);
      for (const auto& c : parts.plus)
        if (!c.is_zero())
          throw std::logic_error("frame_transition: fibre column left u_-");
      for (const auto& c : parts.levi)
        if (!c.is_zero())
          throw std::logic_error("frame_transition: fibre column left u_-");
    }
  }

  // Group columns: Ad_{tau(u)^{-1}} e_{n+1-i}, split by triangular parts.
  for (int i = 0; i < n; ++i) {
    int j0 = dec[n - 1 - i];
    auto negf = f_base;
    for (auto& c : negf) c = -c;
    auto v = alg.exp_ad_apply(
        negf, alg.template basis_vector<S>(alg.e_index(p.psi[j0])));
    auto parts = p.template triangular_parts<S>(v);
    // u_- part: residual group motion.
    for (int r = 0; r < n; ++r)
      entry[r][n + i] = parts.minus[alg.f_index(p.psi[dec[r]])];
    // u_+ plus l part: fibre motion via the infinitesimal action on nu_0,
    // scaled by the chart-1 fibre -t nu_0.
    auto upper = parts.plus;
    for (int k = 0; k < alg.dim; ++k) upper[k] += parts.levi[k];
    auto delta = act_lie(p, ch, upper, nu_zero<S>(p));
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        if (!delta.col[b].f[k].is_zero())
          throw std::logic_error(
              "frame_transition: unexpected nu_0-direction component");
    for (int r = 0; r < n; ++r) {
      int b = dec[n - 1 - r];
      long kap =
          alg.killing_basis(alg.e_index(p.psi[b]), alg.f_index(p.psi[b]));
      entry[n + r][n + i] =
          (-mu) * delta.col[b].c * scalar_rat<S>(rat_frac(1, kap));
    }
  }
  return entry;
}

inline TransitionMatrix frame_transition(const ParabolicData& p,
                                         const Character& ch,
                                         const CovectorPhi<GQ>& phi) {
  TransitionMatrix t;
  t.n = p.n();
  for (int i = 0; i < t.n; ++i) t.dec_order.push_back(t.n - 1 - i);
  t.entry = frame_transition_generic<Poly>(p, ch, phi, Poly::variable());
  for (const auto& row : t.entry)
    for (const auto& e : row) t.max_degree = std::max(t.max_degree, e.degree());
  return t;
}

/// Numeric specialization at a real-rational t (so conj(mu) = mu concretely);
/// the sampling oracle for cross-validation.
inline std::vector<std::vector<GQ>> frame_transition_numeric(
    const ParabolicData& p, const Character& ch, const CovectorPhi<GQ>& phi,
    const Rational& t) {
  return frame_transition_generic<GQ>(p, ch, phi, GQ(t));
}

}  // namespace flagtwist

#endif
