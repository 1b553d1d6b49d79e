#ifndef FLAGTWIST_CONNSPACE_HPP
#define FLAGTWIST_CONNSPACE_HPP

#include <optional>

#include "flagtwist/parabolic.hpp"

namespace flagtwist {

/// Canonical representative of a class in (g + C)/p: coefficients of the
/// f-bar basis (alpha in Psi) plus the class of (0, 1).
template <class R>
struct QuotVec {
  std::vector<R> f;
  R c;

  QuotVec() : c(0L) {}
  explicit QuotVec(int n) : f(n, R(0L)), c(0L) {}

  QuotVec operator+(const QuotVec& o) const {
    QuotVec r = *this;
    for (size_t k = 0; k < f.size(); ++k) r.f[k] += o.f[k];
    r.c += o.c;
    return r;
  }
  QuotVec operator-(const QuotVec& o) const {
    QuotVec r = *this;
    for (size_t k = 0; k < f.size(); ++k) r.f[k] -= o.f[k];
    r.c -= o.c;
    return r;
  }
  QuotVec scaled(const R& s) const {
    QuotVec r = *this;
    for (auto& x : r.f) x *= s;
    r.c *= s;
    return r;
  }
  bool operator==(const QuotVec& o) const { return f == o.f && c == o.c; }
  bool is_zero() const {
    for (const auto& x : f)
      if (!x.is_zero()) return false;
    return c.is_zero();
  }
};

/// nu in Hom(g/p, (g + C)/p), stored column-wise; scalar_sigma is the lambda
/// with sigma . nu = lambda Id when nu lies in the w-space.
template <class R>
struct NuMap {
  std::vector<QuotVec<R>> col;
  std::optional<R> scalar_sigma;

  bool operator==(const NuMap& o) const { return col == o.col; }

  /// Checks sigma . nu = lambda Id for some lambda and records it.
  bool detect_sigma() {
    if (col.empty()) return false;
    R lambda = col[0].f[0];
    for (size_t a = 0; a < col.size(); ++a)
      for (size_t b = 0; b < col[a].f.size(); ++b)
        if (col[a].f[b] != (a == b ? lambda : R(0L))) return false;
    scalar_sigma = lambda;
    return true;
  }
  bool in_a_space() const {
    NuMap tmp = *this;
    return tmp.detect_sigma() && *tmp.scalar_sigma == R(1L);
  }
};

/// phi in (g/p)^vee, coordinates z_alpha = phi(f-bar_alpha).
template <class R>
struct CovectorPhi {
  std::vector<R> z;
};

/// E = sum c_alpha e_alpha, coefficients per Psi position.
template <class R>
struct NilpotentParam {
  std::vector<R> c;

  bool operator==(const NilpotentParam& o) const { return c == o.c; }
};

template <class R>
LieVector<R> nilpotent_lie(const ParabolicData& p, const NilpotentParam<R>& e) {
  const auto& alg = *p.algebra;
  auto v = alg.template zero_vector<R>();
  for (int k = 0; k < p.n(); ++k) v[alg.e_index(p.psi[k])] = e.c[k];
  return v;
}

/// Class of (xi, c) in (g + C)/p: subtract the twisted inclusion of the
/// p-part, which adds dchi(xi^l) to the C-slot.
template <class R>
QuotVec<R> reduce_mod_p(const ParabolicData& p, const Character& ch,
                        const LieVector<R>& xi, const R& c) {
  const auto& alg = *p.algebra;
  QuotVec<R> q(p.n());
  for (int k = 0; k < p.n(); ++k) q.f[k] = xi[alg.f_index(p.psi[k])];
  auto parts = p.template triangular_parts<R>(xi);
  q.c = c + ch.dchi(parts.levi);
  return q;
}

template <class R>
LieVector<R> lift_lie_part(const ParabolicData& p, const QuotVec<R>& q) {
  const auto& alg = *p.algebra;
  auto v = alg.template zero_vector<R>();
  for (int k = 0; k < p.n(); ++k) v[alg.f_index(p.psi[k])] = q.f[k];
  return v;
}

/// The base point nu_0: f-bar_alpha -> class of (f_alpha, 0).
template <class R>
NuMap<R> nu_zero(const ParabolicData& p) {
  NuMap<R> nu;
  nu.col.assign(p.n(), QuotVec<R>(p.n()));
  for (int k = 0; k < p.n(); ++k) nu.col[k].f[k] = R(1L);
  nu.scalar_sigma = R(1L);
  return nu;
}

/// (u . nu)(f-bar_a) = Ad_u nu(class of Ad_{u^-1} f_a); the C-slot rides
/// along unchanged under Ad (trivial adjoint of the C^x factor).
template <class R>
NuMap<R> act_group(const ParabolicData& p, const Character& ch,
                   const NilpotentParam<R>& e, const NuMap<R>& nu) {
  const auto& alg = *p.algebra;
  auto elie = nilpotent_lie(p, e);
  auto neg = elie;
  for (auto& x : neg) x = -x;
  NuMap<R> out;
  out.col.assign(p.n(), QuotVec<R>(p.n()));
  for (int a = 0; a < p.n(); ++a) {
    auto w = alg.exp_ad_apply(neg, alg.template basis_vector<R>(
                                       alg.f_index(p.psi[a])));
    // nu applied linearly to the class of w
    QuotVec<R> img(p.n());
    for (int b = 0; b < p.n(); ++b) {
      const R& coeff = w[alg.f_index(p.psi[b])];
      if (coeff.is_zero()) continue;
      img = img + nu.col[b].scaled(coeff);
    }
    auto lifted = lift_lie_part(p, img);
    auto back = alg.exp_ad_apply(elie, lifted);
    out.col[a] = reduce_mod_p(p, ch, back, img.c);
  }
  out.scalar_sigma = nu.scalar_sigma;
  return out;
}

/// Infinitesimal action of x in p: (x . nu)(f-bar) = x . nu(f-bar) -
/// nu(class of [x, f-bar]).
template <class R>
NuMap<R> act_lie(const ParabolicData& p, const Character& ch,
                 const LieVector<R>& x, const NuMap<R>& nu) {
  const auto& alg = *p.algebra;
  {
    auto parts = p.template triangular_parts<R>(x);
    for (const auto& v : parts.minus)
      if (!v.is_zero()) throw std::invalid_argument("act_lie: x not in p");
  }
  NuMap<R> out;
  out.col.assign(p.n(), QuotVec<R>(p.n()));
  for (int a = 0; a < p.n(); ++a) {
    auto lifted = lift_lie_part(p, nu.col[a]);
    auto t1 = reduce_mod_p(p, ch, alg.bracket(x, lifted), R(0L));
    auto br = alg.bracket(x, alg.template basis_vector<R>(alg.f_index(p.psi[a])));
    QuotVec<R> t2(p.n());
    for (int b = 0; b < p.n(); ++b) {
      const R& coeff = br[alg.f_index(p.psi[b])];
      if (!coeff.is_zero()) t2 = t2 + nu.col[b].scaled(coeff);
    }
    out.col[a] = t1 - t2;
  }
  return out;
}

/// Affine coordinates on the a-space: nu = nu_0 + phi.
template <class R>
CovectorPhi<R> phi_of_nu(const NuMap<R>& nu) {
  if (!nu.in_a_space())
    throw std::invalid_argument("phi_of_nu: nu not in the a-space");
  CovectorPhi<R> phi;
  for (const auto& c : nu.col) phi.z.push_back(c.c);
  return phi;
}

template <class R>
NuMap<R> nu_of_phi(const ParabolicData& p, const CovectorPhi<R>& phi) {
  auto nu = nu_zero<R>(p);
  for (int k = 0; k < p.n(); ++k) nu.col[k].c = phi.z[k];
  return nu;
}

/// Unique E with act_group(E, nu_0) = nu, by induction on root height;
/// divisions only by the nonzero integers w_alpha. The final exact
/// verification is part of the contract.
template <class R>
NilpotentParam<R> solve_unipotent(const ParabolicData& p, const Character& ch,
                                  const NuMap<R>& nu) {
  const auto& rs = p.algebra->rs;
  if (!nu.in_a_space())
    throw std::invalid_argument("solve_unipotent: nu not in the a-space");
  NilpotentParam<R> e;
  e.c.assign(p.n(), R(0L));
  for (int r = 1; r <= rs.max_height; ++r) {
    auto cur = act_group(p, ch, e, nu_zero<R>(p));
    for (int k = 0; k < p.n(); ++k) {
      if (rs.heights[p.psi[k]] != r) continue;
      R delta = nu.col[k].c - cur.col[k].c;
      e.c[k] = delta * scalar_rat<R>(rat_frac(1, ch.w_alpha[k]));
    }
  }
  if (!(act_group(p, ch, e, nu_zero<R>(p)) == nu))
    throw std::logic_error("solve_unipotent: post-verification failed");
  return e;
}

}  // namespace flagtwist

#endif
