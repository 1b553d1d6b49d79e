#ifndef FLAGTWIST_REALFORM_HPP
#define FLAGTWIST_REALFORM_HPP

#include "flagtwist/parabolic.hpp"

namespace flagtwist {

/// Compact real form: e_alpha -> -f_alpha, f_alpha -> -e_alpha,
/// h_i -> -h_i, extended conjugate-linearly (the Chevalley involution
/// composed with coefficient conjugation; the signs are what make it an
/// automorphism, since N_{-a,-b} = -N_{a,b}). The scalar ring must support
/// conjugation (GQ directly; Poly via conj_poly with the mu -> t reading).
template <class R>
LieVector<R> dtau(const ChevalleyAlgebra& alg, const LieVector<R>& x) {
  auto y = alg.template zero_vector<R>();
  int np = alg.rs.num_positive();
  for (int k = 0; k < np; ++k) {
    y[alg.f_index(k)] = -conj_value(x[alg.e_index(k)]);
    y[alg.e_index(k)] = -conj_value(x[alg.f_index(k)]);
  }
  for (int i = 0; i < alg.rs.rank; ++i)
    y[alg.h_index(i)] = -conj_value(x[alg.h_index(i)]);
  return y;
}

/// dchi(dtau(x)) = -conj(dchi(x)), exact.
template <class R>
bool character_reality_check(const Character& ch, const LieVector<R>& x) {
  const auto& alg = *ch.parabolic->algebra;
  return ch.dchi(dtau(alg, x)) == -conj_value(ch.dchi(x));
}

}  // namespace flagtwist

#endif
