#ifndef FLAGTWIST_PARABOLIC_HPP
#define FLAGTWIST_PARABOLIC_HPP

#include <set>

#include "flagtwist/chevalley.hpp"

namespace flagtwist {

/// Standard parabolic p = l + u_+ from a subset S of simple roots, with the
/// triangular decomposition g = u_- + l + u_+.
struct ParabolicData {
  const ChevalleyAlgebra* algebra = nullptr;
  std::set<int> levi_simple;     // 0-based simple root indices
  std::vector<int> phi_l;        // positive-root indices supported on S
  std::vector<int> psi;          // complement, canonical order
  std::vector<int> psi_pos;      // root index -> position in psi, or -1
  std::vector<int> part_mask;    // per basis index: -1 u_-, 0 l, +1 u_+

  int n() const { return static_cast<int>(psi.size()); }

  template <class R>
  struct Parts {
    LieVector<R> plus, levi, minus;
  };

  template <class R>
  Parts<R> triangular_parts(const LieVector<R>& x) const {
    const auto& alg = *algebra;
    Parts<R> p{alg.zero_vector<R>(), alg.zero_vector<R>(), alg.zero_vector<R>()};
    for (int i = 0; i < alg.dim; ++i) {
      if (x[i].is_zero()) continue;
      if (part_mask[i] > 0)
        p.plus[i] = x[i];
      else if (part_mask[i] < 0)
        p.minus[i] = x[i];
      else
        p.levi[i] = x[i];
    }
    return p;
  }
};

/// Strictly anti-dominant integral character of P: chi_i = 0 on S, < 0 off S.
struct Character {
  const ParabolicData* parabolic = nullptr;
  std::vector<long> chi;      // per simple root index
  std::vector<long> w_alpha;  // per psi position, w = dchi(h_alpha)

  template <class R>
  R dchi(const LieVector<R>& x) const {
    const auto& alg = *parabolic->algebra;
    R s(0L);
    for (int i = 0; i < alg.rs.rank; ++i)
      if (chi[i] != 0 && !x[alg.h_index(i)].is_zero())
        s += x[alg.h_index(i)] * scalar_rat<R>(Rational(chi[i]));
    return s;
  }
};

/// Errors if levi_simple is the full simple-root set (Psi would be empty).
ParabolicData build_parabolic(const ChevalleyAlgebra& alg,
                              const std::set<int>& levi_simple);

/// values maps simple index -> chi_i; validation enforces strict
/// anti-dominance and chi = 0 on the Levi set.
Character build_character(const ParabolicData& p,
                          const std::map<int, long>& values);

}  // namespace flagtwist

#endif
