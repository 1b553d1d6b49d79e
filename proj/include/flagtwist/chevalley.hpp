#ifndef FLAGTWIST_CHEVALLEY_HPP
#define FLAGTWIST_CHEVALLEY_HPP

#include <stdexcept>
#include <vector>

#include "flagtwist/dual.hpp"
#include "flagtwist/rootsystem.hpp"

namespace flagtwist {

template <class R>
using LieVector = std::vector<R>;

/// Chevalley basis for g with integer structure constants.
/// Basis ordering: f_alpha (canonical root order), h_1..h_rank, e_alpha.
struct ChevalleyAlgebra {
  RootSystem rs;
  int dim = 0;

  int f_index(int k) const { return k; }
  int h_index(int i) const { return rs.num_positive() + i; }
  int e_index(int k) const { return rs.num_positive() + rs.rank + k; }

  struct Term {
    int basis;
    long coeff;
  };
  /// table[i * dim + j] = [b_i, b_j] for i < j; antisymmetry supplies the rest.
  std::vector<std::vector<Term>> table;

  /// Killing form on basis pairs, kappa[i*dim+j] = tr(ad_i ad_j).
  std::vector<long> kappa;

  const std::vector<Term>& pair_terms(int i, int j) const {
    return table[static_cast<size_t>(i) * dim + j];
  }

  long killing_basis(int i, int j) const {
    return kappa[static_cast<size_t>(i) * dim + j];
  }

  /// N_{a,b} for signed roots (k+1 for positive root k, -(k+1) for its negative).
  long structure_n(int a, int b) const;

  template <class R>
  LieVector<R> zero_vector() const {
    return LieVector<R>(dim, R(0L));
  }

  template <class R>
  LieVector<R> basis_vector(int idx) const {
    auto v = zero_vector<R>();
    v[idx] = R(1L);
    return v;
  }

  template <class R>
  LieVector<R> bracket(const LieVector<R>& x, const LieVector<R>& y) const {
    auto out = zero_vector<R>();
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (i == j || y[j].is_zero()) continue;
        const auto& terms = i < j ? pair_terms(i, j) : pair_terms(j, i);
        if (terms.empty()) continue;
        R c = x[i] * y[j];
        if (i > j) c = -c;
        for (const auto& t : terms)
          out[t.basis] += c * scalar_rat<R>(Rational(t.coeff));
      }
    }
    return out;
  }

  template <class R>
  std::vector<LieVector<R>> ad_matrix(const LieVector<R>& x) const {
    std::vector<LieVector<R>> cols;
    cols.reserve(dim);
    for (int j = 0; j < dim; ++j) cols.push_back(bracket(x, basis_vector<R>(j)));
    return cols;  // column j = [x, b_j]
  }

  /// exp(ad_E) applied to v as a terminating series; throws if ad_E is not
  /// nilpotent.
  template <class R>
  LieVector<R> exp_ad_apply(const LieVector<R>& e, const LieVector<R>& v) const {
    auto acc = v;
    auto term = v;
    for (int k = 1;; ++k) {
      if (k > dim + 1)
        throw std::domain_error("exp_ad: argument is not nilpotent");
      term = bracket(e, term);
      bool zero = true;
      for (const auto& c : term) zero = zero && c.is_zero();
      if (zero) break;
      R inv_k = scalar_rat<R>(Rational(1, k));
      for (auto& c : term) c *= inv_k;
      for (int i = 0; i < dim; ++i) acc[i] += term[i];
    }
    return acc;
  }

  template <class R>
  std::vector<LieVector<R>> exp_ad(const LieVector<R>& e) const {
    std::vector<LieVector<R>> cols;
    cols.reserve(dim);
    for (int j = 0; j < dim; ++j)
      cols.push_back(exp_ad_apply(e, basis_vector<R>(j)));
    return cols;
  }

  template <class R>
  R killing_form(const LieVector<R>& x, const LieVector<R>& y) const {
    R s(0L);
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        long k = killing_basis(i, j);
        if (k != 0) s += x[i] * y[j] * scalar_rat<R>(Rational(k));
      }
    }
    return s;
  }
};

/// Builds the structure-constant table (extraspecial-pair signs), runs the
/// full Jacobi sweep, and precomputes the Killing table.
ChevalleyAlgebra build_chevalley(const RootSystem& rs);

}  // namespace flagtwist

#endif
