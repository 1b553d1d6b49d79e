#ifndef FLAGTWIST_GROUPWORD_HPP
#define FLAGTWIST_GROUPWORD_HPP

#include "flagtwist/realform.hpp"

namespace flagtwist {

/// Formal product of exponentials exp(letter_1) ... exp(letter_k); each
/// letter must have nilpotent ad (enforced when the adjoint is applied).
/// Leftmost letter acts outermost.
template <class R>
struct GroupWord {
  std::vector<LieVector<R>> letters;

  GroupWord reversed_negated() const {
    GroupWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      auto l = *it;
      for (auto& c : l) c = -c;
      w.letters.push_back(std::move(l));
    }
    return w;
  }

  GroupWord concat(const GroupWord& o) const {
    GroupWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }
};

/// Ad(word) applied to v: rightmost letter first.
template <class R>
LieVector<R> ad_word_apply(const ChevalleyAlgebra& alg, const GroupWord<R>& w,
                           const LieVector<R>& v) {
  auto out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = alg.exp_ad_apply(*it, out);
  return out;
}

/// Ad(word^-1) applied to v.
template <class R>
LieVector<R> ad_word_inv_apply(const ChevalleyAlgebra& alg,
                               const GroupWord<R>& w, const LieVector<R>& v) {
  auto out = v;
  for (const auto& l : w.letters) {
    auto neg = l;
    for (auto& c : neg) c = -c;
    out = alg.exp_ad_apply(neg, out);
  }
  return out;
}

/// Dense adjoint matrix of the word (columns = images of basis vectors).
template <class R>
std::vector<LieVector<R>> ad_word_matrix(const ChevalleyAlgebra& alg,
                                         const GroupWord<R>& w) {
  std::vector<LieVector<R>> cols;
  cols.reserve(alg.dim);
  for (int j = 0; j < alg.dim; ++j)
    cols.push_back(ad_word_apply(alg, w, alg.template basis_vector<R>(j)));
  return cols;
}

/// Letter-wise dtau; tau_G(exp xi) = exp(dtau xi).
template <class R>
GroupWord<R> tau_word(const ChevalleyAlgebra& alg, const GroupWord<R>& w) {
  GroupWord<R> out;
  for (const auto& l : w.letters) out.letters.push_back(dtau(alg, l));
  return out;
}

}  // namespace flagtwist

#endif
