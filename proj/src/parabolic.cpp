#include "flagtwist/parabolic.hpp"

#include <stdexcept>

namespace flagtwist {

ParabolicData build_parabolic(const ChevalleyAlgebra& alg,
                              const std::set<int>& levi_simple) {
  const auto& rs = alg.rs;
  for (int i : levi_simple)
    if (i < 0 || i >= rs.rank)
      throw std::invalid_argument("levi_simple index out of range");
  if (static_cast<int>(levi_simple.size()) == rs.rank)
    throw std::invalid_argument(
        "levi_simple equals the full simple-root set: P must be proper");

  ParabolicData p;
  p.algebra = &alg;
  p.levi_simple = levi_simple;
  p.psi_pos.assign(rs.num_positive(), -1);
  for (int k = 0; k < rs.num_positive(); ++k) {
    bool in_l = true;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.positive_roots[k][i] != 0 && !levi_simple.count(i)) in_l = false;
    if (in_l)
      p.phi_l.push_back(k);
    else {
      p.psi_pos[k] = static_cast<int>(p.psi.size());
      p.psi.push_back(k);
    }
  }
  p.part_mask.assign(alg.dim, 0);
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (p.psi_pos[k] >= 0) {
      p.part_mask[alg.e_index(k)] = 1;
      p.part_mask[alg.f_index(k)] = -1;
    }
  }
  return p;
}

Character build_character(const ParabolicData& p,
                          const std::map<int, long>& values) {
  const auto& rs = p.algebra->rs;
  Character c;
  c.parabolic = &p;
  c.chi.assign(rs.rank, 0);
  for (const auto& [i, v] : values) {
    if (i < 0 || i >= rs.rank)
      throw std::invalid_argument("character index out of range");
    if (p.levi_simple.count(i)) {
      if (v != 0)
        throw std::invalid_argument(
            "nonzero character value on a Levi simple root");
      continue;
    }
    c.chi[i] = v;
  }
  for (int i = 0; i < rs.rank; ++i) {
    if (p.levi_simple.count(i)) continue;
    if (!values.count(i))
      throw std::invalid_argument("missing character value for simple root " +
                                  std::to_string(i + 1));
    if (c.chi[i] >= 0)
      throw std::invalid_argument("character not strictly anti-dominant");
  }
  for (int k : p.psi) {
    long w = 0;
    for (int i = 0; i < rs.rank; ++i)
      w += c.chi[i] * rs.coroot_expansions[k][i];
    if (w == 0) throw std::logic_error("w_alpha vanished on Psi");
    c.w_alpha.push_back(w);
  }
  return c;
}

}  // namespace flagtwist
