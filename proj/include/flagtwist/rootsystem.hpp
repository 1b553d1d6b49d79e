#ifndef FLAGTWIST_ROOTSYSTEM_HPP
#define FLAGTWIST_ROOTSYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagtwist/gq.hpp"

namespace flagtwist {

/// Root system of a simple Lie algebra, built from its Cartan matrix.
/// Roots live in simple-root coordinates; no Euclidean embedding.
struct RootSystem {
  char type_letter = 0;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Rational> half_norms;      // d_i = (alpha_i, alpha_i)/2, symmetrizer
  std::vector<std::vector<int>> positive_roots;  // (height asc, lex asc)
  std::vector<int> heights;
  std::vector<std::vector<int>> coroot_expansions;  // h_alpha = sum k_i h_i
  std::vector<Rational> root_half_norms;            // (alpha, alpha)/2 per root
  int max_height = 0;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  /// Index of the positive root with these coordinates, if any.
  std::optional<int> root_index(const std::vector<int>& coords) const;

  /// <beta, alpha_i^vee> for beta given in simple-root coordinates.
  long pairing(const std::vector<int>& beta, int i) const;

  /// (alpha, beta) up to the fixed normalization of half_norms.
  Rational bilinear(const std::vector<int>& a, const std::vector<int>& b) const;

 private:
  std::map<std::vector<int>, int> index_;
  friend RootSystem build_root_system(char type_letter, int rank, int rank_limit);
};

/// Validity: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
RootSystem build_root_system(char type_letter, int rank, int rank_limit = 8);

}  // namespace flagtwist

#endif
