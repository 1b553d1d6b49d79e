#include "flagtwist/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flagtwist {

std::optional<int> RootSystem::root_index(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long RootSystem::pairing(const std::vector<int>& beta, int i) const {
  long s = 0;
  for (int j = 0; j < rank; ++j) s += static_cast<long>(cartan[i][j]) * beta[j];
  return s;
}

Rational RootSystem::bilinear(const std::vector<int>& a,
                              const std::vector<int>& b) const {
  // (alpha_i, alpha_j) = d_i * cartan[i][j]
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += half_norms[i] * cartan[i][j] * a[i] * b[j];
    }
  }
  return s;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char t, int n) {
  auto bad = [&] {
    throw std::invalid_argument(std::string("invalid type/rank: ") + t + "_" +
                                std::to_string(n));
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (t) {
    case 'A':
      if (n < 1) bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      if (n < 4) bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      // Bourbaki numbering: node 2 attached to node 4 of the A-chain 1-3-4-5-...
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) bad();
      link(0, 1);
      link(1, 2, -2, -1);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(2, 3);
      break;
    case 'G':
      if (n != 2) bad();
      link(0, 1, -1, -3);  // alpha_1 long, alpha_2 short
      break;
    default:
      bad();
  }
  return a;
}

// Symmetrizer: d_i * a[i][j] = d_j * a[j][i], normalized so min d_i = 1.
std::vector<Rational> symmetrizer(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (a[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
        d[j] = d[i] * a[i][j] / a[j][i];
        changed = true;
      }
  }
  Rational mn = d[0];
  for (auto& x : d)
    if (x < mn) mn = x;
  for (auto& x : d) x /= mn;
  return d;
}

}  // namespace

RootSystem build_root_system(char type_letter, int rank, int rank_limit) {
  if (rank > rank_limit)
    throw std::invalid_argument("rank exceeds desk limit " +
                                std::to_string(rank_limit));
  RootSystem rs;
  rs.type_letter = type_letter;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type_letter, rank);
  rs.half_norms = symmetrizer(rs.cartan);

  // Closure by root strings, level by level in height.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& alpha : frontier) {
      for (int i = 0; i < rank; ++i) {
        std::vector<int> cand = alpha;
        cand[i] += 1;
        if (roots.count(cand)) continue;
        // p = max k with alpha - k*alpha_i a root (string stays positive).
        int p = 0;
        std::vector<int> down = alpha;
        for (;;) {
          down[i] -= 1;
          bool nonneg = true;
          for (int v : down) nonneg = nonneg && v >= 0;
          if (!nonneg || !roots.count(down)) break;
          ++p;
        }
        long q = p - rs.pairing(alpha, i);
        if (q > 0) {
          roots.insert(cand);
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_roots.assign(roots.begin(), roots.end());
  auto height_of = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const auto& a, const auto& b) {
              int ha = height_of(a), hb = height_of(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& alpha = rs.positive_roots[k];
    rs.index_[alpha] = k;
    int h = height_of(alpha);
    rs.heights.push_back(h);
    rs.max_height = std::max(rs.max_height, h);
    // alpha^vee = sum_i k_i alpha_i^vee with k_i = b_i * d_i / ((alpha,alpha)/2)
    Rational hn = rs.bilinear(alpha, alpha) / 2;
    rs.root_half_norms.push_back(hn);
    std::vector<int> k_exp(rank, 0);
    for (int i = 0; i < rank; ++i) {
      Rational ki = alpha[i] * rs.half_norms[i] / hn;
      if (ki.get_den() != 1)
        throw std::logic_error("non-integer coroot expansion");
      k_exp[i] = static_cast<int>(ki.get_num().get_si());
      if (k_exp[i] < 0) throw std::logic_error("negative coroot expansion");
    }
    rs.coroot_expansions.push_back(k_exp);
  }
  return rs;
}

}  // namespace flagtwist
