#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "flagtwist/chevalley.hpp"
#include "flagtwist/sampling.hpp"
#include "flagtwist/verifier.hpp"

using namespace flagtwist;

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 zero3() { return {}; }

Mat3 comm(const Mat3& a, const Mat3& b) {
  Mat3 c = zero3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return c;
}

/// sl3 realization of the A2 Chevalley basis by elementary matrices;
/// the extraspecial pair for alpha1+alpha2 is (alpha2, alpha1) under the
/// canonical (height, lex) order, so e_{11} = [e_{01}, e_{10}] = -E13.
Mat3 sl3_matrix(const ChevalleyAlgebra& alg, int idx) {
  auto elem = [](int r, int c, int sign = 1) {
    Mat3 m = zero3();
    m[r][c] = sign;
    return m;
  };
  int r10 = *alg.rs.root_index({1, 0});
  int r01 = *alg.rs.root_index({0, 1});
  int r11 = *alg.rs.root_index({1, 1});
  if (idx == alg.e_index(r10)) return elem(0, 1);
  if (idx == alg.e_index(r01)) return elem(1, 2);
  if (idx == alg.e_index(r11)) return elem(0, 2, -1);
  if (idx == alg.f_index(r10)) return elem(1, 0);
  if (idx == alg.f_index(r01)) return elem(2, 1);
  if (idx == alg.f_index(r11)) return elem(2, 0, -1);
  Mat3 h = zero3();
  int i = idx - alg.h_index(0);
  h[i][i] = 1;
  h[i + 1][i + 1] = -1;
  return h;
}

}  // namespace

TEST_CASE("A2 brackets match sl3 elementary-matrix commutators") {
  auto alg = build_chevalley(build_root_system('A', 2));
  REQUIRE(alg.dim == 8);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      auto br = alg.bracket(alg.basis_vector<GQ>(i), alg.basis_vector<GQ>(j));
      Mat3 want = comm(sl3_matrix(alg, i), sl3_matrix(alg, j));
      Mat3 got = zero3();
      for (int k = 0; k < alg.dim; ++k) {
        if (br[k].is_zero()) continue;
        REQUIRE(br[k].im == 0);
        auto m = sl3_matrix(alg, k);
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) got[r][c] += br[k].re * m[r][c];
      }
      CAPTURE(i);
      CAPTURE(j);
      CHECK(got == want);
    }
}

TEST_CASE("signed structure constants") {
  auto alg = build_chevalley(build_root_system('A', 2));
  CHECK(alg.structure_n(1, 2) == 1);    // extraspecial pair, N = p + 1
  CHECK(alg.structure_n(2, 1) == -1);   // antisymmetry
  CHECK(alg.structure_n(-1, -2) == -1); // N_{-a,-b} = -N_{a,b}
  CHECK(alg.structure_n(-2, -1) == 1);
}

TEST_CASE("sl2 exp_ad against matrix conjugation") {
  auto alg = build_chevalley(build_root_system('A', 1));
  int fe = alg.f_index(0), h = alg.h_index(0), ee = alg.e_index(0);
  SUBCASE("numeric c") {
    Sampler smp(5, 9);
    for (int s = 0; s < 10; ++s) {
      GQ c = smp.gaussian();
      auto arg = alg.zero_vector<GQ>();
      arg[ee] = c;
      auto img = alg.exp_ad_apply(arg, alg.basis_vector<GQ>(fe));
      // Ad(exp(c e)) f = f + c h - c^2 e
      CHECK(img[fe] == GQ(1L));
      CHECK(img[h] == c);
      CHECK(img[ee] == -(c * c));
    }
  }
  SUBCASE("symbolic c") {
    Poly c = Poly::variable();
    auto arg = alg.zero_vector<Poly>();
    arg[ee] = c;
    auto img = alg.exp_ad_apply(arg, alg.basis_vector<Poly>(fe));
    CHECK(img[fe] == Poly(1L));
    CHECK(img[h] == c);
    CHECK(img[ee] == -(c * c));
  }
  SUBCASE("non-nilpotent argument throws") {
    CHECK_THROWS_AS(alg.exp_ad_apply(alg.basis_vector<GQ>(h),
                                     alg.basis_vector<GQ>(ee)),
                    std::domain_error);
  }
}

TEST_CASE("exp_ad is a Lie algebra automorphism") {
  auto alg = build_chevalley(build_root_system('A', 2));
  Sampler smp(13, 5);
  for (int s = 0; s < 5; ++s) {
    auto e = alg.zero_vector<GQ>();
    for (int k = 0; k < 3; ++k) e[alg.e_index(k)] = smp.gaussian();
    auto x = alg.zero_vector<GQ>();
    auto y = alg.zero_vector<GQ>();
    for (int k = 0; k < alg.dim; ++k) {
      x[k] = smp.gaussian();
      y[k] = smp.gaussian();
    }
    auto ax = alg.exp_ad_apply(e, x);
    auto ay = alg.exp_ad_apply(e, y);
    CHECK(alg.bracket(ax, ay) == alg.exp_ad_apply(e, alg.bracket(x, y)));
    // Killing invariance under the adjoint action and associativity
    CHECK(alg.killing_form(ax, ay) == alg.killing_form(x, y));
    auto z = alg.basis_vector<GQ>(alg.h_index(0));
    CHECK(alg.killing_form(alg.bracket(x, y), z) ==
          alg.killing_form(x, alg.bracket(y, z)));
  }
}

TEST_CASE("Killing values") {
  auto a1 = build_chevalley(build_root_system('A', 1));
  CHECK(a1.killing_basis(a1.e_index(0), a1.f_index(0)) == 4);
  CHECK(a1.killing_basis(a1.h_index(0), a1.h_index(0)) == 8);
  auto a2 = build_chevalley(build_root_system('A', 2));
  CHECK(a2.killing_basis(a2.e_index(0), a2.f_index(0)) == 6);
  CHECK(a2.killing_basis(a2.e_index(0), a2.e_index(0)) == 0);
}

TEST_CASE("Jacobi sweep is clean and detects corruption") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    auto alg = build_chevalley(build_root_system(t, r));
    CHECK(!jacobi_witness(alg).has_value());
  }
  auto alg = build_chevalley(build_root_system('A', 2));
  corrupt_one_structure_constant(alg);
  auto w = jacobi_witness(alg);
  REQUIRE(w.has_value());
  CHECK(w->find("Jacobi") != std::string::npos);
}
