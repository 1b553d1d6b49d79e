#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/sampling.hpp"
#include "flagtwist/twistor.hpp"

using namespace flagtwist;

namespace {

struct Setup {
  ChevalleyAlgebra alg;
  ParabolicData p;
  Character ch;
};

Setup& sl2() {
  static Setup s;
  static bool init = [] {
    s.alg = build_chevalley(build_root_system('A', 1));
    s.p = build_parabolic(s.alg, {});
    s.ch = build_character(s.p, {{0, -1}});
    return true;
  }();
  (void)init;
  return s;
}

Setup& a2_pmax() {
  static Setup s;
  static bool init = [] {
    s.alg = build_chevalley(build_root_system('A', 2));
    s.p = build_parabolic(s.alg, {1});
    s.ch = build_character(s.p, {{0, -1}});
    return true;
  }();
  (void)init;
  return s;
}

}  // namespace

TEST_CASE("sigma_circ values and involution") {
  CHECK(sigma_circ(GQ(1L)) == GQ(-1L));
  CHECK(sigma_circ(GQ::i()) == -GQ::i());
  CHECK_THROWS_AS(sigma_circ(GQ()), std::domain_error);
  Sampler smp(2, 9);
  for (int s = 0; s < 20; ++s) {
    GQ lambda = smp.nonzero_gaussian();
    CHECK(sigma_circ(sigma_circ(lambda)) == lambda);
  }
}

TEST_CASE("gamma splits off the fibre scale") {
  auto& s = sl2();
  auto nu = scale_nu(nu_zero<GQ>(s.p), GQ(2L));
  auto [y, lambda] = gamma_map({GroupWord<GQ>{}, nu});
  CHECK(lambda == GQ(2L));
  CHECK(y.nu.in_a_space());
  CHECK(gamma_inverse(y, lambda).nu == nu);
  // lambda = 1 leaves the point unchanged
  auto [y1, l1] = gamma_map({GroupWord<GQ>{}, nu_zero<GQ>(s.p)});
  CHECK(l1 == GQ(1L));
  CHECK(y1.nu == nu_zero<GQ>(s.p));
  // the zero fibre is outside the domain
  auto zero = scale_nu(nu_zero<GQ>(s.p), GQ());
  CHECK_THROWS_AS(gamma_map({GroupWord<GQ>{}, zero}), std::domain_error);
}

TEST_CASE("tau_C fixes the base point and conjugates the solve") {
  auto& s = sl2();
  FiberedPoint<GQ> base{GroupWord<GQ>{}, nu_zero<GQ>(s.p)};
  auto img = tau_C_point(s.p, s.ch, base);
  CHECK(img.nu == nu_zero<GQ>(s.p));
  REQUIRE(img.word.letters.size() == 1);
  for (const auto& c : img.word.letters[0]) CHECK(c.is_zero());

  CovectorPhi<GQ> phi{{GQ(rat_frac(2, 3), Rational(1))}};
  FiberedPoint<GQ> pt{GroupWord<GQ>{}, nu_of_phi<GQ>(s.p, phi)};
  auto e = solve_unipotent(s.p, s.ch, pt.nu);
  auto img2 = tau_C_point(s.p, s.ch, pt);
  REQUIRE(img2.word.letters.size() == 1);
  CHECK(img2.word.letters[0] == dtau(s.alg, nilpotent_lie(s.p, e)));
  CHECK(img2.nu == nu_zero<GQ>(s.p));
}

TEST_CASE("tau_circ on a phi = 0 line scales the fibre by sigma_circ") {
  auto& s = sl2();
  for (GQ lambda : {GQ(3L), GQ(Rational(1), Rational(2)), -GQ(1L)}) {
    FiberedPoint<GQ> pt{GroupWord<GQ>{}, scale_nu(nu_zero<GQ>(s.p), lambda)};
    auto img = tau_circ(s.p, s.ch, pt);
    auto nu = img.nu;
    REQUIRE(nu.detect_sigma());
    CHECK(*nu.scalar_sigma == sigma_circ(lambda));
    for (const auto& l : img.word.letters)
      for (const auto& c : l) CHECK(c.is_zero());
  }
}

TEST_CASE("sl2 line polynomials: c(mu) = (z/w) mu") {
  auto& s = sl2();
  GQ z(rat_frac(3, 2), Rational(1));
  auto cs = line_polynomials(s.p, s.ch, CovectorPhi<GQ>{{z}});
  REQUIRE(cs.c.size() == 1);
  CHECK(cs.c[0].degree() == 1);
  CHECK(cs.c[0].coeff(1) == z * GQ(rat_frac(1, -1)));  // w = -1
  CHECK(cs.c[0].constant_term().is_zero());
  // phi = 0 collapses to the constant line
  auto zero = line_polynomials(s.p, s.ch, CovectorPhi<GQ>{{GQ()}});
  CHECK(zero.c[0].is_zero());
}

TEST_CASE("generic lines have non-constant c_alpha with c_alpha(0) = 0") {
  auto& s = a2_pmax();
  Sampler smp(6, 9);
  for (int t = 0; t < 5; ++t) {
    CovectorPhi<GQ> phi;
    for (int k = 0; k < s.p.n(); ++k) phi.z.push_back(smp.nonzero_gaussian());
    auto cs = line_polynomials(s.p, s.ch, phi);
    for (const auto& c : cs.c) {
      CHECK(c.degree() >= 1);
      CHECK(c.constant_term().is_zero());
    }
  }
}

TEST_CASE("sl2 transition matrix golden values") {
  auto& s = sl2();
  GQ z(Rational(2), Rational(1));
  auto t = frame_transition(s.p, s.ch, CovectorPhi<GQ>{{z}});
  REQUIRE(t.n == 1);
  Poly tv = Poly::variable();
  // kappa = 4, w = -1: diagonal -(kappa/w) t and -(w/kappa) t
  CHECK(t.entry[0][0] == Poly(GQ(4L)) * tv);
  CHECK(t.entry[1][1] == Poly(GQ(rat_frac(1, 4))) * tv);
  CHECK(t.entry[1][0].is_zero());
  GQ zbar = conj_scalar(z);
  CHECK(t.entry[0][1] == Poly(-(zbar * zbar)) * tv * tv);  // -zbar^2 t^2 / w^2
  CHECK(check_o1_pattern(t).pass);
}

TEST_CASE("check_o1_pattern verdicts") {
  Poly tv = Poly::variable();
  TransitionMatrix t;
  t.n = 1;
  t.entry = {{tv, Poly(1L)}, {Poly(), tv}};
  auto v = check_o1_pattern(t);
  CHECK(!v.pass);
  CHECK(v.witness.find("(1,2)") != std::string::npos);
  t.entry = {{Poly(2L) * tv, tv * tv}, {Poly(), -tv}};
  CHECK(check_o1_pattern(t).pass);
  t.entry = {{tv, Poly()}, {Poly(), tv}};
  CHECK(check_o1_pattern(t).pass);
  t.entry = {{tv, Poly()}, {tv, tv}};
  CHECK(!check_o1_pattern(t).pass);
  t.entry = {{tv * tv, Poly()}, {Poly(), tv}};
  CHECK(!check_o1_pattern(t).pass);
}

TEST_CASE("transition entries agree with the numeric sampling oracle") {
  auto& s = a2_pmax();
  Sampler smp(10, 7);
  CovectorPhi<GQ> phi;
  for (int k = 0; k < s.p.n(); ++k) phi.z.push_back(smp.nonzero_gaussian());
  auto t = frame_transition(s.p, s.ch, phi);
  CHECK(check_o1_pattern(t).pass);
  int pts = t.max_degree + 2;
  std::vector<std::vector<std::vector<GQ>>> numeric;
  for (int r = 1; r <= pts; ++r)
    numeric.push_back(frame_transition_numeric(s.p, s.ch, phi, Rational(r)));
  int m = 2 * t.n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<std::pair<GQ, GQ>> samples;
      for (int r = 1; r <= pts; ++r)
        samples.push_back({GQ(Rational(r)), numeric[r - 1][i][j]});
      CHECK(poly_interpolate(samples, t.max_degree) == t.entry[i][j]);
    }
}

TEST_CASE("involution samples on points with group words") {
  auto& s = a2_pmax();
  Sampler smp(19, 5);
  for (int t = 0; t < 10; ++t) {
    GroupWord<GQ> word;
    auto l1 = s.alg.zero_vector<GQ>();
    auto l2 = s.alg.zero_vector<GQ>();
    for (int k = 0; k < s.p.n(); ++k) {
      l1[s.alg.f_index(s.p.psi[k])] = smp.gaussian();
      l2[s.alg.e_index(s.p.psi[k])] = smp.gaussian();
    }
    word.letters = {l1, l2};
    CovectorPhi<GQ> phi;
    for (int k = 0; k < s.p.n(); ++k) phi.z.push_back(smp.gaussian());
    FiberedPoint<GQ> pt{word, nu_of_phi<GQ>(s.p, phi)};
    auto twice = tau_C_point(s.p, s.ch, tau_C_point(s.p, s.ch, pt));
    CHECK(canonical_point(s.p, s.ch, twice) == canonical_point(s.p, s.ch, pt));
    GQ lambda = smp.nonzero_gaussian();
    FiberedPoint<GQ> zt{word, scale_nu(nu_of_phi<GQ>(s.p, phi), lambda)};
    auto zt2 = tau_circ(s.p, s.ch, tau_circ(s.p, s.ch, zt));
    CHECK(canonical_point(s.p, s.ch, zt2) == canonical_point(s.p, s.ch, zt));
  }
}

TEST_CASE("word inverse composes to the identity adjoint") {
  auto& s = a2_pmax();
  Sampler smp(29, 5);
  GroupWord<GQ> word;
  auto l1 = s.alg.zero_vector<GQ>();
  auto l2 = s.alg.zero_vector<GQ>();
  for (int k = 0; k < s.p.n(); ++k) {
    l1[s.alg.e_index(s.p.psi[k])] = smp.gaussian();
    l2[s.alg.f_index(s.p.psi[k])] = smp.gaussian();
  }
  word.letters = {l1, l2};
  auto wi = word.concat(word.reversed_negated());
  auto id = ad_word_matrix(s.alg, wi);
  for (int j = 0; j < s.alg.dim; ++j)
    CHECK(id[j] == s.alg.basis_vector<GQ>(j));
}
