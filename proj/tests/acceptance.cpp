// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <deque>
#include <iostream>
#include <sstream>

#include "flagtwist/sampling.hpp"
#include "flagtwist/twistor.hpp"
#include "flagtwist/verifier.hpp"

using namespace flagtwist;

namespace {

struct Built {
  std::string label;
  char type;
  int rank;
  std::vector<int> levi1;  // 1-based, for run_suite configs
  std::map<int, long> chi1;
  ChevalleyAlgebra alg;
  ParabolicData p;
  Character ch;
};

std::deque<Built> g_store;

Built& add_config(std::string label, char type, int rank,
                  std::vector<int> levi1, std::map<int, long> chi1) {
  Built& b = g_store.emplace_back();
  b.label = std::move(label);
  b.type = type;
  b.rank = rank;
  b.levi1 = std::move(levi1);
  b.chi1 = std::move(chi1);
  b.alg = build_chevalley(build_root_system(type, rank));
  std::set<int> levi0;
  for (int i : b.levi1) levi0.insert(i - 1);
  b.p = build_parabolic(b.alg, levi0);
  std::map<int, long> chi0;
  for (auto [k, v] : b.chi1) chi0[k - 1] = v;
  b.ch = build_character(b.p, chi0);
  return b;
}

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int g_failures = 0;

void report(int num, const std::string& name, bool pass,
            const std::string& detail) {
  std::cout << "criterion " << num << ": " << (pass ? "PASS" : "FAIL") << " - "
            << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  if (!pass) ++g_failures;
}

BigCellPoint<GQ> sample_point(Sampler& smp, int n) {
  BigCellPoint<GQ> pt(n);
  for (int k = 0; k < n; ++k) {
    pt.x[k] = smp.gaussian();
    pt.y[k] = smp.gaussian();
  }
  return pt;
}

CovectorPhi<GQ> sample_generic_phi(Sampler& smp, int n) {
  CovectorPhi<GQ> phi;
  for (int k = 0; k < n; ++k) phi.z.push_back(smp.nonzero_gaussian());
  return phi;
}

bool symbolic_reality(const Built& b, int coord, Sampler& smp) {
  BigCellPoint<Poly> pt(b.p.n());
  for (int k = 0; k < b.p.n(); ++k) {
    pt.x[k] = Poly(smp.gaussian());
    pt.y[k] = Poly(smp.gaussian());
  }
  if (coord < b.p.n())
    pt.x[coord] = Poly::variable();
  else
    pt.y[coord - b.p.n()] = Poly::variable();
  return reality_identities(b.p, b.ch, pt);
}

}  // namespace

int main() {
  // configs exercised throughout; the first five carry the normal-bundle gate
  auto& a1 = add_config("A1 Borel", 'A', 1, {}, {{1, -1}});
  auto& a2b = add_config("A2 Borel", 'A', 2, {}, {{1, -1}, {2, -2}});
  auto& a2p = add_config("A2 S={2}", 'A', 2, {2}, {{1, -1}});
  auto& b2 = add_config("B2 Borel", 'B', 2, {}, {{1, -1}, {2, -1}});
  auto& a3p = add_config("A3 S={1,3}", 'A', 3, {1, 3}, {{2, -1}});
  add_config("A3 Borel", 'A', 3, {}, {{1, -1}, {2, -1}, {3, -2}});
  add_config("B3 Borel", 'B', 3, {}, {{1, -1}, {2, -1}, {3, -1}});
  add_config("C3 Borel", 'C', 3, {}, {{1, -1}, {2, -2}, {3, -1}});
  add_config("D4 Borel", 'D', 4, {}, {{1, -1}, {2, -1}, {3, -1}, {4, -1}});
  add_config("G2 Borel", 'G', 2, {}, {{1, -1}, {2, -1}});
  const Built* nb_configs[] = {&a1, &a2b, &a2p, &b2, &a3p};

  // 1: Jacobi sweep and [e, f] = h over the required types
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                        {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
      auto alg = build_chevalley(build_root_system(t, r));
      if (auto w = jacobi_witness(alg)) {
        ok = false;
        why = std::string(1, t) + std::to_string(r) + ": " + *w;
        break;
      }
      for (int k = 0; k < alg.rs.num_positive() && ok; ++k) {
        auto br = alg.bracket(alg.basis_vector<GQ>(alg.e_index(k)),
                              alg.basis_vector<GQ>(alg.f_index(k)));
        for (int i = 0; i < alg.rs.rank; ++i) {
          int c = alg.rs.coroot_expansions[k][i];
          if (c < 0 || br[alg.h_index(i)] != GQ(c)) ok = false;
        }
      }
    }
    long ms = ms_since(t0);
    if (ms >= 60000) { ok = false; why = "over 60 s"; }
    report(1, "Chevalley soundness across 8 types", ok,
           ok ? std::to_string(ms) + " ms" : why);
  }

  // 2: w_alpha strictly negative for every config
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store)
      for (long w : b.ch.w_alpha)
        if (w >= 0) { ok = false; why = b.label; }
    report(2, "w_alpha nonzero and negative on Psi", ok, why);
  }

  // 3: orbit solver roundtrips, 100 each way per rank <= 3 config
  {
    bool ok = true;
    std::string detail, why;
    for (const auto& b : g_store) {
      if (b.rank > 3) continue;
      auto t0 = std::chrono::steady_clock::now();
      Sampler smp(42, 10);
      for (int s = 0; s < 100 && ok; ++s) {
        NilpotentParam<GQ> e;
        for (int k = 0; k < b.p.n(); ++k) e.c.push_back(smp.gaussian());
        auto nu = act_group(b.p, b.ch, e, nu_zero<GQ>(b.p));
        if (!(solve_unipotent(b.p, b.ch, nu) == e)) { ok = false; why = b.label; }
      }
      for (int s = 0; s < 100 && ok; ++s) {
        CovectorPhi<GQ> phi;
        for (int k = 0; k < b.p.n(); ++k) phi.z.push_back(smp.gaussian());
        auto nu = nu_of_phi<GQ>(b.p, phi);
        if (!(act_group(b.p, b.ch, solve_unipotent(b.p, b.ch, nu),
                        nu_zero<GQ>(b.p)) == nu)) {
          ok = false;
          why = b.label;
        }
      }
      long ms = ms_since(t0);
      if (ms >= 30000) { ok = false; why = b.label + ": over 30 s"; }
      detail = std::to_string(ms) + " ms last config";
    }
    report(3, "solve/act_group roundtrips (100 + 100 per config)", ok,
           ok ? detail : why);
  }

  // 4: the Levi subalgebra stabilizes nu_0, exhaustively
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store) {
      std::vector<int> levi_basis;
      for (int i = 0; i < b.alg.rs.rank; ++i)
        levi_basis.push_back(b.alg.h_index(i));
      for (int r : b.p.phi_l) {
        levi_basis.push_back(b.alg.e_index(r));
        levi_basis.push_back(b.alg.f_index(r));
      }
      for (int idx : levi_basis) {
        auto d = act_lie(b.p, b.ch, b.alg.basis_vector<GQ>(idx),
                         nu_zero<GQ>(b.p));
        for (const auto& col : d.col)
          if (!col.is_zero()) { ok = false; why = b.label; }
      }
    }
    report(4, "l-invariance of nu_0", ok, why);
  }

  // 5: e_alpha moves nu_0 diagonally by w_alpha
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store)
      for (int k = 0; k < b.p.n() && ok; ++k) {
        auto d = act_lie(b.p, b.ch,
                         b.alg.basis_vector<GQ>(b.alg.e_index(b.p.psi[k])),
                         nu_zero<GQ>(b.p));
        for (int a = 0; a < b.p.n(); ++a) {
          for (const auto& f : d.col[a].f)
            if (!f.is_zero()) ok = false;
          if (d.col[a].c != (a == k ? GQ(b.ch.w_alpha[k]) : GQ())) ok = false;
        }
        if (b.ch.w_alpha[k] == 0) ok = false;
        if (!ok) why = b.label;
      }
    report(5, "u_+ action on nu_0 is the w_alpha diagonal", ok, why);
  }

  // 6: generic lines are genuinely curved in every coordinate
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store) {
      Sampler smp(b.rank + 42, 10);
      for (int s = 0; s < 3 && ok; ++s) {
        auto phi = sample_generic_phi(smp, b.p.n());
        auto cs = line_polynomials(b.p, b.ch, phi);
        for (const auto& c : cs.c)
          if (c.degree() < 1 || !c.constant_term().is_zero()) {
            ok = false;
            why = b.label;
          }
      }
    }
    report(6, "line polynomials non-constant with c(0) = 0", ok, why);
  }

  // 7: connection-form reality, numeric and one-variable symbolic
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store) {
      Sampler smp(7, 10);
      for (int s = 0; s < 20 && ok; ++s)
        if (!reality_identities(b.p, b.ch, sample_point(smp, b.p.n()))) {
          ok = false;
          why = b.label;
        }
    }
    for (const Built* b : {&a1, &a2b}) {
      Sampler smp(11, 6);
      for (int coord = 0; coord < 2 * b->p.n() && ok; ++coord)
        if (!symbolic_reality(*b, coord, smp)) {
          ok = false;
          why = b->label + " symbolic";
        }
    }
    report(7, "reality of the connection form", ok, why);
  }

  // 8: curvature antisymmetric and nondegenerate; sl2 golden determinant
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store) {
      Sampler smp(13, 6);
      for (int s = 0; s < 5 && ok; ++s) {
        auto pt = sample_point(smp, b.p.n());
        auto m = curvature_matrix(b.p, b.ch, pt);
        int dim2 = 2 * b.p.n();
        for (int i = 0; i < dim2; ++i)
          for (int j = 0; j < dim2; ++j)
            if (!(m[i][j] == -m[j][i])) ok = false;
        if (matrix_determinant(m).is_zero()) ok = false;
        if (!ok) why = b.label;
      }
    }
    {
      Sampler smp(17, 2);
      for (int s = 0; s < 5 && ok; ++s) {
        auto m = curvature_matrix(a1.p, a1.ch, sample_point(smp, 1));
        if (matrix_determinant(m) != GQ(1L)) {
          ok = false;
          why = "sl2 determinant";
        }
      }
    }
    report(8, "symplectic nondegeneracy of the curvature", ok, why);
  }

  // 9 and 10: normal-bundle pattern and the sampling cross-oracle
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok9 = true, ok10 = true;
    std::string why9, why10;
    for (const Built* b : nb_configs) {
      Sampler smp(b->rank + 1000, 8);
      for (int s = 0; s < 3; ++s) {
        auto phi = sample_generic_phi(smp, b->p.n());
        auto t = frame_transition(b->p, b->ch, phi);
        auto verdict = check_o1_pattern(t);
        if (!verdict.pass) {
          ok9 = false;
          why9 = b->label + ": " + verdict.witness;
        }
        int pts = t.max_degree + 2;
        std::vector<std::vector<std::vector<GQ>>> numeric;
        for (int r = 1; r <= pts; ++r)
          numeric.push_back(frame_transition_numeric(b->p, b->ch, phi, Rational(r)));
        int m = 2 * t.n;
        for (int i = 0; i < m && ok10; ++i)
          for (int j = 0; j < m && ok10; ++j) {
            std::vector<std::pair<GQ, GQ>> samples;
            for (int r = 1; r <= pts; ++r)
              samples.push_back({GQ(Rational(r)), numeric[r - 1][i][j]});
            if (poly_interpolate(samples, t.max_degree) != t.entry[i][j]) {
              ok10 = false;
              why10 = b->label;
            }
          }
      }
    }
    long ms = ms_since(t0);
    if (ms >= 600000) { ok9 = false; why9 = "over 10 min"; }
    report(9, "O(1)^{2n} normal-bundle certificate (5 configs, 3 phi each)",
           ok9, ok9 ? std::to_string(ms) + " ms" : why9);
    report(10, "symbolic transition equals interpolated numeric oracle", ok10,
           why10);
  }

  // 11: involutions, via the suite check per config
  {
    bool ok = true;
    std::string why;
    for (const auto& b : g_store) {
      VerifyConfig cfg;
      cfg.type = std::string(1, b.type);
      cfg.rank = b.rank;
      cfg.levi = b.levi1;
      cfg.chi = b.chi1;
      cfg.samples = 10;
      cfg.checks = {"chevalley", "parabolic", "involutions"};
      auto rep = run_suite(cfg);
      for (const auto& c : rep.checks)
        if (c.status != "pass") {
          ok = false;
          why = b.label + ": " + c.name;
        }
    }
    report(11, "involutions and compact-form negativity", ok, why);
  }

  // 12: lambda-scaling of the connection and curvature, symbolically
  {
    bool ok = true;
    std::string why;
    Poly lambda = Poly::variable();
    for (const Built* b : {&a1, &a2p, &a2b}) {
      Sampler smp(3, 6);
      auto gq_pt = sample_point(smp, b->p.n());
      BigCellPoint<Poly> pt(b->p.n());
      for (int k = 0; k < b->p.n(); ++k) {
        pt.x[k] = Poly(gq_pt.x[k]);
        pt.y[k] = Poly(gq_pt.y[k]);
      }
      auto xi = b->alg.zero_vector<Poly>();
      for (int k = 0; k < b->alg.dim; ++k) xi[k] = Poly(smp.gaussian());
      Poly c(smp.gaussian());
      if (!(theta_prime_lambda(b->p, b->ch, xi, c, lambda) ==
            lambda * theta_prime(b->p, b->ch, xi, c)))
        ok = false;
      auto base = curvature_matrix(b->p, b->ch, pt);
      auto scaled = curvature_matrix(b->p, b->ch, pt, lambda);
      for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = 0; j < base.size(); ++j)
          if (!(scaled[i][j] == lambda * base[i][j])) ok = false;
      if (!ok) { why = b->label; break; }
    }
    report(12, "lambda-scaling linearity, lambda symbolic", ok, why);
  }

  // 13: byte-identical reports for identical config and seed
  {
    VerifyConfig cfg;
    cfg.type = "A";
    cfg.rank = 2;
    cfg.levi = {2};
    cfg.chi = {{1, -1}};
    cfg.samples = 10;
    auto a = report_json(run_suite(cfg));
    auto b = report_json(run_suite(cfg));
    bool ok = a == b && a.find("\"failed\": 0") != std::string::npos;
    report(13, "determinism of the full suite report", ok, "");
  }

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
