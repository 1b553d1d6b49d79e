#include "flagtwist/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "flagtwist/sampling.hpp"
#include "flagtwist/twistor.hpp"

namespace flagtwist {

using nlohmann::json;

const std::vector<std::string> kAllChecks = {
    "chevalley",   "parabolic", "solve",        "linvariance", "lieaction",
    "reality",     "curvature", "twistorline",  "normalbundle", "involutions"};

namespace {

std::string basis_name(const ChevalleyAlgebra& alg, int i) {
  const auto& rs = alg.rs;
  int np = rs.num_positive();
  auto root = [&](int k) {
    std::string s;
    for (size_t j = 0; j < rs.positive_roots[k].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(rs.positive_roots[k][j]);
    }
    return s;
  };
  if (i < np) return "f(" + root(i) + ")";
  if (i < np + rs.rank) return "h" + std::to_string(i - np + 1);
  return "e(" + root(i - np - rs.rank) + ")";
}

std::string ser_gq_list(const std::vector<GQ>& v) {
  std::string s = "[";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += to_string(v[k]);
  }
  return s + "]";
}

/// Exact determinant sign ladder of the leading principal minors of a
/// symmetric rational matrix; calls back per minor.
bool leading_minor_signs(std::vector<std::vector<Rational>> m,
                         const std::function<bool(int, const Rational&)>& ok) {
  int n = static_cast<int>(m.size());
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) return false;  // definite matrices never pivot to zero
    det *= m[k][k];
    if (!ok(k + 1, det)) return false;
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      Rational f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return true;
}

struct Ctx {
  const VerifyConfig& cfg;
  const ChevalleyAlgebra* alg = nullptr;
  const ParabolicData* p = nullptr;
  const Character* ch = nullptr;
};

NilpotentParam<GQ> random_nilpotent(Sampler& smp, int n) {
  NilpotentParam<GQ> e;
  for (int k = 0; k < n; ++k) e.c.push_back(smp.gaussian());
  return e;
}

CovectorPhi<GQ> random_phi(Sampler& smp, int n, bool generic) {
  CovectorPhi<GQ> phi;
  for (int k = 0; k < n; ++k)
    phi.z.push_back(generic ? smp.nonzero_gaussian() : smp.gaussian());
  return phi;
}

BigCellPoint<GQ> random_bigcell(Sampler& smp, int n) {
  BigCellPoint<GQ> pt(n);
  for (int k = 0; k < n; ++k) {
    pt.x[k] = smp.gaussian();
    pt.y[k] = smp.gaussian();
  }
  return pt;
}

void check_chevalley(const Ctx& c, CheckRecord& rec) {
  const auto& alg = *c.alg;
  if (auto w = jacobi_witness(alg)) {
    rec.status = "fail";
    rec.witness = *w;
    return;
  }
  long triples = static_cast<long>(alg.dim) * (alg.dim - 1) * (alg.dim - 2) / 6;
  rec.count += triples;
  const auto& rs = alg.rs;
  for (int k = 0; k < rs.num_positive(); ++k) {
    auto br = alg.bracket(alg.basis_vector<GQ>(alg.e_index(k)),
                          alg.basis_vector<GQ>(alg.f_index(k)));
    auto want = alg.zero_vector<GQ>();
    for (int i = 0; i < rs.rank; ++i) {
      int ki = rs.coroot_expansions[k][i];
      if (ki < 0) {
        rec.status = "fail";
        rec.witness = "negative coroot coefficient at " + basis_name(alg, alg.e_index(k));
        return;
      }
      want[alg.h_index(i)] = GQ(ki);
    }
    if (!(br == want)) {
      rec.status = "fail";
      rec.witness = "[e, f] != h_alpha at " + basis_name(alg, alg.e_index(k));
      return;
    }
    ++rec.count;
  }
}

void check_parabolic(const Ctx& c, CheckRecord& rec) {
  const auto& alg = *c.alg;
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  for (int k = 0; k < p.n(); ++k) {
    if (ch.w_alpha[k] >= 0) {
      rec.status = "fail";
      rec.witness = "w_alpha not negative at " + basis_name(alg, alg.e_index(p.psi[k]));
      return;
    }
    auto hv = alg.zero_vector<GQ>();
    for (int i = 0; i < alg.rs.rank; ++i)
      hv[alg.h_index(i)] = GQ(alg.rs.coroot_expansions[p.psi[k]][i]);
    if (ch.dchi(hv) != GQ(ch.w_alpha[k])) {
      rec.status = "fail";
      rec.witness = "dchi(h_alpha) mismatch at " + basis_name(alg, alg.e_index(p.psi[k]));
      return;
    }
    rec.count += 2;
  }
}

void check_solve(const Ctx& c, CheckRecord& rec) {
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  for (int s = 0; s < c.cfg.samples; ++s) {
    auto e = random_nilpotent(smp, p.n());
    auto nu = act_group(p, ch, e, nu_zero<GQ>(p));
    if (!(solve_unipotent(p, ch, nu) == e)) {
      rec.status = "fail";
      rec.witness = "solve(act_group(E)) != E at E = " + ser_gq_list(e.c);
      return;
    }
    ++rec.count;
    auto phi = random_phi(smp, p.n(), false);
    auto nu2 = nu_of_phi<GQ>(p, phi);
    auto e2 = solve_unipotent(p, ch, nu2);
    if (!(act_group(p, ch, e2, nu_zero<GQ>(p)) == nu2)) {
      rec.status = "fail";
      rec.witness = "act_group(solve(nu)) != nu at phi = " + ser_gq_list(phi.z);
      return;
    }
    ++rec.count;
  }
}

void check_linvariance(const Ctx& c, CheckRecord& rec) {
  const auto& alg = *c.alg;
  const auto& p = *c.p;
  std::vector<int> levi_basis;
  for (int i = 0; i < alg.rs.rank; ++i) levi_basis.push_back(alg.h_index(i));
  for (int b : p.phi_l) {
    levi_basis.push_back(alg.e_index(b));
    levi_basis.push_back(alg.f_index(b));
  }
  for (int idx : levi_basis) {
    auto d = act_lie(p, *c.ch, alg.basis_vector<GQ>(idx), nu_zero<GQ>(p));
    for (const auto& col : d.col)
      if (!col.is_zero()) {
        rec.status = "fail";
        rec.witness = "act_lie(" + basis_name(alg, idx) + ", nu_0) != 0";
        return;
      }
    ++rec.count;
  }
}

void check_lieaction(const Ctx& c, CheckRecord& rec) {
  const auto& alg = *c.alg;
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  for (int k = 0; k < p.n(); ++k) {
    auto d = act_lie(p, ch, alg.basis_vector<GQ>(alg.e_index(p.psi[k])),
                     nu_zero<GQ>(p));
    bool ok = ch.w_alpha[k] != 0;
    for (int a = 0; a < p.n() && ok; ++a) {
      for (const auto& f : d.col[a].f) ok = ok && f.is_zero();
      ok = ok && d.col[a].c == (a == k ? GQ(ch.w_alpha[k]) : GQ());
    }
    if (!ok) {
      rec.status = "fail";
      rec.witness = "act_lie(e_alpha, nu_0) not w_alpha-diagonal at " +
                    basis_name(alg, alg.e_index(p.psi[k]));
      return;
    }
    ++rec.count;
    // cross-check against the dual-number derivative of the group action
    NilpotentParam<Dual<GQ>> ed;
    ed.c.assign(p.n(), Dual<GQ>());
    ed.c[k] = Dual<GQ>::epsilon();
    auto g = act_group(p, ch, ed, nu_zero<Dual<GQ>>(p));
    for (int a = 0; a < p.n() && ok; ++a) {
      for (int b = 0; b < p.n(); ++b)
        ok = ok && g.col[a].f[b].deriv == d.col[a].f[b];
      ok = ok && g.col[a].c.deriv == d.col[a].c;
    }
    if (!ok) {
      rec.status = "fail";
      rec.witness = "act_lie disagrees with d/deps act_group at " +
                    basis_name(alg, alg.e_index(p.psi[k]));
      return;
    }
    ++rec.count;
  }
}

void check_reality(const Ctx& c, CheckRecord& rec) {
  const auto& p = *c.p;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  for (int s = 0; s < c.cfg.samples; ++s) {
    auto pt = random_bigcell(smp, p.n());
    if (!reality_identities(p, *c.ch, pt)) {
      rec.status = "fail";
      rec.witness = "reality fails at x = " + ser_gq_list(pt.x) +
                    ", y = " + ser_gq_list(pt.y);
      return;
    }
    ++rec.count;
  }
}

void check_curvature(const Ctx& c, CheckRecord& rec) {
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  int nc = std::clamp(c.cfg.samples, 5, 10);
  for (int s = 0; s < nc; ++s) {
    auto pt = random_bigcell(smp, p.n());
    auto m = curvature_matrix(p, ch, pt);
    int dim2 = 2 * p.n();
    for (int i = 0; i < dim2; ++i)
      for (int j = 0; j < dim2; ++j)
        if (!(m[i][j] == -m[j][i])) {
          rec.status = "fail";
          rec.witness = "curvature not antisymmetric at x = " + ser_gq_list(pt.x);
          return;
        }
    if (matrix_determinant(m).is_zero()) {
      rec.status = "fail";
      rec.witness = "degenerate curvature at x = " + ser_gq_list(pt.x) +
                    ", y = " + ser_gq_list(pt.y);
      return;
    }
    ++rec.count;
    if (s < 2) {
      // lambda-scaling, symbolically in lambda
      BigCellPoint<Poly> pp(p.n());
      for (int k = 0; k < p.n(); ++k) {
        pp.x[k] = Poly(pt.x[k]);
        pp.y[k] = Poly(pt.y[k]);
      }
      Poly lambda = Poly::variable();
      auto base = curvature_matrix(p, ch, pp);
      auto scaled = curvature_matrix(p, ch, pp, lambda);
      bool ok = true;
      for (int i = 0; i < dim2; ++i)
        for (int j = 0; j < dim2; ++j)
          ok = ok && scaled[i][j] == lambda * base[i][j];
      auto xi = random_nilpotent(smp, p.n());
      auto xlie = nilpotent_lie(p, xi);
      auto xp = c.alg->zero_vector<Poly>();
      for (int k = 0; k < c.alg->dim; ++k) xp[k] = Poly(xlie[k]);
      Poly cc = Poly(smp.gaussian());
      ok = ok && theta_prime_lambda(p, ch, xp, cc, lambda) ==
                     lambda * theta_prime(p, ch, xp, cc);
      if (!ok) {
        rec.status = "fail";
        rec.witness = "lambda-scaling violated at x = " + ser_gq_list(pt.x);
        return;
      }
      ++rec.count;
    }
  }
}

void check_twistorline(const Ctx& c, CheckRecord& rec) {
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  {
    CovectorPhi<GQ> zero;
    zero.z.assign(p.n(), GQ());
    auto cs = line_polynomials(p, ch, zero);
    for (const auto& poly : cs.c)
      if (!poly.is_zero()) {
        rec.status = "fail";
        rec.witness = "line through phi = 0 is not constant";
        return;
      }
    ++rec.count;
  }
  int max_deg = 0;
  int ns = std::clamp(c.cfg.samples, 3, 8);
  for (int s = 0; s < ns; ++s) {
    auto phi = random_phi(smp, p.n(), true);
    auto cs = line_polynomials(p, ch, phi);
    for (int k = 0; k < p.n(); ++k) {
      if (cs.c[k].degree() < 1 || !cs.c[k].constant_term().is_zero()) {
        rec.status = "fail";
        rec.witness = "c_alpha constant or c_alpha(0) != 0 at phi = " +
                      ser_gq_list(phi.z) + ", alpha position " + std::to_string(k);
        return;
      }
      max_deg = std::max(max_deg, cs.c[k].degree());
      ++rec.count;
    }
    GQ lambda = smp.nonzero_gaussian();
    if (sigma_circ(sigma_circ(lambda)) != lambda) {
      rec.status = "fail";
      rec.witness = "sigma_circ not an involution at " + to_string(lambda);
      return;
    }
    FiberedPoint<GQ> pt{GroupWord<GQ>{}, scale_nu(nu_of_phi<GQ>(p, phi), lambda)};
    auto [y, l2] = gamma_map(pt);
    auto back = gamma_inverse(y, l2);
    if (!(back.nu == pt.nu) || l2 != lambda) {
      rec.status = "fail";
      rec.witness = "gamma roundtrip fails at lambda = " + to_string(lambda);
      return;
    }
    rec.count += 2;
  }
  if (sigma_circ(GQ(1)) != GQ(-1L) || sigma_circ(GQ::i()) != -GQ::i()) {
    rec.status = "fail";
    rec.witness = "sigma_circ fixed examples violated";
    return;
  }
  ++rec.count;
  if (c.cfg.degree_audit)
    rec.info = "max degree of c_alpha over sampled lines: " + std::to_string(max_deg);
}

void check_normalbundle(const Ctx& c, CheckRecord& rec) {
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  int max_deg = 0;
  for (int s = 0; s < 3; ++s) {
    auto phi = random_phi(smp, p.n(), true);
    auto t = frame_transition(p, ch, phi);
    max_deg = std::max(max_deg, t.max_degree);
    auto verdict = check_o1_pattern(t);
    if (!verdict.pass) {
      rec.status = "fail";
      rec.witness = "O(1) pattern fails at phi = " + ser_gq_list(phi.z) + "; " +
                    verdict.witness;
      return;
    }
    ++rec.count;
    // cross-oracle: interpolate numeric evaluations at deg+2 real points
    int pts = t.max_degree + 2;
    std::vector<std::vector<std::vector<GQ>>> numeric;
    for (int r = 1; r <= pts; ++r)
      numeric.push_back(frame_transition_numeric(p, ch, phi, Rational(r)));
    int m = 2 * t.n;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<std::pair<GQ, GQ>> samples;
        for (int r = 1; r <= pts; ++r)
          samples.push_back({GQ(Rational(r)), numeric[r - 1][i][j]});
        Poly interp = poly_interpolate(samples, t.max_degree);
        if (interp != t.entry[i][j]) {
          rec.status = "fail";
          rec.witness = "symbolic/numeric mismatch at phi = " +
                        ser_gq_list(phi.z) + ", entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")";
          return;
        }
        ++rec.count;
      }
  }
  if (c.cfg.degree_audit)
    rec.info = "max transition-entry degree: " + std::to_string(max_deg);
}

void check_involutions(const Ctx& c, CheckRecord& rec) {
  const auto& alg = *c.alg;
  const auto& p = *c.p;
  const auto& ch = *c.ch;
  Sampler smp(c.cfg.seed, c.cfg.bound);
  for (int i = 0; i < alg.dim; ++i) {
    auto b = alg.basis_vector<GQ>(i);
    if (!(dtau(alg, dtau(alg, b)) == b)) {
      rec.status = "fail";
      rec.witness = "dtau^2 != id at " + basis_name(alg, i);
      return;
    }
    auto ib = b;
    for (auto& x : ib) x *= GQ::i();
    if (!(dtau(alg, dtau(alg, ib)) == ib)) {
      rec.status = "fail";
      rec.witness = "dtau^2 != id at i*" + basis_name(alg, i);
      return;
    }
    rec.count += 2;
  }
  int ns = std::max(10, std::min(c.cfg.samples, 20));
  for (int s = 0; s < ns; ++s) {
    GroupWord<GQ> word;
    auto l1 = alg.zero_vector<GQ>();
    auto l2 = alg.zero_vector<GQ>();
    for (int k = 0; k < p.n(); ++k) {
      l1[alg.f_index(p.psi[k])] = smp.gaussian();
      l2[alg.e_index(p.psi[k])] = smp.gaussian();
    }
    word.letters = {l1, l2};
    auto phi = random_phi(smp, p.n(), false);
    FiberedPoint<GQ> pt{word, nu_of_phi<GQ>(p, phi)};
    auto twice = tau_C_point(p, ch, tau_C_point(p, ch, pt));
    if (!(canonical_point(p, ch, twice) == canonical_point(p, ch, pt))) {
      rec.status = "fail";
      rec.witness = "tau_C^2 != id at phi = " + ser_gq_list(phi.z);
      return;
    }
    ++rec.count;
    GQ lambda = smp.nonzero_gaussian();
    FiberedPoint<GQ> zt{word, scale_nu(nu_of_phi<GQ>(p, phi), lambda)};
    auto zt2 = tau_circ(p, ch, tau_circ(p, ch, zt));
    if (!(canonical_point(p, ch, zt2) == canonical_point(p, ch, zt))) {
      rec.status = "fail";
      rec.witness = "tau_circ^2 != id at lambda = " + to_string(lambda) +
                    ", phi = " + ser_gq_list(phi.z);
      return;
    }
    ++rec.count;
  }
  // compact-form basis: e-f, i(e+f), i*h; Killing form negative definite
  std::vector<LieVector<GQ>> basis;
  for (int k = 0; k < alg.rs.num_positive(); ++k) {
    auto a = alg.zero_vector<GQ>();
    a[alg.e_index(k)] = GQ(1L);
    a[alg.f_index(k)] = GQ(-1L);
    basis.push_back(a);
    auto b = alg.zero_vector<GQ>();
    b[alg.e_index(k)] = GQ::i();
    b[alg.f_index(k)] = GQ::i();
    basis.push_back(b);
  }
  for (int i = 0; i < alg.rs.rank; ++i) {
    auto h = alg.zero_vector<GQ>();
    h[alg.h_index(i)] = GQ::i();
    basis.push_back(h);
  }
  std::vector<std::vector<Rational>> gram(basis.size(),
                                          std::vector<Rational>(basis.size()));
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      GQ v = alg.killing_form(basis[a], basis[b]);
      if (v.im != 0) {
        rec.status = "fail";
        rec.witness = "compact Gram matrix not real";
        return;
      }
      gram[a][b] = v.re;
    }
  bool minors_ok = leading_minor_signs(gram, [&](int k, const Rational& det) {
    bool ok = (k % 2 == 0) ? det > 0 : det < 0;
    if (ok) ++rec.count;
    return ok;
  });
  if (!minors_ok) {
    rec.status = "fail";
    rec.witness = "Killing form not negative definite on the compact basis";
    return;
  }
}

json config_json(const VerifyConfig& cfg) {
  json j;
  j["type"] = cfg.type;
  j["rank"] = cfg.rank;
  j["levi"] = cfg.levi;
  json chi = json::object();
  for (const auto& [k, v] : cfg.chi) chi[std::to_string(k)] = v;
  j["chi"] = chi;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["bound"] = cfg.bound;
  j["checks"] = cfg.checks;
  j["degree_audit"] = cfg.degree_audit;
  return j;
}

}  // namespace

std::optional<std::string> jacobi_witness(const ChevalleyAlgebra& alg) {
  for (int i = 0; i < alg.dim; ++i) {
    auto bi = alg.basis_vector<GQ>(i);
    for (int j = i + 1; j < alg.dim; ++j) {
      auto bj = alg.basis_vector<GQ>(j);
      auto bij = alg.bracket(bi, bj);
      for (int k = j + 1; k < alg.dim; ++k) {
        auto bk = alg.basis_vector<GQ>(k);
        auto s = alg.bracket(bi, alg.bracket(bj, bk));
        auto t = alg.bracket(bj, alg.bracket(bk, bi));
        auto u = alg.bracket(bk, bij);
        bool zero = true;
        for (int m = 0; m < alg.dim && zero; ++m)
          zero = (s[m] + t[m] + u[m]).is_zero();
        if (!zero)
          return "Jacobi violated at (" + basis_name(alg, i) + ", " +
                 basis_name(alg, j) + ", " + basis_name(alg, k) + ")";
      }
    }
  }
  return std::nullopt;
}

void corrupt_one_structure_constant(ChevalleyAlgebra& alg) {
  int first_e = alg.e_index(0);
  for (int i = first_e; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) {
      auto& terms = alg.table[static_cast<size_t>(i) * alg.dim + j];
      if (!terms.empty()) {
        terms[0].coeff = -terms[0].coeff;
        return;
      }
    }
  throw std::logic_error("corrupt_one_structure_constant: no e-e bracket");
}

VerifyConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  std::vector<std::string> errs;
  VerifyConfig cfg;
  static const std::vector<std::string> known = {
      "type",  "rank",   "levi",         "chi",             "samples",
      "seed",  "bound",  "checks",       "degree_audit",    "override_limits",
      "timings"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      errs.push_back("unknown key: " + it.key());
  if (!j.contains("type") || !j["type"].is_string())
    errs.push_back("missing or non-string 'type'");
  else
    cfg.type = j["type"].get<std::string>();
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    errs.push_back("missing or non-integer 'rank'");
  else
    cfg.rank = j["rank"].get<int>();
  if (j.contains("levi")) {
    if (!j["levi"].is_array())
      errs.push_back("'levi' must be an array of simple-root indices");
    else
      for (const auto& v : j["levi"]) {
        if (!v.is_number_integer()) {
          errs.push_back("'levi' entries must be integers");
          break;
        }
        cfg.levi.push_back(v.get<int>());
      }
  }
  if (!j.contains("chi") || !j["chi"].is_object())
    errs.push_back("missing or non-object 'chi'");
  else
    for (auto it = j["chi"].begin(); it != j["chi"].end(); ++it) {
      try {
        cfg.chi[std::stoi(it.key())] = it.value().get<long>();
      } catch (...) {
        errs.push_back("bad chi entry key: " + it.key());
      }
    }
  if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("bound")) cfg.bound = j["bound"].get<long>();
  if (j.contains("degree_audit")) cfg.degree_audit = j["degree_audit"].get<bool>();
  if (j.contains("override_limits"))
    cfg.override_limits = j["override_limits"].get<bool>();
  if (j.contains("timings")) cfg.timings = j["timings"].get<bool>();
  if (j.contains("checks")) {
    if (j["checks"].is_string() && j["checks"].get<std::string>() == "all")
      cfg.checks = kAllChecks;
    else if (j["checks"].is_array())
      for (const auto& v : j["checks"]) cfg.checks.push_back(v.get<std::string>());
    else
      errs.push_back("'checks' must be \"all\" or an array of names");
  }
  if (!errs.empty()) {
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += "\n  - " + e;
    throw std::invalid_argument(msg);
  }
  validate_config(cfg);
  return cfg;
}

void validate_config(const VerifyConfig& cfg) {
  std::vector<std::string> errs;
  if (cfg.type.size() != 1 || cfg.type[0] < 'A' || cfg.type[0] > 'G')
    errs.push_back("type must be a single letter A-G");
  if (cfg.samples < 1) errs.push_back("samples must be positive");
  if (cfg.bound < 1) errs.push_back("bound must be positive");
  for (const auto& name : cfg.checks)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), name) == kAllChecks.end())
      errs.push_back("unknown check name: " + name);
  std::set<int> levi;
  for (int i : cfg.levi) {
    if (i < 1 || i > cfg.rank)
      errs.push_back("levi index out of range: " + std::to_string(i));
    else if (!levi.insert(i).second)
      errs.push_back("duplicate levi index: " + std::to_string(i));
  }
  if (!cfg.levi.empty() && levi.size() == static_cast<size_t>(cfg.rank))
    errs.push_back("levi set must be a proper subset of the simple roots");
  for (const auto& [i, v] : cfg.chi) {
    if (i < 1 || i > cfg.rank)
      errs.push_back("chi index out of range: " + std::to_string(i));
    else if (levi.count(i) && v != 0)
      errs.push_back("chi_" + std::to_string(i) + " must vanish on the levi set");
    else if (!levi.count(i) && v >= 0)
      errs.push_back("chi_" + std::to_string(i) + " not strictly negative");
  }
  for (int i = 1; i <= cfg.rank; ++i)
    if (!levi.count(i) && !cfg.chi.count(i))
      errs.push_back("chi_" + std::to_string(i) + " missing");
  if (errs.empty()) {
    try {
      auto rs = build_root_system(cfg.type[0], cfg.rank,
                                  cfg.override_limits ? 24 : 8);
      int dim = 2 * rs.num_positive() + rs.rank;
      int psi = rs.num_positive();
      for (int k = 0; k < rs.num_positive(); ++k) {
        bool on_levi = true;
        for (int i = 0; i < rs.rank; ++i)
          if (rs.positive_roots[k][i] != 0 && !levi.count(i + 1)) on_levi = false;
        if (on_levi) --psi;
      }
      if (!cfg.override_limits && (dim > 250 || psi > 60))
        errs.push_back("desk limits exceeded (dim <= 250, |Psi| <= 60); "
                       "set override_limits to proceed");
    } catch (const std::exception& e) {
      errs.push_back(e.what());
    }
  }
  if (!errs.empty()) {
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += "\n  - " + e;
    throw std::invalid_argument(msg);
  }
}

Report run_suite(const VerifyConfig& cfg_in) {
  VerifyConfig cfg = cfg_in;
  if (cfg.checks.empty()) cfg.checks = kAllChecks;
  validate_config(cfg);
  // normalize to the fixed order
  std::vector<std::string> checks;
  for (const auto& name : kAllChecks)
    if (std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end())
      checks.push_back(name);
  cfg.checks = checks;

  Report rep;
  rep.config = cfg;

  ChevalleyAlgebra alg;
  std::string build_error;
  try {
    alg = build_chevalley(build_root_system(cfg.type[0], cfg.rank,
                                            cfg.override_limits ? 24 : 8));
    if (cfg.corrupt) corrupt_one_structure_constant(alg);
  } catch (const std::invalid_argument& e) {
    build_error = e.what();
  }
  ParabolicData parab;
  Character chr;
  bool alg_ok = build_error.empty();
  bool chev_ok = alg_ok;   // flips on a failing chevalley check
  bool parab_ok = false;
  std::string parab_error;
  if (alg_ok) {
    try {
      std::set<int> levi0;
      for (int i : cfg.levi) levi0.insert(i - 1);
      parab = build_parabolic(alg, levi0);
      std::map<int, long> chi0;
      for (const auto& [k, v] : cfg.chi) chi0[k - 1] = v;
      chr = build_character(parab, chi0);
      parab_ok = true;
    } catch (const std::invalid_argument& e) {
      parab_error = e.what();
    }
  }

  Ctx ctx{cfg};
  ctx.alg = &alg;
  ctx.p = &parab;
  ctx.ch = &chr;
  for (const auto& name : cfg.checks) {
    CheckRecord rec;
    rec.name = name;
    rec.status = "pass";
    auto start = std::chrono::steady_clock::now();
    if (!alg_ok) {
      rec.status = name == "chevalley" ? "fail" : "skip";
      rec.witness = name == "chevalley" ? build_error : "skip: dependency failed";
    } else if (name == "chevalley") {
      check_chevalley(ctx, rec);
      chev_ok = rec.status == "pass";
    } else if (!chev_ok || !parab_ok) {
      if (name == "parabolic" && chev_ok) {
        rec.status = "fail";
        rec.witness = parab_error;
      } else {
        rec.status = "skip";
        rec.witness = "skip: dependency failed";
      }
    } else if (name == "parabolic") {
      check_parabolic(ctx, rec);
    } else if (name == "solve") {
      check_solve(ctx, rec);
    } else if (name == "linvariance") {
      check_linvariance(ctx, rec);
    } else if (name == "lieaction") {
      check_lieaction(ctx, rec);
    } else if (name == "reality") {
      check_reality(ctx, rec);
    } else if (name == "curvature") {
      check_curvature(ctx, rec);
    } else if (name == "twistorline") {
      check_twistorline(ctx, rec);
    } else if (name == "normalbundle") {
      check_normalbundle(ctx, rec);
    } else if (name == "involutions") {
      check_involutions(ctx, rec);
    }
    auto stop = std::chrono::steady_clock::now();
    rec.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count());
    ++rep.total;
    if (rec.status == "pass") ++rep.passed;
    else if (rec.status == "fail") ++rep.failed;
    else ++rep.skipped;
    rep.checks.push_back(std::move(rec));
  }
  return rep;
}

std::string report_json(const Report& r) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_json(r.config);
  j["conventions"] = {
      {"basis_order", "f_alpha (height asc, lex asc), h_1..h_rank, e_alpha"},
      {"p_frame", "fibre e_1..e_n then group f_n..f_1, roots height-decreasing"},
      {"q_frame", "group f_1..f_n then fibre e_n..e_1, roots height-decreasing"},
      {"base_point", "k = e; the transition pattern is left-equivariant"}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["count"] = c.count;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (!c.info.empty()) cj["info"] = c.info;
    if (r.config.timings) cj["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["summary"] = {{"total", r.total},
                  {"passed", r.passed},
                  {"failed", r.failed},
                  {"skipped", r.skipped}};
  return j.dump(2) + "\n";
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "# Verification report (" << kVersion << ")\n\n";
  os << "Config: type " << r.config.type << r.config.rank << ", levi {";
  for (size_t i = 0; i < r.config.levi.size(); ++i)
    os << (i ? "," : "") << r.config.levi[i];
  os << "}, seed " << r.config.seed << ", samples " << r.config.samples
     << "\n\n";
  os << "| check | status | count | witness |\n|---|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << c.name << " | " << c.status << " | " << c.count << " | "
       << (c.witness.empty() ? "" : c.witness) << " |\n";
  os << "\n**" << r.passed << " passed, " << r.failed << " failed, "
     << r.skipped << " skipped** of " << r.total << "\n";
  return os.str();
}

std::string export_algebra_json(const std::string& type, int rank) {
  if (type.size() != 1) throw std::invalid_argument("type must be one letter");
  auto alg = build_chevalley(build_root_system(type[0], rank));
  json j;
  j["type"] = type;
  j["rank"] = rank;
  j["dim"] = alg.dim;
  json roots = json::array();
  for (const auto& r : alg.rs.positive_roots) roots.push_back(r);
  j["positive_roots"] = roots;
  json basis = json::array();
  for (int i = 0; i < alg.dim; ++i) basis.push_back(basis_name(alg, i));
  j["basis"] = basis;
  json brackets = json::array();
  for (int i = 0; i < alg.dim; ++i)
    for (int k = i + 1; k < alg.dim; ++k) {
      const auto& terms = alg.pair_terms(i, k);
      if (terms.empty()) continue;
      json b;
      b["i"] = i;
      b["j"] = k;
      json ts = json::array();
      for (const auto& t : terms) ts.push_back({{"basis", t.basis}, {"coeff", t.coeff}});
      b["terms"] = ts;
      brackets.push_back(b);
    }
  j["brackets"] = brackets;
  json kap = json::array();
  for (int i = 0; i < alg.dim; ++i)
    for (int k = i; k < alg.dim; ++k)
      if (alg.killing_basis(i, k) != 0)
        kap.push_back({{"i", i}, {"j", k}, {"value", alg.killing_basis(i, k)}});
  j["killing"] = kap;
  return j.dump(2) + "\n";
}

}  // namespace flagtwist
