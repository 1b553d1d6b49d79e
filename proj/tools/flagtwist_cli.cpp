#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagtwist/verifier.hpp"

using namespace flagtwist;

namespace {

int write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  os << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the universal connection space G x^P a"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a check suite");
  std::string config_path, out_path, format = "json";
  std::string type;
  int rank = 0;
  std::vector<int> levi;
  std::vector<std::string> chi_flags, check_flags;
  int samples = 20;
  std::uint64_t seed = 42;
  long bound = 20;
  bool degree_audit = false, override_limits = false, timings = false;
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--type", type, "Series letter A-G");
  verify->add_option("--rank", rank, "Rank");
  verify->add_option("--levi", levi, "Levi simple-root indices (1-based)");
  verify->add_option("--chi", chi_flags, "Character entries i=value");
  verify->add_option("--samples", samples, "Random samples per check");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--bound", bound, "Numerator/denominator bound");
  verify->add_option("--checks", check_flags, "Check names or 'all'");
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  verify->add_flag("--degree-audit", degree_audit, "Record observed degrees");
  verify->add_flag("--override-limits", override_limits,
                   "Lift the rank/dim/|Psi| desk limits");
  verify->add_flag("--timings", timings,
                   "Include elapsed_ms (breaks byte-determinism)");

  auto* exp = app.add_subcommand("export-algebra", "Structure-constant dump");
  std::string exp_type, exp_out;
  int exp_rank = 0;
  exp->add_option("--type", exp_type, "Series letter A-G")->required();
  exp->add_option("--rank", exp_rank, "Rank")->required();
  exp->add_option("--out", exp_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp->parsed())
      return write_or_print(export_algebra_json(exp_type, exp_rank), exp_out);

    VerifyConfig cfg;
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 2;
      }
      std::ostringstream ss;
      ss << is.rdbuf();
      cfg = parse_config(ss.str());
    } else {
      cfg.type = type;
      cfg.rank = rank;
      cfg.levi = levi;
      for (const auto& f : chi_flags) {
        auto eq = f.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: --chi entries look like 1=-2\n";
          return 2;
        }
        cfg.chi[std::stoi(f.substr(0, eq))] = std::stol(f.substr(eq + 1));
      }
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.bound = bound;
      for (const auto& c : check_flags) {
        if (c == "all") {
          cfg.checks = kAllChecks;
          break;
        }
        cfg.checks.push_back(c);
      }
      cfg.degree_audit = degree_audit;
      cfg.override_limits = override_limits;
      cfg.timings = timings;
      validate_config(cfg);
    }
    auto rep = run_suite(cfg);
    std::string text = format == "json" ? report_json(rep) : report_markdown(rep);
    if (int rc = write_or_print(text, out_path); rc != 0) return rc;
    return rep.failed > 0 ? 1 : 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
