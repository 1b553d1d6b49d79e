#ifndef FLAGTWIST_VERIFIER_HPP
#define FLAGTWIST_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagtwist/chevalley.hpp"

namespace flagtwist {

inline constexpr const char* kVersion = "flagtwist 1.0.0";

extern const std::vector<std::string> kAllChecks;

struct VerifyConfig {
  std::string type;
  int rank = 0;
  std::vector<int> levi;    // 1-based simple-root indices
  std::map<int, long> chi;  // 1-based simple-root index -> chi value
  int samples = 20;
  std::uint64_t seed = 42;
  long bound = 20;  // numerator/denominator bound of the sample stream
  std::vector<std::string> checks;  // normalized to the fixed kAllChecks order
  bool degree_audit = false;
  bool override_limits = false;
  bool timings = false;  // elapsed_ms breaks byte-determinism; opt-in
  bool corrupt = false;  // fault-injection hook: flip one structure constant
};

struct CheckRecord {
  std::string name;
  std::string status;  // pass | fail | skip
  long count = 0;      // individual verifications performed
  std::string witness; // first failing input, exact serialization
  std::string info;    // audit data (degrees etc.), not a failure
  long elapsed_ms = 0;
};

struct Report {
  VerifyConfig config;
  std::vector<CheckRecord> checks;
  int total = 0, passed = 0, failed = 0, skipped = 0;
};

/// Throws std::invalid_argument listing every violation.
VerifyConfig parse_config(const std::string& json_text);

/// Validation shared by parse_config and the inline-flag CLI path.
void validate_config(const VerifyConfig& cfg);

/// Runs the requested checks; check failures are data, never exceptions.
/// std::logic_error escapes only on internal defects (exit code 3).
Report run_suite(const VerifyConfig& cfg);

std::string report_json(const Report& r);
std::string report_markdown(const Report& r);

/// Structure-constant dump for export-algebra.
std::string export_algebra_json(const std::string& type, int rank);

/// Fault-injection hook: flips the sign of one e-e structure constant.
void corrupt_one_structure_constant(ChevalleyAlgebra& alg);

/// Full Jacobi sweep; returns a witness triple description on violation.
std::optional<std::string> jacobi_witness(const ChevalleyAlgebra& alg);

}  // namespace flagtwist

#endif
