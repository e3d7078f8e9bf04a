#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ancrc/types.hpp"

namespace ancrc::verify {

struct RunConfig {
  std::vector<std::string> suites{"all"};
  int n_lo = 1, n_hi = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  std::map<std::string, double> tol_overrides;
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty: stdout
};

struct CaseRecord {
  std::string suite;
  std::string case_id;
  int n = 0;
  std::string params;
  double max_abs_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CaseRecord> cases;
  int total = 0;
  int passed = 0;
  double wall_time = 0.0;

  bool all_pass() const { return passed == total; }
};

extern const std::vector<std::string> kSuiteNames;

// Runs the named suites (throws ConfigError for unknown names). Individual
// case failures are recorded, never thrown.
VerificationReport run_suites(const RunConfig& cfg);

std::string to_json(const VerificationReport& rep, bool include_wall_time = true);
std::string to_csv(const VerificationReport& rep);
std::string to_text(const VerificationReport& rep);

// Helper for suite code: clamp a case record from an error measurement.
void record(VerificationReport& rep, const std::string& suite,
            const std::string& case_id, int n, const std::string& params,
            double err, double tol);

}  // namespace ancrc::verify
