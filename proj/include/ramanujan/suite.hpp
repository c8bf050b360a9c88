#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanujan/report.hpp"

namespace ramanujan::harness {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IdentitySpec {
  std::string name;
  std::string summary;
  int min_n = 1;
  int default_max_n = 1;
  // Symbolic checks are capped by max_poly_n(); enumerations by the label
  // cap of the enumerators.
  bool symbolic = false;
  // Instances for one value of n; may throw trees::BoundExceeded.
  std::function<std::vector<Instance>(int n, int jobs)> check;
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec* find_identity(const std::string& name);

struct SuiteConfig {
  std::map<std::string, int> max_n;  // per identity, overrides the default
  std::optional<int> max_n_all;      // --max-n, overrides everything
  std::vector<std::string> identities;  // empty = all
  int jobs = 1;
};

// key=value lines; '#' starts a comment.  Keys: jobs, max_n.<identity>.
// Throws UsageError on unknown keys, identities or malformed values.
SuiteConfig parse_config(const std::string& text, SuiteConfig base = {});
SuiteConfig load_config(const std::string& path, SuiteConfig base = {});

// Hard cap on n for the symbolic identities; RAMANUJAN_MAX_POLY_N
// overrides the default of 14.
int max_poly_n();

// Runs one identity for n_min..n_max.  Values of n beyond the caps are
// reported as bound-exceeded instances.
VerificationReport run_identity(const IdentitySpec& spec, int n_min, int n_max, int jobs = 1);

// Validates every name first (UsageError before any work), then runs the
// (identity, n) tasks on `jobs` threads.  Reports come back in registry
// order.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

// 0 when everything passed; 1 on a failure, or on a bound-exceeded
// instance unless allow_skip.
int exit_code(const std::vector<VerificationReport>& reports, bool allow_skip);

// One JSON object per line.
void write_json_lines(std::ostream& os, const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> read_json_lines(std::istream& is);

// Golden strings transcribed from the displayed Q_2, Q_3 and the two
// tables of coefficients, keyed by (n, k); k = -1 marks the column sums.
const std::map<std::pair<int, int>, std::string>& golden_qnk();
const std::map<std::pair<int, int>, std::string>& golden_qnk_shifted();
const std::map<int, std::string>& golden_qn();

}  // namespace ramanujan::harness
