#ifndef OPUC_VERIFY_HPP
#define OPUC_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "opuc/json_io.hpp"

namespace opuc {

struct RunConfig {
  Eigen::Index grid_size = 1024;
  Eigen::Index series_order = 32;
  Eigen::Index max_n = 12;
  Eigen::Index haar_samples = 100000;
  std::uint64_t seed = 42;
  std::string output_format = "json";
  std::map<std::string, double> tolerances;  // per-check overrides, keyed by check name

  double tol(const std::string& check, double fallback) const;
  void validate() const;
  /// Overlay keys present in j onto this config.
  void merge(const json& j);
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  bool nonconvergence = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by name

  bool passed() const;
  bool nonconvergence() const;
  double max_residual() const;
  json to_json() const;
  std::string to_csv() const;
};

const std::vector<std::string>& suite_names();

/// Runs one registered suite, or every suite for "all" (concurrently). Unknown names throw DomainError.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace opuc

#endif  // OPUC_VERIFY_HPP
