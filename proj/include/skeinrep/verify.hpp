#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace skeinrep {

struct VerifyConfig {
  int digits = 40;
  double tolerance = 1e-18;
  int max_color = 6;
  std::string surface = "torus1";
  int samples = 100;
  unsigned seed = 20240607;

  /// Throws DomainError unless tolerance >= 10^{-(digits-5)}.
  void validate() const;
};

struct CheckResult {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool passed = false;
  std::string witness;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& suite, const VerifyConfig& config);

VerifyReport verify_identities(const VerifyConfig& config);
VerifyReport verify_unitarity(const VerifyConfig& config);
VerifyReport verify_pentagon(const VerifyConfig& config);
VerifyReport verify_norms(const VerifyConfig& config);
VerifyReport verify_anosov(const VerifyConfig& config);

}  // namespace skeinrep
