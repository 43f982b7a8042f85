#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freetransform {

/// Outcome of one identity check: the observed deviation against its
/// tolerance.
struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tol = 0.0;
  bool passed = false;
};

/// Names accepted by run_suite, not counting "all".
const std::vector<std::string>& suite_names();

/// Runs a verification battery: kernels, nevanlinna, operators, limits,
/// laplace, pick or all. Throws InvalidInput for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace freetransform
