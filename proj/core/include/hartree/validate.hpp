#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hartree {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured quantity
  double threshold = 0.0;  // bound it was compared against
  std::string detail;
};

struct ValidationOptions {
  std::size_t n = 2000;  // resolution of the ground-state and spectral checks
  double r_max = 30.0;
  int jobs = 1;
  bool relativistic = true;  // include the c-sweep and scaling checks
  std::uint64_t seed = 20240601;
  double tol = 1e-10;
};

// Runs the invariant suite of every module. Checks that throw are reported as
// failed with the exception text; the suite itself does not throw.
std::vector<CheckResult> run_invariants(const ValidationOptions& opts,
                                        const std::function<void(const CheckResult&)>& progress = {});

}  // namespace hartree
