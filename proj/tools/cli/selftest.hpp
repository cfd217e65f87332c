#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace powfactor::cli {

struct SelftestOptions {
  std::uint64_t seed = 42;
  /// Fault injection: perturb every shift step of the fast evaluation.
  bool inject_shift_fault = false;
};

struct SelftestReport {
  std::vector<std::string> lines;
  bool passed = true;

  std::string text() const;
};

/// Reduced-size oracle-equivalence and invariant checks. Output depends
/// only on the options.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace powfactor::cli
