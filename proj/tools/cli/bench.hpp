#pragma once

#include <string>
#include <vector>

#include "cli/input.hpp"
#include "cli/report.hpp"

namespace powfactor::cli {

struct BenchRow {
  std::string input;
  std::string mode;  // "accelerated" or "baseline"
  OpCounts ops;
  double elapsed_ms = 0;
  double ratio = 1;  // baseline mulmods / this row's mulmods
};

/// Runs each input twice: through its natural route (the special-form
/// driver, or the caller's residue promise) and through the m = 2, r = 1
/// baseline on the plain value.
std::vector<BenchRow> run_bench(const std::vector<InputExpr>& inputs);

std::string format_bench_table(const std::vector<BenchRow>& rows);
Json bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace powfactor::cli
