#include "cli/bench.hpp"

#include <chrono>
#include <cstdio>

namespace powfactor::cli {
namespace {

template <class F>
BenchRow timed(const std::string& input, const std::string& mode, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  const Factorization f = run();
  const auto stop = std::chrono::steady_clock::now();
  return BenchRow{input, mode, f.stats.ops,
                  std::chrono::duration<double, std::milli>(stop - start).count(), 1};
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<InputExpr>& inputs) {
  std::vector<BenchRow> rows;
  for (const auto& expr : inputs) {
    BenchRow fast = timed(expr.raw, "accelerated", [&] { return run_factor(expr); });
    BenchRow slow = timed(expr.raw, "baseline", [&] { return factor(expr.value()); });
    if (fast.ops.mulmods > 0) {
      fast.ratio = static_cast<double>(slow.ops.mulmods) / static_cast<double>(fast.ops.mulmods);
    } else if (slow.ops.mulmods > 0) {
      fast.ratio = 0;  // undefined; accelerated did no modular work at all
    }
    rows.push_back(std::move(fast));
    rows.push_back(std::move(slow));
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-12s %12s %8s %12s %8s\n", "input", "mode", "mulmods",
                "gcds", "elapsed_ms", "ratio");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-16s %-12s %12llu %8llu %12.3f %8.3f\n", r.input.c_str(),
                  r.mode.c_str(), static_cast<unsigned long long>(r.ops.mulmods),
                  static_cast<unsigned long long>(r.ops.gcds), r.elapsed_ms, r.ratio);
    out += line;
  }
  return out;
}

Json bench_to_json(const std::vector<BenchRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"input", r.input},
                       {"mode", r.mode},
                       {"mulmods", r.ops.mulmods},
                       {"gcds", r.ops.gcds},
                       {"elapsed_ms", r.elapsed_ms},
                       {"ratio", r.ratio}});
  }
  return out;
}

}  // namespace powfactor::cli
