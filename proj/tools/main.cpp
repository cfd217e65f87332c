#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "cli/bench.hpp"
#include "cli/input.hpp"
#include "cli/report.hpp"
#include "cli/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInvariant = 3;

using namespace powfactor;
using namespace powfactor::cli;

int cmd_factor(const std::string& text, bool json, bool trace, std::optional<std::uint64_t> residue,
               std::optional<std::uint64_t> modulus) {
  InputExpr expr = parse_special_form(text);
  if (residue.has_value() != modulus.has_value()) {
    throw ConstraintError("constraint violation: --residue and --modulus must be given together");
  }
  if (residue) expr = with_residue(std::move(expr), *residue, *modulus);

  FactorOptions options;
  if (trace) {
    options.on_event = [](const ScheduleEvent& ev) { std::cerr << format_event(ev) << "\n"; };
  }
  const auto start = std::chrono::steady_clock::now();
  const Factorization f = run_factor(expr, options);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    std::cout << to_json(expr, f, elapsed).dump(2) << "\n";
  } else {
    std::cout << format_text(f);
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& texts, bool json) {
  std::vector<InputExpr> inputs;
  for (const auto& t : texts) inputs.push_back(parse_special_form(t));
  const auto rows = run_bench(inputs);
  if (json) {
    std::cout << bench_to_json(rows).dump(2) << "\n";
  } else {
    std::cout << format_bench_table(rows);
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, const std::string& fault) {
  SelftestOptions options{seed, fault == "shift"};
  const auto report = run_selftest(options);
  std::cout << report.text();
  return report.passed ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic factorization of a^n +- b^n"};
  app.require_subcommand(1);

  std::string factor_expr;
  bool json = false;
  bool trace = false;
  std::optional<std::uint64_t> residue;
  std::optional<std::uint64_t> modulus;
  auto* factor_cmd = app.add_subcommand("factor", "Factor an integer or a^n +- b^n expression");
  factor_cmd->add_option("expr", factor_expr, "e.g. 2^67-1, 3^5-2^5, 10403")->required();
  factor_cmd->add_flag("--json", json, "Emit JSON");
  factor_cmd->add_flag("--trace", trace, "Stream schedule events to stderr");
  factor_cmd->add_option("--residue", residue, "Residue r of every prime factor");
  factor_cmd->add_option("--modulus", modulus, "Modulus m of the residue class");

  std::vector<std::string> bench_exprs;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Compare accelerated and baseline operation counts");
  bench_cmd->add_option("expr", bench_exprs, "Inputs")->required();
  bench_cmd->add_flag("--json", bench_json, "Emit JSON");

  std::uint64_t seed = 42;
  std::string fault;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run reduced oracle and invariant checks");
  selftest_cmd->add_option("--seed", seed, "RNG seed");
  selftest_cmd->add_option("--inject-fault", fault, "Fault injection hook (shift)")
      ->check(CLI::IsMember({"shift"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*factor_cmd) return cmd_factor(factor_expr, json, trace, residue, modulus);
    if (*bench_cmd) return cmd_bench(bench_exprs, bench_json);
    if (*selftest_cmd) return cmd_selftest(seed, fault);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const ConstraintError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ResiduePromiseViolation& e) {
    std::cerr << "residue promise violated: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadInput;
}
