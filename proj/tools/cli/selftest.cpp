#include "cli/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "powfactor/batch.hpp"
#include "powfactor/engine.hpp"
#include "powfactor/shifted_eval.hpp"

namespace powfactor::cli {
namespace {

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = detail();
  }
};

mpz_class random_below(std::mt19937_64& rng, std::uint64_t bound) {
  return mpz_class(static_cast<unsigned long>(rng() % bound));
}

Check eval_vs_naive(std::mt19937_64& rng, const EvalHooks* hooks) {
  Check check{"eval_shifted_factorials == naive_eval"};
  for (unsigned e = 0; e <= 5; ++e) {
    for (int done = 0; done < 20;) {
      const Modulus mod(mpz_class(static_cast<unsigned long>((rng() >> 33) | 1)) + 2);
      const mpz_class beta = random_below(rng, mod.value().get_ui());
      const LinearPoly h{random_below(rng, mod.value().get_ui())};
      const auto planned = build_eval_plan(mod, e, beta);
      if (!std::holds_alternative<EvalPlan>(planned)) continue;
      const auto& plan = std::get<EvalPlan>(planned);
      const auto fast = eval_shifted_factorials(h, plan, hooks);
      const auto slow = naive_eval(mod, h, plan.k, progression_points(mod, beta, plan.k));
      check.expect(fast == slow, [&] {
        return "N=" + mod.value().get_str() + " beta=" + beta.get_str() + " c=" + h.c.get_str() +
               " k=" + std::to_string(plan.k);
      });
      ++done;
    }
  }
  return check;
}

Check batch_vs_scan(std::mt19937_64& rng) {
  Check check{"find_noninvertible == per-element scan"};
  for (int t = 0; t < 500; ++t) {
    const std::uint64_t n = 2 + rng() % 5000;
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    std::vector<mpz_class> fs(1 + rng() % 24);
    for (auto& f : fs) f = random_below(rng, n);
    std::size_t expected = fs.size();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (gcd(fs[i], mod.value()) > 1) {
        expected = i;
        break;
      }
    }
    const auto got = find_noninvertible(mod, fs);
    const bool ok = expected == fs.size()
                        ? std::holds_alternative<AllInvertible>(got)
                        : std::holds_alternative<NonInvertible>(got) &&
                              std::get<NonInvertible>(got).index == expected;
    check.expect(ok, [&] { return "N=" + std::to_string(n); });
  }
  return check;
}

Check factor_below_vs_trial(std::mt19937_64& rng) {
  Check check{"find_factor_below == trial division"};
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t n = 401 + 2 * (rng() % 20000);
    const ResidueInfo info{2, 1};
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    for (unsigned e = 1; (std::uint64_t{2} << (2 * e)) * 5 <= n; ++e) {
      const std::uint64_t bound = std::uint64_t{2} << (2 * e);
      bool any = false;
      for (std::uint64_t p = 3; p <= bound; p += 2) {
        if (n % p == 0 && is_prime(mpz_class(static_cast<unsigned long>(p)))) any = true;
      }
      const auto got = find_factor_below(mod, info, e);
      bool ok = false;
      if (const auto* hit = std::get_if<FoundPrime>(&got)) {
        ok = any && hit->p <= bound && mpz_divisible_ui_p(mpz_class(static_cast<unsigned long>(n)).get_mpz_t(),
                                                          hit->p.get_ui()) != 0;
      } else if (std::holds_alternative<NoneBelow>(got)) {
        ok = !any;
      }
      check.expect(ok, [&] { return "N=" + std::to_string(n) + " e=" + std::to_string(e); });
    }
  }
  return check;
}

Check special_form_sweep() {
  Check check{"special_form_factor recomposition (2^n +- 1, n <= 40)"};
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (const Sign sign : {Sign::Minus, Sign::Plus}) {
      const SpecialForm form{2, 1, n, sign};
      if (form.value() < 2) continue;
      bool ok = true;
      try {
        const auto f = special_form_factor(form);
        ok = f.recompose() == form.value() &&
             std::all_of(f.factors.begin(), f.factors.end(),
                         [](const PrimeFactor& pf) { return is_prime(pf.p); });
      } catch (const std::exception&) {
        ok = false;
      }
      check.expect(ok, [&] { return form.to_string(); });
    }
  }
  return check;
}

Check collision_sets_disjoint() {
  Check check{"collision sets disjoint for p <= B <= N/5"};
  for (std::uint64_t n = 10; n <= 600; ++n) {
    const auto fs = factor_by_trial_division(mpz_class(static_cast<unsigned long>(n)));
    if (fs.size() == 1 && fs.front().second == 1) continue;
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    for (const auto& [pz, unused] : fs) {
      const std::uint64_t p = pz.get_ui();
      if (5 * p > n) continue;
      for (std::uint64_t m = 2; m < p; ++m) {
        if (std::gcd(n, m) != 1) continue;
        const std::uint64_t bound = n / 5;
        std::uint64_t k = 1;
        while (k * k * m < bound) ++k;
        const auto sets = collision_sets(mod, ResidueInfo{m, p % m}, k);
        std::vector<mpz_class> left = sets.shifted;
        std::vector<mpz_class> right = sets.strided;
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        std::vector<mpz_class> both;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::back_inserter(both));
        check.expect(both.empty(), [&] {
          return "N=" + std::to_string(n) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
        });
      }
    }
  }
  return check;
}

}  // namespace

std::string SelftestReport::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  std::mt19937_64 rng(options.seed);
  EvalHooks fault;
  fault.after_shift = [](std::vector<mpz_class>& values) {
    if (!values.empty()) values.front() += 1;
  };
  const EvalHooks* hooks = options.inject_shift_fault ? &fault : nullptr;

  std::vector<Check> checks;
  checks.push_back(eval_vs_naive(rng, hooks));
  checks.push_back(batch_vs_scan(rng));
  checks.push_back(factor_below_vs_trial(rng));
  checks.push_back(special_form_sweep());
  checks.push_back(collision_sets_disjoint());

  SelftestReport report;
  report.lines.push_back("selftest seed=" + std::to_string(options.seed));
  for (const auto& c : checks) {
    if (c.failures == 0) {
      report.lines.push_back("PASS " + c.name + " (" + std::to_string(c.cases) + " cases)");
    } else {
      report.passed = false;
      report.lines.push_back("FAIL " + c.name + " (" + std::to_string(c.failures) + "/" +
                             std::to_string(c.cases) + " cases; first: " + c.first_failure + ")");
    }
  }
  report.lines.push_back(report.passed ? "selftest passed" : "selftest FAILED");
  return report;
}

}  // namespace powfactor::cli
