// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares library output against machine-integer
// oracles or recomputes the claimed property directly.

#include <powfactor/arith.hpp>
#include <powfactor/batch.hpp>
#include <powfactor/engine.hpp>
#include <powfactor/primality.hpp>
#include <powfactor/residue_sieve.hpp>
#include <powfactor/shifted_eval.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace powfactor;
using oracle::u64;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

mpz_class pow_of(unsigned long base, unsigned long n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, n);
  return out;
}

// Recomposition plus a certificate for every factor.
void check_factorization(Criterion& c, const Factorization& f, const mpz_class& expected,
                         const std::string& label) {
  ++c.cases;
  if (f.input != expected || f.recompose() != expected) {
    c.fail(label + ": product of factors differs from input");
    return;
  }
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& pf = f.factors[i];
    if (pf.e == 0 || !certify_prime(pf.p) || *certify_prime(pf.p) != pf.certification) {
      c.fail(label + ": factor " + pf.p.get_str() + " not certified prime");
      return;
    }
    if (i > 0 && f.factors[i - 1].p >= pf.p) {
      c.fail(label + ": factors not strictly ascending");
      return;
    }
  }
}

struct SweepItem {
  SpecialForm form;
  Factorization result;
};

std::vector<SweepItem> run_sweep(Criterion& c, const std::vector<SpecialForm>& forms) {
  std::vector<SweepItem> out;
  for (const auto& form : forms) {
    try {
      auto f = special_form_factor(form);
      check_factorization(c, f, form.value(), form.to_string());
      out.push_back({form, std::move(f)});
    } catch (const std::exception& e) {
      ++c.cases;
      c.fail(form.to_string() + ": " + e.what());
    }
  }
  return out;
}

bool has_factors(const Factorization& f, std::vector<unsigned long> ps) {
  if (f.factors.size() != ps.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (f.factors[i].p != ps[i] || f.factors[i].e != 1) return false;
  }
  return true;
}

std::vector<SpecialForm> mersenne_fermat_forms() {
  std::vector<SpecialForm> forms;
  for (unsigned n = 2; n <= 80; ++n) forms.push_back({2, 1, n, Sign::Minus});
  for (unsigned n = 1; n <= 64; ++n) forms.push_back({2, 1, n, Sign::Plus});
  return forms;
}

std::vector<SpecialForm> mixed_base_forms() {
  std::vector<SpecialForm> forms;
  for (unsigned long a = 3; a <= 6; ++a) {
    for (unsigned long b = 2; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (unsigned n = 1; n <= 24; ++n) {
        forms.push_back({a, b, n, Sign::Minus});
        forms.push_back({a, b, n, Sign::Plus});
      }
    }
  }
  return forms;
}

// Primes recovered from every G branch are 1 mod d; a sum of powers has a
// trivial G at d = n.
void check_order_argument(Criterion& c, const std::vector<SweepItem>& items) {
  for (const auto& item : items) {
    const auto& form = item.form;
    ++c.cases;
    for (const auto& step : item.result.stats.order_steps) {
      for (const auto& p : step.primes) {
        if (mpz_fdiv_ui(p.get_mpz_t(), step.d) != 1) {
          c.fail(form.to_string() + ": prime " + p.get_str() + " from d = " +
                 std::to_string(step.d) + " is not 1 mod d");
        }
      }
      if (form.sign == Sign::Plus && step.d == form.n && step.g != 1) {
        c.fail(form.to_string() + ": recorded G at d = n is " + step.g.get_str());
      }
    }
    if (form.sign == Sign::Plus) {
      // Recompute G at d = n on the cofactor left after small primes.
      const auto td = trial_division(form.value(), kTrialDivisionLimit);
      if (td.cofactor > 1) {
        const mpz_class g = order_gcd(form.a, form.base_b, form.n, td.cofactor);
        if (g != 1) c.fail(form.to_string() + ": G at d = n is " + g.get_str());
      }
    }
  }
}

void check_g_bounds(Criterion& c, const std::vector<SweepItem>& items) {
  for (const auto& item : items) {
    const auto& form = item.form;
    const mpz_class n_value = form.value();
    for (const auto& step : item.result.stats.order_steps) {
      if (form.sign == Sign::Minus && step.d < form.n) {
        ++c.cases;
        if (step.g * step.g > n_value) {
          c.fail(form.to_string() + ": G = " + step.g.get_str() + " at d = " +
                 std::to_string(step.d) + " exceeds sqrt(N)");
        }
      }
      if (form.sign == Sign::Plus && step.d < 2 * form.n) {
        ++c.cases;
        if (step.g * step.g * step.g >= n_value * n_value) {
          c.fail(form.to_string() + ": G = " + step.g.get_str() + " at d = " +
                 std::to_string(step.d) + " not below N^(2/3)");
        }
      }
    }
  }
}

std::optional<EvalPlan> random_plan(std::mt19937_64& rng, unsigned e, u64& n_out, u64& beta_out) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const u64 n = std::uniform_int_distribution<u64>(2, (u64{1} << 32) - 1)(rng);
    const u64 beta = std::uniform_int_distribution<u64>(1, n - 1)(rng);
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    auto plan = build_eval_plan(mod, e, mpz_class(static_cast<unsigned long>(beta)));
    if (auto* p = std::get_if<EvalPlan>(&plan)) {
      n_out = n;
      beta_out = beta;
      return std::move(*p);
    }
  }
  return std::nullopt;
}

void criterion_eval(Criterion& c) {
  std::mt19937_64 rng(3);
  for (unsigned e = 0; e <= 8; ++e) {
    const u64 k = u64{1} << e;
    const int instances = 1000;
    for (int t = 0; t < instances; ++t) {
      u64 n = 0, beta = 0;
      auto plan = random_plan(rng, e, n, beta);
      ++c.cases;
      if (!plan) {
        c.fail("no valid plan found for k = " + std::to_string(k));
        continue;
      }
      const u64 cval = std::uniform_int_distribution<u64>(0, n - 1)(rng);
      const LinearPoly h{mpz_class(static_cast<unsigned long>(cval))};
      const auto fast = eval_shifted_factorials(h, *plan);
      const auto points = progression_points(plan->mod, plan->beta, k);
      std::vector<mpz_class> reference;
      if (k <= 64) {
        reference = naive_eval(plan->mod, h, k, points);
        // Naive route itself against the machine-integer product.
        for (u64 j = 0; j < k; ++j) {
          const u64 x = oracle::mulmod(beta, j + 1, n);
          if (reference[j].get_ui() != oracle::shifted_factorial(x, cval, k, n)) {
            c.fail("naive_eval disagrees with direct product at k = " + std::to_string(k));
          }
        }
      } else {
        reference = subproduct_tree_eval(plan->mod, h, k, points);
      }
      if (fast != reference) {
        std::ostringstream os;
        os << "k = " << k << ", N = " << n << ", beta = " << beta << ", c = " << cval;
        c.fail(os.str());
      }
    }
  }
}

// Every composite N <= 5000, every prime p | N, every B in [p, N/5], every
// 2 <= m < p with gcd(N, m) = 1 and r = p mod m; k = ceil(sqrt(B/m)).
// Sets depend on B only through k, so each distinct k is visited once.
void criterion_collision_sets(Criterion& c) {
  for (u64 n = 4; n <= 5000; ++n) {
    if (oracle::is_prime(n)) continue;
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    for (const auto& [p, unused] : oracle::factor(n)) {
      const u64 b_max = n / 5;
      if (p > b_max) continue;
      for (u64 m = 2; m < p; ++m) {
        if (oracle::gcd(n, m) != 1) continue;
        const u64 r = p % m;
        const u64 m_inv = *oracle::inverse(m, n);
        const u64 shift = oracle::mulmod(m_inv, r, n);
        u64 last_k = 0;
        for (u64 bound = p; bound <= b_max; ++bound) {
          u64 k = 1;
          while (k * k * m < bound) ++k;
          if (k == last_k) continue;
          last_k = k;
          ++c.cases;

          const auto sets = collision_sets(mod, ResidueInfo{m, r}, k);
          std::vector<u64> a, b;
          for (u64 i = 1; i <= k; ++i) {
            a.push_back((shift + n - i % n) % n);
            b.push_back((n - oracle::mulmod(i, k, n)) % n);
          }
          bool same = sets.shifted.size() == k && sets.strided.size() == k;
          for (u64 i = 0; same && i < k; ++i) {
            same = sets.shifted[i] == a[i] && sets.strided[i] == b[i];
          }
          if (!same) {
            c.fail("collision_sets values wrong for N = " + std::to_string(n));
            continue;
          }
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          std::vector<u64> both;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
          if (!both.empty()) {
            c.fail("sets intersect: N = " + std::to_string(n) + ", p = " + std::to_string(p) +
                   ", m = " + std::to_string(m) + ", k = " + std::to_string(k));
            continue;
          }
          // m^{-1} r - i = -j k (mod p) for some 1 <= i, j <= k.
          // The smallest positive i in the class of shift + j k mod p must be <= k.
          bool found = false;
          for (u64 j = 1; j <= k && !found; ++j) {
            const u64 i = (shift % p + (j % p) * (k % p)) % p;
            found = (i == 0 ? p : i) <= k;
          }
          if (!found) {
            c.fail("no collision mod p: N = " + std::to_string(n) + ", p = " + std::to_string(p) +
                   ", m = " + std::to_string(m) + ", k = " + std::to_string(k));
          }
        }
      }
    }
  }
}

// Residue pairs that actually occur: from each m in 2..64 coprime to N with
// every prime factor in one class mod m. Covers the order-argument pairs
// (m = d, r = 1) produced by the special-form driver.
void criterion_find_factor_below(Criterion& c) {
  for (u64 n = 400; n <= 100000; ++n) {
    if (oracle::is_prime(n)) continue;
    const auto fac = oracle::factor(n);
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    for (u64 m = 2; m <= 64; ++m) {
      if (oracle::gcd(n, m) != 1) continue;
      const u64 r = fac.front().first % m;
      bool shared = true;
      for (const auto& [p, unused] : fac) shared = shared && p % m == r;
      if (!shared) continue;
      for (unsigned e = 0;; ++e) {
        const u64 bound = (u64{1} << (2 * e)) * m;
        if (5 * bound > n) break;
        ++c.cases;
        const auto expected = oracle::smallest_class_prime(n, r, m, bound);
        std::string label = "N = " + std::to_string(n) + ", m = " + std::to_string(m) +
                            ", r = " + std::to_string(r) + ", e = " + std::to_string(e);
        SearchOutcome got;
        try {
          got = find_factor_below(mod, ResidueInfo{m, r}, e);
        } catch (const std::exception& ex) {
          c.fail(label + ": " + ex.what());
          continue;
        }
        if (const auto* fp = std::get_if<FoundPrime>(&got)) {
          const u64 p = fp->p.get_ui();
          if (!expected) {
            c.fail(label + ": found " + std::to_string(p) + " but trial division finds none");
          } else if (n % p != 0 || p % m != r || p > bound || !oracle::is_prime(p)) {
            c.fail(label + ": reported " + std::to_string(p) + " is not a class prime below B");
          }
        } else if (std::holds_alternative<NoneBelow>(got)) {
          if (expected) c.fail(label + ": missed " + std::to_string(*expected));
        } else {
          c.fail(label + ": unexpected lucky factor with gcd(N, m) = 1");
        }
      }
    }
  }
}

void criterion_batch(Criterion& c) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10000; ++t) {
    ++c.cases;
    const u64 n = std::uniform_int_distribution<u64>(2, 1u << 20)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    std::vector<u64> raw(len);
    std::vector<mpz_class> fs;
    // Mostly units with the occasional shared factor.
    for (auto& x : raw) {
      x = std::uniform_int_distribution<u64>(0, n - 1)(rng);
      if (std::uniform_int_distribution<int>(0, 15)(rng) != 0) {
        while (oracle::gcd(x, n) != 1) x = (x + 1) % n;
      }
      fs.emplace_back(static_cast<unsigned long>(x));
    }
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};

    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < len && !first; ++i) {
      if (oracle::gcd(raw[i], n) != 1) first = i;
    }
    const auto found = find_noninvertible(mod, fs);
    const auto inverted = batch_invert(mod, fs);
    const std::string label = "instance " + std::to_string(t) + ", N = " + std::to_string(n);
    if (!first) {
      u64 product = 1 % n;
      for (auto x : raw) product = oracle::mulmod(product, x, n);
      const auto* all = std::get_if<AllInvertible>(&found);
      if (all == nullptr || all->inverse_of_product.get_ui() != *oracle::inverse(product, n)) {
        c.fail(label + ": find_noninvertible wrong on all-unit input");
      }
      const auto* inv = std::get_if<std::vector<mpz_class>>(&inverted);
      if (inv == nullptr || inv->size() != len) {
        c.fail(label + ": batch_invert did not invert all-unit input");
        continue;
      }
      for (std::size_t i = 0; i < len; ++i) {
        if ((*inv)[i].get_ui() != *oracle::inverse(raw[i], n)) {
          c.fail(label + ": wrong inverse at index " + std::to_string(i));
        }
      }
    } else {
      const u64 g = oracle::gcd(raw[*first] == 0 ? n : raw[*first], n);
      const auto* a = std::get_if<NonInvertible>(&found);
      const auto* b = std::get_if<NonInvertible>(&inverted);
      if (a == nullptr || a->index != *first || a->g != g) {
        c.fail(label + ": find_noninvertible witness differs from scan");
      }
      if (b == nullptr || b->index != *first || b->g != g) {
        c.fail(label + ": batch_invert witness differs from scan");
      }
    }
  }
}

std::string scaling_detail;

void criterion_scaling(Criterion& c) {
  std::ostringstream os;
  for (const unsigned n : {29u, 37u, 41u, 53u}) {
    ++c.cases;
    const mpz_class value = pow_of(2, n) - 1;
    const auto with_n = factor_with_residue(value, ResidueInfo{n, 1});
    const auto with_2 = factor_with_residue(value, ResidueInfo{2, 1});
    const double fast = static_cast<double>(with_n.stats.ops.mulmods);
    const double slow = static_cast<double>(with_2.stats.ops.mulmods);
    const double ratio = slow / fast;
    const double target = std::sqrt(n / 2.0);
    os << " n=" << n << ":" << with_n.stats.ops.mulmods << "/" << with_2.stats.ops.mulmods;
    char buf[32];
    std::snprintf(buf, sizeof buf, "(%.2f vs %.2f)", ratio, target);
    os << buf;
    if (with_n.recompose() != value || with_2.recompose() != value) {
      c.fail("n = " + std::to_string(n) + ": factorization does not recompose");
    } else if (!(fast < slow)) {
      c.fail("n = " + std::to_string(n) + ": m = n is not cheaper than m = 2");
    } else if (ratio > 3 * target || ratio < target / 3) {
      c.fail("n = " + std::to_string(n) + ": ratio " + std::to_string(ratio) +
             " outside 3x of " + std::to_string(target));
    }
  }
  scaling_detail = os.str();
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  const auto timed = [&](Criterion c, const std::function<void(Criterion&)>& body,
                         const std::string& extra = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %llu cases, %llu failures, %.1fs%s\n", c.failures == 0 ? "PASS" : "FAIL",
                c.id, c.name.c_str(), static_cast<unsigned long long>(c.cases),
                static_cast<unsigned long long>(c.failures), secs, extra.c_str());
    if (c.failures != 0) std::printf("    first failure: %s\n", c.first_failure.c_str());
    std::fflush(stdout);
    results.push_back(c);
  };

  std::vector<SweepItem> sweep1, sweep2;
  timed({1, "2^n-1 (n<=80) and 2^n+1 (n<=64) sweep"}, [&](Criterion& c) {
    sweep1 = run_sweep(c, mersenne_fermat_forms());
    ++c.cases;
    if (!has_factors(special_form_factor({2, 1, 11, Sign::Minus}), {23, 89})) {
      c.fail("2^11-1 is not 23 * 89");
    }
    ++c.cases;
    if (!has_factors(special_form_factor({2, 1, 32, Sign::Plus}), {641, 6700417})) {
      c.fail("2^32+1 is not 641 * 6700417");
    }
  });
  timed({2, "mixed-base sweep a^n+-b^n, 2<=b<a<=6, n<=24"},
        [&](Criterion& c) { sweep2 = run_sweep(c, mixed_base_forms()); });
  timed({3, "eval_shifted_factorials vs naive (k<=64) and subproduct tree (k=128,256)"},
        criterion_eval);
  timed({4, "collision sets disjoint with a collision mod p, composite N<=5000"},
        criterion_collision_sets);
  timed({5, "find_factor_below vs trial division, composite N in [400, 1e5]"},
        criterion_find_factor_below);
  timed({6, "find_noninvertible and batch_invert vs naive scans"}, criterion_batch);
  timed({7, "order argument: p = 1 mod d, trivial G at d = n for sums"}, [&](Criterion& c) {
    check_order_argument(c, sweep1);
    check_order_argument(c, sweep2);
  });
  Criterion scaling{8, "mulmods for 2^n-1: m=n beats m=2, ratio within 3x of sqrt(n/2)"};
  criterion_scaling(scaling);
  timed(scaling, [](Criterion&) {}, scaling_detail);
  timed({9, "G bounds: sqrt(N) for differences, N^(2/3) for sums"},
        [&](Criterion& c) { check_g_bounds(c, sweep2); });

  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const Criterion& c) { return c.failures == 0; });
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
