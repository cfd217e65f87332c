#include "powfactor/engine.hpp"

#include <algorithm>
#include <map>

#include "powfactor/arith.hpp"

namespace powfactor {
namespace {

class Job {
 public:
  explicit Job(const FactorOptions& options) : options_(options) {}

  void add(const mpz_class& p, unsigned e) { exponents_[p] += e; }

  void event(ScheduleEvent ev) {
    if (options_.on_event) options_.on_event(ev);
    stats_.schedule.push_back(std::move(ev));
  }

  FactorStats& stats() { return stats_; }

  Factorization finish(const mpz_class& input, const OpCounts& ops) {
    Factorization out{input, {}, std::move(stats_)};
    out.stats.ops = ops;
    for (const auto& [p, e] : exponents_) {
      const auto cert = certify_prime(p);
      if (!cert) throw InvariantViolation("factor " + p.get_str() + " failed primality certification");
      out.factors.push_back({p, e, *cert});
    }
    if (out.recompose() != input) {
      throw InvariantViolation("factors of " + input.get_str() + " do not recompose to the input");
    }
    return out;
  }

 private:
  const FactorOptions& options_;
  std::map<mpz_class, unsigned> exponents_;
  FactorStats stats_;
};

std::vector<PrimePower> finish_by_trial_division(const mpz_class& n, const ResidueInfo& info,
                                                 Job& job) {
  auto primes = factor_by_trial_division(n);
  for (const auto& [p, e] : primes) {
    job.event({info.m, 0, 0, ScheduleEvent::Kind::TrialDivision, p});
  }
  return primes;
}

// All prime powers of n under the promise that its primes are r mod m.
std::vector<PrimePower> run_schedule(mpz_class n, const ResidueInfo& info, Job& job) {
  if (info.m < 2 || info.r >= info.m) {
    throw std::invalid_argument("residue info needs m >= 2 and 0 <= r < m");
  }
  std::vector<PrimePower> found;
  const auto take = [&](const mpz_class& p) {
    auto removal = remove_prime_power(n, p);
    found.emplace_back(p, removal.exponent);
    n = std::move(removal.cofactor);
  };

  mpz_class excluded = 1;  // no prime <= excluded in the class divides n
  unsigned e = 1;
  const mpz_class mz(static_cast<unsigned long>(info.m));
  while (n > 1) {
    if (n < kTrialDivisionLimit) {
      auto rest = finish_by_trial_division(n, info, job);
      found.insert(found.end(), rest.begin(), rest.end());
      break;
    }
    if (excluded * excluded >= n || is_prime(n)) {
      if (!is_prime(n)) {
        // Only reachable when some prime factor lies outside the promised class.
        throw ResiduePromiseViolation("cofactor " + n.get_str() +
                                      " is composite with no class prime below its square root");
      }
      job.event({info.m, e, excluded, ScheduleEvent::Kind::PrimeCofactor, n});
      found.emplace_back(n, 1);
      break;
    }

    mpz_class bound;
    mpz_mul_2exp(bound.get_mpz_t(), mz.get_mpz_t(), 2 * e);
    if (5 * bound > n) {
      // Only reachable with r != 1; the class is short enough to scan.
      const mpz_class root = sqrt(n) + 1;
      const auto p = trial_division_in_progression(n, info.r, info.m, root.get_ui());
      if (!p) throw ResiduePromiseViolation("composite " + n.get_str() + " has no prime factor in the promised class");
      const mpz_class pz(static_cast<unsigned long>(*p));
      job.event({info.m, e, root, ScheduleEvent::Kind::TrialDivision, pz});
      take(pz);
      continue;
    }

    const auto outcome = find_factor_below(Modulus(n), info, e);
    if (const auto* hit = std::get_if<FoundPrime>(&outcome)) {
      job.event({info.m, e, bound, ScheduleEvent::Kind::Found, hit->p});
      take(hit->p);
    } else if (std::holds_alternative<NoneBelow>(outcome)) {
      job.event({info.m, e, bound, ScheduleEvent::Kind::NoneBelow, 0});
      excluded = bound;
      ++e;
    } else {
      const mpz_class g = std::get<LuckyFactor>(outcome).g;
      job.event({info.m, e, bound, ScheduleEvent::Kind::Lucky, g});
      for (const auto& [q, unused] : factor_by_trial_division(g)) take(q);
    }
  }
  for (const auto& [p, unused] : found) {
    if (mpz_fdiv_ui(p.get_mpz_t(), info.m) != info.r) {
      throw ResiduePromiseViolation("prime factor " + p.get_str() + " is not congruent to " +
                                    std::to_string(info.r) + " mod " + std::to_string(info.m));
    }
  }
  return found;
}

Factorization factor_after_trial_division(const mpz_class& n, const ResidueInfo& info,
                                          const FactorOptions& options) {
  if (n < 1) throw std::invalid_argument("can only factor positive integers");
  CountScope scope;
  Job job(options);
  const auto td = trial_division(n, kTrialDivisionLimit);
  for (const auto& [p, e] : td.partial) job.add(p, e);
  if (td.cofactor > 1) {
    for (const auto& [p, e] : run_schedule(td.cofactor, info, job)) job.add(p, e);
  }
  return job.finish(n, scope.counts());
}

}  // namespace

mpz_class SpecialForm::value() const {
  mpz_class x;
  mpz_class y;
  mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), n);
  mpz_pow_ui(y.get_mpz_t(), base_b.get_mpz_t(), n);
  return sign == Sign::Plus ? mpz_class(x + y) : mpz_class(x - y);
}

void SpecialForm::validate() const {
  if (base_b < 1) throw std::invalid_argument("base_b must be at least 1");
  if (a <= base_b) throw std::invalid_argument("a must exceed base_b");
  if (n < 1) throw std::invalid_argument("exponent must be at least 1");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), base_b.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("gcd(" + a.get_str() + ", " + base_b.get_str() + ") = " +
                                g.get_str() + ", bases must be coprime");
  }
}

std::string SpecialForm::to_string() const {
  const std::string n_str = std::to_string(n);
  if (base_b == 1) return a.get_str() + "^" + n_str + (sign == Sign::Plus ? "+1" : "-1");
  return a.get_str() + "^" + n_str + (sign == Sign::Plus ? "+" : "-") + base_b.get_str() + "^" +
         n_str;
}

std::string to_string(ScheduleEvent::Kind kind) {
  switch (kind) {
    case ScheduleEvent::Kind::Found: return "found";
    case ScheduleEvent::Kind::NoneBelow: return "none_below";
    case ScheduleEvent::Kind::Lucky: return "lucky";
    case ScheduleEvent::Kind::TrialDivision: return "trial_division";
    case ScheduleEvent::Kind::PrimeCofactor: return "prime_cofactor";
  }
  return "unknown";
}

mpz_class Factorization::recompose() const {
  mpz_class acc = 1;
  mpz_class power;
  for (const auto& f : factors) {
    mpz_pow_ui(power.get_mpz_t(), f.p.get_mpz_t(), f.e);
    acc *= power;
  }
  return acc;
}

std::vector<std::uint64_t> divisor_set(std::uint64_t n, Sign sign) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  if (sign == Sign::Plus) {
    for (auto& d : out) d *= 2;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

mpz_class order_gcd(const mpz_class& a, const mpz_class& base_b, std::uint64_t d,
                    const mpz_class& n) {
  if (n < 2) return 1;
  const Modulus mod(n);
  const auto inv = try_invert(mod_reduce(base_b, mod));
  if (!std::holds_alternative<Inverse>(inv)) {
    throw std::invalid_argument("base_b is not invertible modulo N");
  }
  const Residue ratio = mod_reduce(a, mod) * std::get<Inverse>(inv).value;
  const Residue power = mod_pow(ratio, mpz_class(static_cast<unsigned long>(d)));
  return gcd_with(mod_reduce(power.value() - 1, mod).value(), n);
}

Factorization factor_with_residue(const mpz_class& n, const ResidueInfo& info,
                                  const FactorOptions& options) {
  if (n < 1) throw std::invalid_argument("can only factor positive integers");
  CountScope scope;
  Job job(options);
  for (const auto& [p, e] : run_schedule(n, info, job)) job.add(p, e);
  return job.finish(n, scope.counts());
}

Factorization special_form_factor(const SpecialForm& form, const FactorOptions& options) {
  form.validate();
  const mpz_class value = form.value();
  CountScope scope;
  Job job(options);
  if (value == 1) return job.finish(value, scope.counts());

  // Small primes, then (Minus) every prime of a - base_b.
  const auto td = trial_division(value, kTrialDivisionLimit);
  for (const auto& [p, e] : td.partial) job.add(p, e);
  mpz_class rest = td.cofactor;
  if (form.sign == Sign::Minus && form.a - form.base_b > 1) {
    for (const auto& [q, unused] : factor_by_trial_division(form.a - form.base_b)) {
      if (rest == 1 || mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t()) == 0) continue;
      auto removal = remove_prime_power(rest, q);
      job.add(q, removal.exponent);
      rest = std::move(removal.cofactor);
    }
  }

  const mpz_class value_sq = value * value;
  for (const std::uint64_t d : divisor_set(form.n, form.sign)) {
    if (rest == 1) break;
    OrderStep step{d, order_gcd(form.a, form.base_b, d, rest), {}};

    if (form.sign == Sign::Minus && d < form.n && step.g * step.g > value) {
      throw InvariantViolation("G at d = " + std::to_string(d) + " exceeds sqrt(N)");
    }
    if (form.sign == Sign::Plus && d < 2 * form.n && step.g * step.g * step.g >= value_sq) {
      throw InvariantViolation("G at d = " + std::to_string(d) + " is not below N^(2/3)");
    }
    if (form.sign == Sign::Plus && d == form.n && step.g != 1) {
      throw InvariantViolation("G at d = n must be 1 for a sum of powers");
    }

    if (step.g > 1) {
      if (d < 2) throw InvariantViolation("nontrivial G at d = 1 after removing factors of a - b");
      for (const auto& [p, unused] : run_schedule(step.g, ResidueInfo{d, 1}, job)) {
        if (mpz_fdiv_ui(p.get_mpz_t(), d) != 1) {
          throw InvariantViolation("prime " + p.get_str() + " from G at d = " + std::to_string(d) +
                                   " is not 1 mod d");
        }
        auto removal = remove_prime_power(rest, p);
        job.add(p, removal.exponent);
        rest = std::move(removal.cofactor);
        step.primes.push_back(p);
      }
    }
    job.stats().order_steps.push_back(std::move(step));
  }
  if (rest != 1) {
    throw InvariantViolation("cofactor " + rest.get_str() + " left after the divisor set");
  }
  return job.finish(value, scope.counts());
}

Factorization factor(const mpz_class& n, const FactorOptions& options) {
  return factor_after_trial_division(n, ResidueInfo{2, 1}, options);
}

Factorization factor(const mpz_class& n, const ResidueInfo& info, const FactorOptions& options) {
  return factor_after_trial_division(n, info, options);
}

Factorization factor(const SpecialForm& form, const FactorOptions& options) {
  return special_form_factor(form, options);
}

}  // namespace powfactor
