#include "powfactor/residue_sieve.hpp"

#include "powfactor/batch.hpp"
#include "powfactor/counters.hpp"
#include "powfactor/primality.hpp"
#include "powfactor/shifted_eval.hpp"

namespace powfactor {
namespace {

void check_info(const ResidueInfo& info) {
  if (info.m < 2 || info.r >= info.m) {
    throw std::invalid_argument("residue info needs m >= 2 and 0 <= r < m");
  }
}

void check_bound(const Modulus& mod, const mpz_class& bound) {
  if (bound < 1 || 5 * bound > mod.value()) {
    throw std::invalid_argument("search bound must satisfy 1 <= B <= N/5");
  }
}

mpz_class inverse_of_m(const Modulus& mod, std::uint64_t m) {
  mpz_class inv;
  const mpz_class mz(static_cast<unsigned long>(m));
  note_gcds();
  if (mpz_invert(inv.get_mpz_t(), mz.get_mpz_t(), mod.value().get_mpz_t()) == 0) {
    throw std::invalid_argument("m is not invertible modulo N");
  }
  return inv;
}

// A prime factor of h (1 < h, every prime factor of h in the class of r
// mod m), found by trial division over the class up to sqrt(h).
mpz_class prime_in_class(const mpz_class& h, const ResidueInfo& info) {
  const mpz_class root = sqrt(h) + 1;
  if (!root.fits_ulong_p()) throw std::invalid_argument("trial division range too large");
  if (auto p = trial_division_in_progression(h, info.r, info.m, root.get_ui())) {
    return mpz_class(static_cast<unsigned long>(*p));
  }
  if (!is_prime(h)) {
    throw ResiduePromiseViolation("a divisor has no prime factor in the promised residue class");
  }
  return h;
}

void check_class(const mpz_class& p, const ResidueInfo& info) {
  if (mpz_fdiv_ui(p.get_mpz_t(), info.m) != info.r) {
    throw ResiduePromiseViolation("prime factor " + p.get_str() + " is not congruent to " +
                                  std::to_string(info.r) + " mod " + std::to_string(info.m));
  }
}

}  // namespace

CollisionSets collision_sets(const Modulus& mod, const ResidueInfo& info, std::uint64_t k) {
  check_info(info);
  const mpz_class m_inv = inverse_of_m(mod, info.m);
  const mpz_class shift = m_inv * static_cast<unsigned long>(info.r);
  CollisionSets sets;
  sets.shifted.reserve(k);
  sets.strided.reserve(k);
  const mpz_class kz(static_cast<unsigned long>(k));
  for (std::uint64_t i = 1; i <= k; ++i) {
    const mpz_class iz(static_cast<unsigned long>(i));
    sets.shifted.push_back(mod_reduce(shift - iz, mod).value());
    sets.strided.push_back(mod_reduce(-iz * kz, mod).value());
  }
  return sets;
}

unsigned collision_exponent(const mpz_class& bound, std::uint64_t m) {
  unsigned e = 0;
  mpz_class reach(static_cast<unsigned long>(m));
  while (reach < bound) {
    reach *= 4;
    ++e;
  }
  return e;
}

CollisionOutcome collision_search(const Modulus& mod, const ResidueInfo& info,
                                  const mpz_class& bound) {
  check_info(info);
  check_bound(mod, bound);
  const mpz_class m_inv = inverse_of_m(mod, info.m);

  const unsigned e = collision_exponent(bound, info.m);
  const std::uint64_t k = std::uint64_t{1} << e;
  const mpz_class kz(static_cast<unsigned long>(k));

  auto planned = build_eval_plan(mod, e, -kz);
  if (const auto* w = std::get_if<PlanWitness>(&planned)) return LuckyFactor{w->g};
  const auto& plan = std::get<EvalPlan>(planned);

  // H = X - m^{-1} r + 1.
  const mpz_class offset = m_inv * static_cast<unsigned long>(info.r);
  const LinearPoly h{mod_reduce(1 - offset, mod).value()};
  const auto values = eval_shifted_factorials(h, plan);

  const auto outer = find_noninvertible(mod, values);
  if (std::holds_alternative<AllInvertible>(outer)) return NoCollision{k};
  const std::uint64_t j = std::get<NonInvertible>(outer).index + 1;

  // H_k(-jk) = prod_{i=1..k} (-jk - m^{-1} r + i).
  std::vector<mpz_class> factors;
  factors.reserve(k);
  const mpz_class base = -kz * static_cast<unsigned long>(j) - offset;
  for (std::uint64_t i = 1; i <= k; ++i) {
    factors.push_back(mod_reduce(base + static_cast<unsigned long>(i), mod).value());
  }
  const auto inner = find_noninvertible(mod, factors);
  if (std::holds_alternative<AllInvertible>(inner)) {
    throw std::logic_error("noninvertible H_k value with all factors invertible");
  }
  const auto& hit = std::get<NonInvertible>(inner);
  return CompositeSplit{hit.g, hit.index + 1, j, k};
}

SearchOutcome find_factor_below(const Modulus& mod, const ResidueInfo& info, unsigned e) {
  check_info(info);
  const mpz_class& n = mod.value();
  const mpz_class mz(static_cast<unsigned long>(info.m));
  mpz_class bound;
  mpz_mul_2exp(bound.get_mpz_t(), mz.get_mpz_t(), 2 * e);
  check_bound(mod, bound);

  if (const mpz_class g = gcd_with(mz, n); g > 1) return LuckyFactor{g};

  // A prime below m in the class can only be r itself.
  if (info.r >= 2 && mpz_divisible_ui_p(n.get_mpz_t(), info.r) != 0 &&
      is_prime(mpz_class(static_cast<unsigned long>(info.r)))) {
    return FoundPrime{mpz_class(static_cast<unsigned long>(info.r))};
  }

  const auto outcome = collision_search(mod, info, bound);
  if (std::holds_alternative<NoCollision>(outcome)) return NoneBelow{bound};
  if (const auto* lucky = std::get_if<LuckyFactor>(&outcome)) {
    // Every window element is below 4^e in absolute value, so is g.
    mpz_class p = prime_in_class(lucky->g, info);
    check_class(p, info);
    return FoundPrime{p};
  }

  // -jk - m^{-1} r + i = 0 (mod p) gives m j k + r - m i = 0 (mod p), and
  // 0 < m j k + r - m i < B.
  const auto& split = std::get<CompositeSplit>(outcome);
  const mpz_class v = mz * static_cast<unsigned long>(split.j) * static_cast<unsigned long>(split.k) +
                      static_cast<unsigned long>(info.r) - mz * static_cast<unsigned long>(split.i);
  const mpz_class h = gcd_with(v, n);
  if (h == 1 || v <= 0) {
    throw ResiduePromiseViolation("collision does not correspond to a prime in the promised class");
  }
  mpz_class p = prime_in_class(h, info);
  check_class(p, info);
  return FoundPrime{p};
}

}  // namespace powfactor
