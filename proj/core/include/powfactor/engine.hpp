#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "powfactor/counters.hpp"
#include "powfactor/primality.hpp"
#include "powfactor/residue_sieve.hpp"

namespace powfactor {

enum class Sign { Plus, Minus };

/// N = a^n + base_b^n or a^n - base_b^n with a > base_b >= 1 coprime.
struct SpecialForm {
  mpz_class a;
  mpz_class base_b;
  std::uint64_t n = 1;
  Sign sign = Sign::Minus;

  mpz_class value() const;
  /// Throws std::invalid_argument when the shape constraints fail.
  void validate() const;
  std::string to_string() const;
};

/// Raised when a self-check inside the engine fails: recomposition,
/// certification, or one of the structural bounds of the special-form
/// algorithm.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeFactor {
  mpz_class p;
  unsigned e = 1;
  Certification certification = Certification::Deterministic;
};

/// One step of the bound schedule (or a trial-division fallback).
struct ScheduleEvent {
  enum class Kind { Found, NoneBelow, Lucky, TrialDivision, PrimeCofactor };
  std::uint64_t m = 0;
  unsigned e = 0;
  mpz_class bound;
  Kind kind = Kind::NoneBelow;
  mpz_class value;  // the prime or divisor involved, 0 when none
};

std::string to_string(ScheduleEvent::Kind kind);

/// One divisor-set step of the special-form algorithm.
struct OrderStep {
  std::uint64_t d = 0;
  mpz_class g;                    // gcd((a/b)^d - 1, N_j)
  std::vector<mpz_class> primes;  // primes recovered from g
};

struct FactorStats {
  OpCounts ops;
  std::vector<ScheduleEvent> schedule;
  std::vector<OrderStep> order_steps;
};

struct Factorization {
  mpz_class input;
  std::vector<PrimeFactor> factors;  // ascending by p
  FactorStats stats;

  mpz_class recompose() const;
};

struct FactorOptions {
  std::function<void(const ScheduleEvent&)> on_event;
};

/// Sorted set {d : d | n} (Minus) or {2d : d | n} (Plus).
std::vector<std::uint64_t> divisor_set(std::uint64_t n, Sign sign);

/// gcd((a * base_b^{-1})^d - 1 mod N, N), in [1, N].
mpz_class order_gcd(const mpz_class& a, const mpz_class& base_b, std::uint64_t d,
                    const mpz_class& n);

/// Complete factorization of n given that every prime factor is r mod m.
///
/// Runs the bound schedule B = 4^e m, e = 1, 2, ...: each bound is searched
/// repeatedly, removing the found prime power, until it reports nothing
/// below B; then e grows. Stops once B^2 exceeds the cofactor. Inputs and
/// cofactors below 400 are finished by trial division. A prime outside the
/// promised class, or a composite cofactor with no class prime below its
/// square root, throws ResiduePromiseViolation.
Factorization factor_with_residue(const mpz_class& n, const ResidueInfo& info,
                                  const FactorOptions& options = {});

/// Factorization of a^n +- base_b^n through the order-gcd split over the
/// divisor set.
Factorization special_form_factor(const SpecialForm& form, const FactorOptions& options = {});

/// Generic integer: trial division below 400, then the residue schedule
/// with m = 2, r = 1.
Factorization factor(const mpz_class& n, const FactorOptions& options = {});

/// Integer with a caller-supplied residue promise for its prime factors.
Factorization factor(const mpz_class& n, const ResidueInfo& info,
                     const FactorOptions& options = {});

Factorization factor(const SpecialForm& form, const FactorOptions& options = {});

/// Bound below which every cofactor is finished by trial division.
inline constexpr std::uint64_t kTrialDivisionLimit = 400;

}  // namespace powfactor
