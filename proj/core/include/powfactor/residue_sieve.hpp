#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "powfactor/arith.hpp"

namespace powfactor {

/// Known residue class of the prime factors: every relevant prime p has
/// p mod m == r. Requires m >= 2, 0 <= r < m and, at use sites, gcd(N, m) = 1.
struct ResidueInfo {
  std::uint64_t m = 2;
  std::uint64_t r = 1;
};

struct FoundPrime {
  mpz_class p;
};
/// No prime p <= bound with p = r (mod m) divides N.
struct NoneBelow {
  mpz_class bound;
};
/// A divisor 1 < g < N found through an unexpected noninvertible element.
struct LuckyFactor {
  mpz_class g;
};

using SearchOutcome = std::variant<FoundPrime, NoneBelow, LuckyFactor>;

/// gcd(-j k - m^{-1} r + i, N) with the indices that produced it.
struct CompositeSplit {
  mpz_class g;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
};
struct NoCollision {
  std::uint64_t k = 0;
};

using CollisionOutcome = std::variant<CompositeSplit, NoCollision, LuckyFactor>;

struct CollisionSets {
  std::vector<mpz_class> shifted;  // m^{-1} r - n mod N, n = 1..k
  std::vector<mpz_class> strided;  // -n k mod N, n = 1..k
};

/// The two index sets whose collision modulo a prime factor reveals it.
/// Throws std::invalid_argument if m is not invertible mod N.
CollisionSets collision_sets(const Modulus& mod, const ResidueInfo& info, std::uint64_t k);

/// Smallest e with 4^e m >= bound, i.e. k = 2^e >= ceil(sqrt(bound / m)).
unsigned collision_exponent(const mpz_class& bound, std::uint64_t m);

/// Evaluates H_k(X) with H = X - m^{-1} r + 1 at -k, -2k, ..., -k^2 and looks
/// for a noninvertible value; smallest j, then smallest i, win.
///
/// Requires bound <= N / 5 and gcd(N, m) = 1 (std::invalid_argument otherwise).
CollisionOutcome collision_search(const Modulus& mod, const ResidueInfo& info,
                                  const mpz_class& bound);

/// A prime divisor p <= 4^e m of N with p = r (mod m), or a proof that none
/// exists.
///
/// Requires 4^e m <= N / 5 and that r is the residue mod m of every prime
/// divisor of N. Returns LuckyFactor when gcd(N, m) > 1.
SearchOutcome find_factor_below(const Modulus& mod, const ResidueInfo& info, unsigned e);

/// Thrown when a recovered prime does not lie in the promised class.
class ResiduePromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace powfactor
