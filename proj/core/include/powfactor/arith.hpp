#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace powfactor {

/// The ambient ring Z/NZ, N >= 2.
///
/// Copies share identity; two moduli built separately from the same N are
/// distinct, and mixing their residues is a logic error.
class Modulus {
 public:
  explicit Modulus(mpz_class n);

  const mpz_class& value() const { return *n_; }
  bool same_as(const Modulus& other) const { return n_ == other.n_; }

 private:
  std::shared_ptr<const mpz_class> n_;
};

/// An element of Z/NZ, stored as its canonical representative in [0, N).
class Residue {
 public:
  Residue(const Modulus& mod, const mpz_class& canonical_value);

  const mpz_class& value() const { return value_; }
  const Modulus& modulus() const { return mod_; }

  friend Residue operator+(const Residue& x, const Residue& y);
  friend Residue operator-(const Residue& x, const Residue& y);
  friend Residue operator*(const Residue& x, const Residue& y);
  Residue operator-() const;

  friend bool operator==(const Residue& x, const Residue& y);

 private:
  mpz_class value_;
  Modulus mod_;
};

struct Inverse {
  Residue value;
};

/// gcd(x, N) > 1; may equal N (e.g. for x = 0).
struct Witness {
  mpz_class g;
};

using InverseOutcome = std::variant<Inverse, Witness>;

using PrimePower = std::pair<mpz_class, unsigned>;

struct TrialDivisionResult {
  std::vector<PrimePower> partial;
  mpz_class cofactor;
};

Residue mod_reduce(const mpz_class& x, const Modulus& mod);

InverseOutcome try_invert(const Residue& x);

Residue mod_pow(const Residue& x, const mpz_class& exponent);

/// Removes every prime below `limit` with full multiplicity.
TrialDivisionResult trial_division(const mpz_class& n, std::uint64_t limit);

/// Complete factorization by trial division. Only for small inputs.
std::vector<PrimePower> factor_by_trial_division(const mpz_class& n);

/// Smallest prime p < limit with p = r (mod m) and p | n, scanning only the
/// candidates m*x + r.
std::optional<std::uint64_t> trial_division_in_progression(const mpz_class& n,
                                                           std::uint64_t r,
                                                           std::uint64_t m,
                                                           std::uint64_t limit);

struct PrimePowerRemoval {
  unsigned exponent;
  mpz_class cofactor;
};

/// Throws std::invalid_argument if p does not divide n.
PrimePowerRemoval remove_prime_power(const mpz_class& n, const mpz_class& p);

/// Primes below `limit`, ascending. Limits up to 10^6 are served from a
/// table built once.
std::vector<std::uint32_t> primes_below(std::uint64_t limit);

// Raw helpers on canonical values, used by the batch and evaluation code.
// Each one reports to the active CountScope.
void mul_mod(mpz_class& out, const mpz_class& x, const mpz_class& y, const mpz_class& n);
mpz_class gcd_with(const mpz_class& x, const mpz_class& n);

}  // namespace powfactor
