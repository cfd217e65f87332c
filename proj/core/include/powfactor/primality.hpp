#pragma once

#include <optional>

#include <gmpxx.h>

namespace powfactor {

enum class Certification {
  Deterministic,  // proven base set for Miller-Rabin, or trial division
  Heuristic,      // Baillie-PSW above the proven range
};

/// Miller-Rabin on the first 13 prime bases is a proof of primality below
/// this bound (3317044064679887385961981).
const mpz_class& deterministic_mr_limit();

/// Strong probable-prime test to base a; n odd, n > 2.
bool strong_probable_prime(const mpz_class& n, unsigned long base);

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_probable_prime(const mpz_class& n);

/// nullopt for composites (and n < 2); otherwise how the verdict was reached.
std::optional<Certification> certify_prime(const mpz_class& n);

bool is_prime(const mpz_class& n);

}  // namespace powfactor
