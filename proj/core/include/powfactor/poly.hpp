#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace powfactor::poly {

/// Coefficient vectors over Z/NZ, lowest degree first, entries in [0, N).
using Coeffs = std::vector<mpz_class>;

/// Product of two polynomials mod n by Kronecker substitution: both
/// operands are packed into single integers, multiplied once by GMP and
/// unpacked. Counts one mulmod per output coefficient.
Coeffs multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, const mpz_class& n);

/// Remainder of a modulo the monic polynomial b (schoolbook).
Coeffs remainder_monic(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       const mpz_class& n);

/// Horner evaluation.
mpz_class evaluate(std::span<const mpz_class> a, const mpz_class& x, const mpz_class& n);

}  // namespace powfactor::poly
