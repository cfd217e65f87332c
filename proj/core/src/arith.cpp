#include "powfactor/arith.hpp"

#include <stdexcept>

#include "powfactor/counters.hpp"

namespace powfactor {
namespace {

constexpr std::uint64_t kSieveTableLimit = 1'000'000;

std::vector<std::uint32_t> sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit <= 2) return primes;
  std::vector<bool> composite(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> table = sieve(kSieveTableLimit);
  return table;
}

bool is_small_prime(std::uint64_t c) {
  if (c < 2) return false;
  if (c % 2 == 0) return c == 2;
  for (std::uint64_t d = 3; d <= c / d; d += 2) {
    if (c % d == 0) return false;
  }
  return true;
}

void check_same(const Residue& x, const Residue& y) {
  if (!x.modulus().same_as(y.modulus())) {
    throw std::logic_error("arithmetic between residues of different moduli");
  }
}

}  // namespace

Modulus::Modulus(mpz_class n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  n_ = std::make_shared<const mpz_class>(std::move(n));
}

Residue::Residue(const Modulus& mod, const mpz_class& canonical_value)
    : value_(canonical_value), mod_(mod) {
  if (value_ < 0 || value_ >= mod_.value()) {
    throw std::invalid_argument("residue value outside [0, N)");
  }
}

Residue operator+(const Residue& x, const Residue& y) {
  check_same(x, y);
  mpz_class s = x.value_ + y.value_;
  if (s >= x.mod_.value()) s -= x.mod_.value();
  return Residue(x.mod_, s);
}

Residue operator-(const Residue& x, const Residue& y) {
  check_same(x, y);
  mpz_class s = x.value_ - y.value_;
  if (s < 0) s += x.mod_.value();
  return Residue(x.mod_, s);
}

Residue operator*(const Residue& x, const Residue& y) {
  check_same(x, y);
  mpz_class out;
  mul_mod(out, x.value_, y.value_, x.mod_.value());
  return Residue(x.mod_, out);
}

Residue Residue::operator-() const {
  if (value_ == 0) return *this;
  return Residue(mod_, mod_.value() - value_);
}

bool operator==(const Residue& x, const Residue& y) {
  return x.mod_.same_as(y.mod_) && x.value_ == y.value_;
}

void mul_mod(mpz_class& out, const mpz_class& x, const mpz_class& y, const mpz_class& n) {
  mpz_mul(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
  note_mulmods();
}

mpz_class gcd_with(const mpz_class& x, const mpz_class& n) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  note_gcds();
  return g;
}

Residue mod_reduce(const mpz_class& x, const Modulus& mod) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), mod.value().get_mpz_t());
  return Residue(mod, r);
}

InverseOutcome try_invert(const Residue& x) {
  const mpz_class& n = x.modulus().value();
  mpz_class inv;
  note_gcds();
  if (mpz_invert(inv.get_mpz_t(), x.value().get_mpz_t(), n.get_mpz_t()) != 0) {
    return Inverse{Residue(x.modulus(), inv)};
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.value().get_mpz_t(), n.get_mpz_t());
  return Witness{g};
}

Residue mod_pow(const Residue& x, const mpz_class& exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  const mpz_class& n = x.modulus().value();
  mpz_class result = 1;
  mpz_class base = x.value();
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    mul_mod(result, result, result, n);
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) mul_mod(result, result, base, n);
  }
  return Residue(x.modulus(), result);
}

std::vector<std::uint32_t> primes_below(std::uint64_t limit) {
  if (limit <= kSieveTableLimit) {
    const auto& table = prime_table();
    std::vector<std::uint32_t> out;
    for (auto p : table) {
      if (p >= limit) break;
      out.push_back(p);
    }
    return out;
  }
  return sieve(limit);
}

TrialDivisionResult trial_division(const mpz_class& n, std::uint64_t limit) {
  if (n < 1) throw std::invalid_argument("trial_division expects a positive integer");
  if (limit < 2) throw std::invalid_argument("trial_division limit must be at least 2");
  TrialDivisionResult result{{}, n};
  for (std::uint32_t p : primes_below(limit)) {
    if (result.cofactor == 1) break;
    if (mpz_divisible_ui_p(result.cofactor.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(result.cofactor.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(result.cofactor.get_mpz_t(), result.cofactor.get_mpz_t(), p);
      ++e;
    }
    result.partial.emplace_back(mpz_class(p), e);
  }
  return result;
}

std::vector<PrimePower> factor_by_trial_division(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factor_by_trial_division expects a positive integer");
  std::vector<PrimePower> out;
  mpz_class rest = n;
  for (unsigned long d = 2; rest > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_class(d) * d > rest) {
      out.emplace_back(rest, 1);
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    out.emplace_back(mpz_class(d), e);
  }
  return out;
}

std::optional<std::uint64_t> trial_division_in_progression(const mpz_class& n,
                                                           std::uint64_t r,
                                                           std::uint64_t m,
                                                           std::uint64_t limit) {
  if (m < 2 || r >= m) throw std::invalid_argument("progression needs m >= 2 and 0 <= r < m");
  for (std::uint64_t c = r; c < limit; c += m) {
    if (c < 2) continue;
    if (mpz_divisible_ui_p(n.get_mpz_t(), c) == 0) continue;
    if (is_small_prime(c)) return c;
    if (limit - c <= m) break;
  }
  return std::nullopt;
}

PrimePowerRemoval remove_prime_power(const mpz_class& n, const mpz_class& p) {
  if (p < 2 || n == 0 || mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::invalid_argument("remove_prime_power: p does not divide n");
  }
  PrimePowerRemoval out{0, n};
  while (mpz_divisible_p(out.cofactor.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p.get_mpz_t());
    ++out.exponent;
  }
  return out;
}

}  // namespace powfactor
