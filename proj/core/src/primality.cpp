#include "powfactor/primality.hpp"

#include <array>

namespace powfactor {
namespace {

constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool is_perfect_square(const mpz_class& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace

const mpz_class& deterministic_mr_limit() {
  static const mpz_class limit("3317044064679887385961981");
  return limit;
}

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class x;
  const mpz_class a = mpz_class(base) % n;
  if (a == 0) return true;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool strong_lucas_probable_prime(const mpz_class& n) {
  if (is_perfect_square(n)) return false;

  // Selfridge: first D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
  long dval = 5;
  for (;;) {
    const mpz_class dz(dval);
    const int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dz) != n) return false;
    dval = dval > 0 ? -(dval + 2) : -dval + 2;
  }
  const long p = 1;
  const mpz_class q = mpz_class(1 - dval) / 4;

  // n + 1 = d * 2^s with d odd.
  mpz_class d = n + 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  const auto mod = [&](mpz_class x) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return x;
  };
  const mpz_class dmod = mod(mpz_class(dval));
  const mpz_class inv2 = (n + 1) / 2;

  // Binary ladder over d computing U_d, V_d, Q^d.
  mpz_class u = 1;
  mpz_class v = p;
  mpz_class qk = mod(q);
  const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    u = mod(u * v);
    v = mod(v * v - 2 * qk);
    qk = mod(qk * qk);
    if (mpz_tstbit(d.get_mpz_t(), i) != 0) {
      const mpz_class u_next = mod((p * u + v) * inv2);
      const mpz_class v_next = mod((dmod * u + p * v) * inv2);
      u = u_next;
      v = v_next;
      qk = mod(qk * q);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod(v * v - 2 * qk);
    qk = mod(qk * qk);
    if (v == 0) return true;
  }
  return false;
}

std::optional<Certification> certify_prime(const mpz_class& n) {
  if (n < 2) return std::nullopt;
  for (unsigned long p : kBases) {
    if (n == p) return Certification::Deterministic;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return std::nullopt;
  }
  if (n < 43 * 43) return Certification::Deterministic;

  if (n < deterministic_mr_limit()) {
    for (unsigned long base : kBases) {
      if (!strong_probable_prime(n, base)) return std::nullopt;
    }
    return Certification::Deterministic;
  }
  if (!strong_probable_prime(n, 2) || !strong_lucas_probable_prime(n)) return std::nullopt;
  return Certification::Heuristic;
}

bool is_prime(const mpz_class& n) { return certify_prime(n).has_value(); }

}  // namespace powfactor
