#include "powfactor/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "powfactor/arith.hpp"
#include "powfactor/counters.hpp"

namespace powfactor::poly {
namespace {

// Writes each coefficient into its own fixed-width slot of `slot_limbs`
// limbs. Coefficients are nonnegative and narrower than a slot.
void pack(mpz_class& out, std::span<const mpz_class> coeffs, std::size_t slot_limbs) {
  const std::size_t total = coeffs.size() * slot_limbs;
  mp_limb_t* limbs = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(limbs, limbs + total, mp_limb_t{0});
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::size_t used = mpz_size(coeffs[i].get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(coeffs[i].get_mpz_t());
    std::copy(src, src + used, limbs + i * slot_limbs);
  }
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
}

}  // namespace

Coeffs multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, const mpz_class& n) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t shorter = std::min(a.size(), b.size());
  // Each product coefficient is below shorter * n^2.
  const std::size_t bits = 2 * mpz_sizeinbase(n.get_mpz_t(), 2) +
                           mpz_sizeinbase(mpz_class(shorter).get_mpz_t(), 2) + 1;
  const std::size_t slot_limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  mpz_class pa;
  mpz_class pb;
  pack(pa, a, slot_limbs);
  pack(pb, b, slot_limbs);
  mpz_class product = pa * pb;

  Coeffs out(out_len);
  const std::size_t have = mpz_size(product.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(product.get_mpz_t());
  for (std::size_t i = 0; i < out_len; ++i) {
    const std::size_t begin = i * slot_limbs;
    if (begin >= have) break;
    const std::size_t count = std::min(slot_limbs, have - begin);
    mp_limb_t* dst = mpz_limbs_write(out[i].get_mpz_t(), static_cast<mp_size_t>(count));
    std::copy(limbs + begin, limbs + begin + count, dst);
    mpz_limbs_finish(out[i].get_mpz_t(), static_cast<mp_size_t>(count));
    mpz_mod(out[i].get_mpz_t(), out[i].get_mpz_t(), n.get_mpz_t());
  }
  note_mulmods(out_len);
  return out;
}

Coeffs remainder_monic(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       const mpz_class& n) {
  if (b.empty() || b.back() != 1) throw std::invalid_argument("divisor must be monic");
  const std::size_t db = b.size() - 1;
  Coeffs r(a.begin(), a.end());
  if (r.size() <= db) return r;
  mpz_class t;
  for (std::size_t top = r.size() - 1; top >= db; --top) {
    const mpz_class lead = r[top];
    if (lead != 0) {
      const std::size_t shift = top - db;
      for (std::size_t i = 0; i < db; ++i) {
        mul_mod(t, lead, b[i], n);
        r[shift + i] -= t;
        if (r[shift + i] < 0) r[shift + i] += n;
      }
    }
    r[top] = 0;
    if (top == db) break;
  }
  r.resize(db);
  return r;
}

mpz_class evaluate(std::span<const mpz_class> a, const mpz_class& x, const mpz_class& n) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    mul_mod(acc, acc, x, n);
    acc += a[i];
    if (acc >= n) acc -= n;
  }
  return acc;
}

}  // namespace powfactor::poly
