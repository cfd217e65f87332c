#include "powfactor/shifted_eval.hpp"

#include <stdexcept>

#include "powfactor/batch.hpp"
#include "powfactor/counters.hpp"
#include "powfactor/poly.hpp"

namespace powfactor {
namespace {

mpz_class reduce(const mpz_class& x, const mpz_class& n) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Given samples F(i*beta), i = 0..d, of a polynomial of degree <= d, returns
// F(alpha + j*beta) for j = 0..d. `inv` holds the inverses of the window
// elements of (alpha, beta, d) in window_elements order.
std::vector<mpz_class> shift_samples(const mpz_class& n, std::span<const mpz_class> samples,
                                     const WindowCondition& w, std::span<const mpz_class> inv) {
  const std::uint64_t d = w.d;
  const mpz_class& inv_beta = inv[0];
  const auto inv_factorial_of = [&](std::span<mpz_class> out) {
    out[0] = 1;
    if (d >= 1) out[1] = 1;
    for (std::uint64_t s = 2; s <= d; ++s) mul_mod(out[s], out[s - 1], inv[s - 1], n);
  };
  std::vector<mpz_class> inv_fact(d + 1);
  inv_factorial_of(inv_fact);

  mpz_class beta_pow = 1;
  for (std::uint64_t s = 0; s < d; ++s) mul_mod(beta_pow, beta_pow, inv_beta, n);

  // Lagrange weights: F(i beta) / (beta^d i! (d-i)! (-1)^(d-i)).
  std::vector<mpz_class> weighted(d + 1);
  for (std::uint64_t i = 0; i <= d; ++i) {
    mpz_class& v = weighted[i];
    mul_mod(v, samples[i], inv_fact[i], n);
    mul_mod(v, v, inv_fact[d - i], n);
    mul_mod(v, v, beta_pow, n);
    if ((d - i) % 2 == 1 && v != 0) v = n - v;
  }

  // 1 / (alpha + t beta) for t = -d..d.
  const std::span<const mpz_class> inv_points = inv.subspan(d, 2 * d + 1);
  const poly::Coeffs conv = poly::multiply(weighted, inv_points, n);

  std::vector<mpz_class> points(2 * d + 1);
  for (std::uint64_t idx = 0; idx <= 2 * d; ++idx) {
    const mpz_class t = mpz_class(static_cast<unsigned long>(idx)) - static_cast<unsigned long>(d);
    points[idx] = reduce(w.alpha + t * w.beta, n);
  }

  // Window product P_j = prod_{t=j-d}^{j} (alpha + t beta), slid one step at a time.
  mpz_class window = 1;
  for (std::uint64_t idx = 0; idx <= d; ++idx) mul_mod(window, window, points[idx], n);

  std::vector<mpz_class> out(d + 1);
  for (std::uint64_t j = 0; j <= d; ++j) {
    mul_mod(out[j], window, conv[j + d], n);
    if (j < d) {
      mul_mod(window, window, points[j + 1 + d], n);
      mul_mod(window, window, inv_points[j], n);
    }
  }
  return out;
}

}  // namespace

std::vector<mpz_class> window_elements(const Modulus& mod, const WindowCondition& w) {
  if (w.d < 1) throw std::invalid_argument("window needs d >= 1");
  const mpz_class& n = mod.value();
  std::vector<mpz_class> out;
  out.reserve(3 * w.d + 1);
  out.push_back(reduce(w.beta, n));
  for (std::uint64_t s = 2; s <= w.d; ++s) {
    out.push_back(reduce(mpz_class(static_cast<unsigned long>(s)), n));
  }
  const mpz_class d(static_cast<unsigned long>(w.d));
  for (mpz_class t = -d; t <= d; ++t) out.push_back(reduce(w.alpha + t * w.beta, n));
  return out;
}

mpz_class window_product(const Modulus& mod, const WindowCondition& w) {
  const mpz_class& n = mod.value();
  mpz_class acc = 1;
  for (const auto& x : window_elements(mod, w)) mul_mod(acc, acc, x, n);
  return acc;
}

std::vector<WindowCondition> plan_windows(const Modulus& mod, unsigned e, const mpz_class& beta) {
  const mpz_class& n = mod.value();
  const mpz_class b = reduce(beta, n);
  std::vector<WindowCondition> windows;
  for (unsigned i = 0; i < e; ++i) {
    const std::uint64_t d = std::uint64_t{1} << i;
    const mpz_class dz(static_cast<unsigned long>(d));
    windows.push_back({reduce(dz, n), b, d});
    windows.push_back({reduce((dz + 1) * b, n), b, d});
  }
  return windows;
}

PlanOutcome build_eval_plan(const Modulus& mod, unsigned e, const mpz_class& beta) {
  if (e >= 63) throw std::invalid_argument("evaluation length 2^e too large");
  EvalPlan plan{mod, e, std::uint64_t{1} << e, reduce(beta, mod.value()), 1, 1, {}, {}};
  plan.windows = plan_windows(mod, e, beta);
  if (plan.windows.empty()) return plan;

  std::vector<mpz_class> elements;
  std::vector<std::size_t> sizes;
  for (const auto& w : plan.windows) {
    auto part = window_elements(mod, w);
    sizes.push_back(part.size());
    elements.insert(elements.end(), part.begin(), part.end());
  }

  const ProductTree tree(mod, elements);
  mpz_class inv;
  note_gcds();
  if (mpz_invert(inv.get_mpz_t(), tree.root().get_mpz_t(), mod.value().get_mpz_t()) == 0) {
    return PlanWitness{locate_noninvertible(tree).g};
  }
  plan.D = tree.root();
  plan.D_inv = inv;

  const std::vector<mpz_class> all = tree.leaf_inverses(inv);
  std::size_t offset = 0;
  for (std::size_t size : sizes) {
    plan.window_inverses.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(offset),
                                      all.begin() + static_cast<std::ptrdiff_t>(offset + size));
    offset += size;
  }
  return plan;
}

std::vector<mpz_class> eval_shifted_factorials(const LinearPoly& h, const EvalPlan& plan,
                                               const EvalHooks* hooks) {
  const mpz_class& n = plan.mod.value();
  const mpz_class c = reduce(h.c, n);

  const auto shift = [&](std::span<const mpz_class> samples, std::size_t window) {
    auto out = shift_samples(n, samples, plan.windows[window], plan.window_inverses[window]);
    if (hooks != nullptr && hooks->after_shift) hooks->after_shift(out);
    return out;
  };

  // Samples of H_d at 0, beta, ..., d beta; start with d = 1.
  std::vector<mpz_class> samples{c, reduce(plan.beta + c, n)};
  for (unsigned i = 0; i < plan.e; ++i) {
    const std::uint64_t d = std::uint64_t{1} << i;
    const std::size_t by_d = 2 * i;
    const std::size_t by_step = 2 * i + 1;

    // H_d at (d+1) beta .. (2d+1) beta.
    const auto upper = shift(samples, by_step);
    // G(X) = H_d(X + d) at 0 .. d beta, then at (d+1) beta .. (2d+1) beta.
    const auto shifted = shift(samples, by_d);
    const auto shifted_upper = shift(shifted, by_step);

    std::vector<mpz_class> next(2 * d + 1);
    for (std::uint64_t j = 0; j <= 2 * d; ++j) {
      const mpz_class& f = j <= d ? samples[j] : upper[j - d - 1];
      const mpz_class& g = j <= d ? shifted[j] : shifted_upper[j - d - 1];
      mul_mod(next[j], f, g, n);
    }
    samples = std::move(next);
  }
  return {samples.begin() + 1, samples.end()};
}

std::vector<mpz_class> naive_eval(const Modulus& mod, const LinearPoly& h, std::uint64_t k,
                                  std::span<const mpz_class> points) {
  const mpz_class& n = mod.value();
  std::vector<mpz_class> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    mpz_class acc = 1;
    for (std::uint64_t t = 0; t < k; ++t) {
      mul_mod(acc, acc, reduce(x + h.c + static_cast<unsigned long>(t), n), n);
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<mpz_class> subproduct_tree_eval(const Modulus& mod, const LinearPoly& h,
                                            std::uint64_t k, std::span<const mpz_class> points) {
  const mpz_class& n = mod.value();
  if (points.empty()) return {};
  if (k == 0) return std::vector<mpz_class>(points.size(), mpz_class(1));

  using poly::Coeffs;
  const auto build = [&](std::vector<Coeffs> leaves) {
    std::vector<std::vector<Coeffs>> levels{std::move(leaves)};
    while (levels.back().size() > 1) {
      const auto& below = levels.back();
      std::vector<Coeffs> level;
      for (std::size_t i = 0; i + 1 < below.size(); i += 2) {
        level.push_back(poly::multiply(below[i], below[i + 1], n));
      }
      if (below.size() % 2 == 1) level.push_back(below.back());
      levels.push_back(std::move(level));
    }
    return levels;
  };

  std::vector<Coeffs> factors;
  for (std::uint64_t t = 0; t < k; ++t) {
    factors.push_back({reduce(h.c + static_cast<unsigned long>(t), n), 1});
  }
  const Coeffs expanded = build(std::move(factors)).back().front();

  std::vector<Coeffs> linear;
  for (const auto& x : points) linear.push_back({reduce(-x, n), 1});
  const auto tree = build(std::move(linear));

  std::vector<Coeffs> rems{poly::remainder_monic(expanded, tree.back().front(), n)};
  for (std::size_t level = tree.size() - 1; level-- > 0;) {
    const auto& nodes = tree[level];
    std::vector<Coeffs> next(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      next[i] = poly::remainder_monic(rems[i / 2], nodes[i], n);
    }
    rems = std::move(next);
  }

  std::vector<mpz_class> out;
  out.reserve(points.size());
  for (const auto& r : rems) out.push_back(r.empty() ? mpz_class(0) : r.front());
  return out;
}

std::vector<mpz_class> progression_points(const Modulus& mod, const mpz_class& beta,
                                          std::uint64_t k) {
  const mpz_class& n = mod.value();
  std::vector<mpz_class> out;
  out.reserve(k);
  const mpz_class step = reduce(beta, n);
  mpz_class x = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    x += step;
    if (x >= n) x -= n;
    out.push_back(x);
  }
  return out;
}

}  // namespace powfactor
