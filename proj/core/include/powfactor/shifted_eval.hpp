#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "powfactor/arith.hpp"

namespace powfactor {

/// The monic linear polynomial H(X) = X + c over Z/NZ.
struct LinearPoly {
  mpz_class c;
};

/// The element list beta, 2, ..., d, alpha - d*beta, ..., alpha + d*beta.
/// All of them must be units for a shift of a degree-d polynomial by alpha
/// along step beta.
struct WindowCondition {
  mpz_class alpha;
  mpz_class beta;
  std::uint64_t d = 1;
};

/// The 3d + 1 window elements in the order listed above, reduced mod N.
std::vector<mpz_class> window_elements(const Modulus& mod, const WindowCondition& w);

/// Product of the window elements mod N; a unit iff every element is.
mpz_class window_product(const Modulus& mod, const WindowCondition& w);

/// Windows whose joint invertibility licenses e doublings with step beta:
/// for i = 0..e-1, (2^i, beta, 2^i) followed by ((2^i + 1) beta, beta, 2^i).
std::vector<WindowCondition> plan_windows(const Modulus& mod, unsigned e, const mpz_class& beta);

/// Everything needed to evaluate H_k at beta, 2 beta, ..., k beta with
/// k = 2^e: D = product of all window products and its inverse, plus the
/// inverse of each window element.
struct EvalPlan {
  Modulus mod;
  unsigned e = 0;
  std::uint64_t k = 1;
  mpz_class beta;
  mpz_class D;
  mpz_class D_inv;
  std::vector<WindowCondition> windows;
  std::vector<std::vector<mpz_class>> window_inverses;
};

struct PlanWitness {
  mpz_class g;
};

using PlanOutcome = std::variant<EvalPlan, PlanWitness>;

/// Checks every window element for invertibility in one batched pass. A
/// noninvertible element yields its gcd with N instead of a plan.
PlanOutcome build_eval_plan(const Modulus& mod, unsigned e, const mpz_class& beta);

/// Test seam: called with the output of every shift step.
struct EvalHooks {
  std::function<void(std::vector<mpz_class>&)> after_shift;
};

/// [H_k(beta), H_k(2 beta), ..., H_k(k beta)] where
/// H_k(X) = H(X) H(X+1) ... H(X+k-1).
///
/// Runs e doubling rounds on the values of H_d at 0, beta, ..., d*beta,
/// using H_2d(X) = H_d(X) H_d(X + d). Each round shifts those samples
/// along the progression three times (by (d+1) beta, by d, and by
/// (d+1) beta again on the d-shifted samples); a shift is a Lagrange
/// interpolation whose inner sum is one polynomial product.
std::vector<mpz_class> eval_shifted_factorials(const LinearPoly& h, const EvalPlan& plan,
                                               const EvalHooks* hooks = nullptr);

/// Direct products H(x) H(x+1) ... H(x+k-1) for each point.
std::vector<mpz_class> naive_eval(const Modulus& mod, const LinearPoly& h, std::uint64_t k,
                                  std::span<const mpz_class> points);

/// Expands H_k explicitly and evaluates it with a subproduct remainder
/// tree. Independent of the shift route.
std::vector<mpz_class> subproduct_tree_eval(const Modulus& mod, const LinearPoly& h,
                                            std::uint64_t k, std::span<const mpz_class> points);

/// The progression beta, 2 beta, ..., k beta mod N.
std::vector<mpz_class> progression_points(const Modulus& mod, const mpz_class& beta,
                                          std::uint64_t k);

}  // namespace powfactor
