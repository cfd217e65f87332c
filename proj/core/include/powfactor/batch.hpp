#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "powfactor/arith.hpp"

namespace powfactor {

/// Binary product tree over canonical residues mod N.
///
/// levels()[0] holds the leaves; each node at level L+1 is the product of
/// nodes 2i and 2i+1 at level L. On odd-length levels the last node is
/// promoted unchanged.
class ProductTree {
 public:
  ProductTree(const Modulus& mod, std::span<const mpz_class> leaves);

  const Modulus& modulus() const { return mod_; }
  const std::vector<std::vector<mpz_class>>& levels() const { return levels_; }
  const std::vector<mpz_class>& leaves() const { return levels_.front(); }
  const mpz_class& root() const { return levels_.back().front(); }

  /// Inverses of every leaf, given the inverse of the root.
  std::vector<mpz_class> leaf_inverses(const mpz_class& root_inverse) const;

 private:
  Modulus mod_;
  std::vector<std::vector<mpz_class>> levels_;
};

/// Throws std::invalid_argument on empty input.
ProductTree build_product_tree(const Modulus& mod, std::span<const mpz_class> fs);

struct AllInvertible {
  mpz_class inverse_of_product;
};

/// First (smallest-index) element sharing a factor with N, and that gcd.
/// `g` may equal N.
struct NonInvertible {
  std::size_t index;
  mpz_class g;
};

using InvertibilityOutcome = std::variant<AllInvertible, NonInvertible>;
using BatchInverseOutcome = std::variant<std::vector<mpz_class>, NonInvertible>;

/// One gcd at the root, then a binary descent costing one gcd per level.
InvertibilityOutcome find_noninvertible(const Modulus& mod, std::span<const mpz_class> fs);

/// Same descent, reusing an existing tree.
NonInvertible locate_noninvertible(const ProductTree& tree);

/// All inverses from a single inversion of the root plus back-substitution.
BatchInverseOutcome batch_invert(const Modulus& mod, std::span<const mpz_class> fs);

}  // namespace powfactor
