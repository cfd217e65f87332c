#include "powfactor/batch.hpp"

#include <stdexcept>

#include "powfactor/counters.hpp"

namespace powfactor {

ProductTree::ProductTree(const Modulus& mod, std::span<const mpz_class> leaves) : mod_(mod) {
  if (leaves.empty()) throw std::invalid_argument("product tree needs at least one leaf");
  const mpz_class& n = mod_.value();
  levels_.emplace_back(leaves.begin(), leaves.end());
  while (levels_.back().size() > 1) {
    const auto& below = levels_.back();
    std::vector<mpz_class> level((below.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < below.size(); i += 2) {
      mul_mod(level[i / 2], below[i], below[i + 1], n);
    }
    if (below.size() % 2 == 1) level.back() = below.back();
    levels_.push_back(std::move(level));
  }
}

std::vector<mpz_class> ProductTree::leaf_inverses(const mpz_class& root_inverse) const {
  const mpz_class& n = mod_.value();
  std::vector<mpz_class> current{root_inverse};
  for (std::size_t level = levels_.size() - 1; level-- > 0;) {
    const auto& nodes = levels_[level];
    std::vector<mpz_class> next(nodes.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      const std::size_t left = 2 * i;
      if (left + 1 < nodes.size()) {
        mul_mod(next[left], current[i], nodes[left + 1], n);
        mul_mod(next[left + 1], current[i], nodes[left], n);
      } else {
        next[left] = current[i];
      }
    }
    current = std::move(next);
  }
  return current;
}

ProductTree build_product_tree(const Modulus& mod, std::span<const mpz_class> fs) {
  return ProductTree(mod, fs);
}

NonInvertible locate_noninvertible(const ProductTree& tree) {
  const mpz_class& n = tree.modulus().value();
  const auto& levels = tree.levels();
  std::size_t index = 0;
  for (std::size_t level = levels.size() - 1; level-- > 0;) {
    const std::size_t left = 2 * index;
    if (left + 1 >= levels[level].size()) {
      index = left;
      continue;
    }
    index = gcd_with(levels[level][left], n) > 1 ? left : left + 1;
  }
  return NonInvertible{index, gcd_with(levels.front()[index], n)};
}

InvertibilityOutcome find_noninvertible(const Modulus& mod, std::span<const mpz_class> fs) {
  const ProductTree tree(mod, fs);
  const mpz_class& n = mod.value();
  mpz_class inv;
  note_gcds();
  if (mpz_invert(inv.get_mpz_t(), tree.root().get_mpz_t(), n.get_mpz_t()) != 0) {
    return AllInvertible{inv};
  }
  return locate_noninvertible(tree);
}

BatchInverseOutcome batch_invert(const Modulus& mod, std::span<const mpz_class> fs) {
  const ProductTree tree(mod, fs);
  const mpz_class& n = mod.value();
  mpz_class inv;
  note_gcds();
  if (mpz_invert(inv.get_mpz_t(), tree.root().get_mpz_t(), n.get_mpz_t()) == 0) {
    return locate_noninvertible(tree);
  }
  return tree.leaf_inverses(inv);
}

}  // namespace powfactor
