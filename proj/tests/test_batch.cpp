#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "powfactor/batch.hpp"
#include "powfactor/counters.hpp"

using namespace powfactor;

namespace {

std::vector<mpz_class> zs(std::initializer_list<unsigned long> values) {
  std::vector<mpz_class> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("product tree roots") {
  CHECK(build_product_tree(Modulus(15), zs({2, 4, 7})).root() == 11);
  CHECK(build_product_tree(Modulus(15), zs({3})).root() == 3);
  CHECK(build_product_tree(Modulus(101), zs({10, 10, 10, 10})).root() == 1);
  CHECK_THROWS_AS(build_product_tree(Modulus(15), {}), std::invalid_argument);
}

TEST_CASE("product tree nodes are products of children, odd node promoted") {
  const Modulus mod(1009);
  const auto tree = build_product_tree(mod, zs({2, 3, 5, 7, 11}));
  const auto& levels = tree.levels();
  REQUIRE(levels.size() == 4);
  CHECK(levels[1] == zs({6, 35, 11}));
  CHECK(levels[2] == zs({210, 11}));
  CHECK(levels[3] == zs({2310 % 1009}));
}

TEST_CASE("find_noninvertible examples") {
  auto all = find_noninvertible(Modulus(15), zs({2, 4, 7}));
  REQUIRE(std::holds_alternative<AllInvertible>(all));
  CHECK(std::get<AllInvertible>(all).inverse_of_product == 11);

  auto w = find_noninvertible(Modulus(15), zs({2, 3, 4}));
  REQUIRE(std::holds_alternative<NonInvertible>(w));
  CHECK(std::get<NonInvertible>(w).index == 1);
  CHECK(std::get<NonInvertible>(w).g == 3);

  w = find_noninvertible(Modulus(77), zs({6, 11, 13, 22}));
  REQUIRE(std::holds_alternative<NonInvertible>(w));
  CHECK(std::get<NonInvertible>(w).index == 1);
  CHECK(std::get<NonInvertible>(w).g == 11);

  // A zero leaf yields g = N.
  w = find_noninvertible(Modulus(77), zs({2, 0}));
  REQUIRE(std::holds_alternative<NonInvertible>(w));
  CHECK(std::get<NonInvertible>(w).g == 77);
}

TEST_CASE("batch_invert examples") {
  auto r = batch_invert(Modulus(101), zs({2, 5}));
  REQUIRE(std::holds_alternative<std::vector<mpz_class>>(r));
  CHECK(std::get<std::vector<mpz_class>>(r) == zs({51, 81}));

  r = batch_invert(Modulus(15), zs({1}));
  CHECK(std::get<std::vector<mpz_class>>(r) == zs({1}));

  r = batch_invert(Modulus(15), zs({5, 2}));
  REQUIRE(std::holds_alternative<NonInvertible>(r));
  CHECK(std::get<NonInvertible>(r).index == 0);
  CHECK(std::get<NonInvertible>(r).g == 5);
}

TEST_CASE("find_noninvertible and batch_invert agree with a left-to-right scan") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 3000; ++t) {
    const std::uint64_t n = 2 + rng() % 3000;
    const Modulus mod{mpz_class(static_cast<unsigned long>(n))};
    std::vector<std::uint64_t> raw(1 + rng() % 40);
    for (auto& x : raw) x = rng() % n;
    std::vector<mpz_class> fs;
    for (auto x : raw) fs.emplace_back(static_cast<unsigned long>(x));

    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (oracle::gcd(raw[i], n) != 1) {
        first = i;
        break;
      }
    }

    const auto found = find_noninvertible(mod, fs);
    const auto inverted = batch_invert(mod, fs);
    if (!first) {
      REQUIRE(std::holds_alternative<AllInvertible>(found));
      std::uint64_t product = 1 % n;
      for (auto x : raw) product = oracle::mulmod(product, x, n);
      CHECK(std::get<AllInvertible>(found).inverse_of_product.get_ui() == *oracle::inverse(product, n));
      REQUIRE(std::holds_alternative<std::vector<mpz_class>>(inverted));
      const auto& inv = std::get<std::vector<mpz_class>>(inverted);
      for (std::size_t i = 0; i < raw.size(); ++i) {
        CHECK(oracle::mulmod(raw[i], inv[i].get_ui(), n) == 1 % n);
      }
    } else {
      const std::uint64_t g = oracle::gcd(raw[*first] == 0 ? n : raw[*first], n);
      REQUIRE(std::holds_alternative<NonInvertible>(found));
      CHECK(std::get<NonInvertible>(found).index == *first);
      CHECK(std::get<NonInvertible>(found).g.get_ui() == g);
      REQUIRE(std::holds_alternative<NonInvertible>(inverted));
      CHECK(std::get<NonInvertible>(inverted).index == *first);
    }
  }
}

TEST_CASE("descent uses O(log k) + 1 gcds") {
  const Modulus mod(1000003ul * 1009ul);
  for (std::size_t k : {1u, 2u, 7u, 64u, 1000u}) {
    std::vector<mpz_class> fs(k, mpz_class(2));
    fs.back() = 1009;
    CountScope scope;
    const auto r = find_noninvertible(mod, fs);
    REQUIRE(std::holds_alternative<NonInvertible>(r));
    CHECK(std::get<NonInvertible>(r).index == k - 1);
    std::uint64_t depth = 0;
    while ((std::size_t{1} << depth) < k) ++depth;
    CHECK(scope.counts().gcds <= depth + 2);
  }
}
