#include "doctest.h"

#include "pforge/group.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pforge;

namespace {

ZpkMatrix quarter_turn(const RingSpec& ring) {
  return ZpkMatrix(ring, {{0, 1}, {-1, 0}});
}

ZpkMatrix inversion(const RingSpec& ring) { return ZpkMatrix(ring, {{-1}}); }

}  // namespace

TEST_CASE("closure: worked examples") {
  RingSpec z4(2, 2);
  auto c4 = FiniteMatrixGroup::close({quarter_turn(z4)});
  CHECK(c4.order() == 4);

  auto trivial = FiniteMatrixGroup::close({ZpkMatrix::identity(z4, 2)});
  CHECK(trivial.order() == 1);

  RingSpec z8(2, 3);
  auto c2 = FiniteMatrixGroup::close({inversion(z8)});
  CHECK(c2.order() == 2);
}

TEST_CASE("closure rejects singular generators and respects the cap") {
  RingSpec z4(2, 2);
  CHECK_THROWS_AS(FiniteMatrixGroup::close({ZpkMatrix(z4, {{2, 0}, {0, 1}})}),
                  not_unit);
  Caps tight;
  tight.closure_cap = 3;
  CHECK_THROWS_AS(FiniteMatrixGroup::close({quarter_turn(z4)}, tight), cap_exceeded);
}

TEST_CASE("closure is generator-order independent as a set") {
  RingSpec z8(2, 3);
  ZpkMatrix a = quarter_turn(z8);
  ZpkMatrix b(z8, {{1, 0}, {0, -1}});
  auto g1 = FiniteMatrixGroup::close({a, b});
  auto g2 = FiniteMatrixGroup::close({b, a});
  REQUIRE(g1.order() == g2.order());
  std::set<std::string> k1, k2;
  for (const auto& m : g1.elements()) k1.insert(m.key());
  for (const auto& m : g2.elements()) k2.insert(m.key());
  CHECK(k1 == k2);
}

TEST_CASE("multiplication table is associative and has inverses") {
  RingSpec z8(2, 3);
  auto g = FiniteMatrixGroup::close({quarter_turn(z8), ZpkMatrix(z8, {{1, 0}, {0, -1}})});
  std::mt19937_64 rng(3);
  int n = static_cast<int>(g.order());
  for (int t = 0; t < 200; ++t) {
    int a = rng() % n, b = rng() % n, c = rng() % n;
    CHECK(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
  }
  for (int i = 0; i < n; ++i) {
    CHECK(g.product(i, g.inverse(i)) == 0);
    CHECK(g.product(g.inverse(i), i) == 0);
  }
}

TEST_CASE("wreath products: orders") {
  RingSpec z4(2, 2);
  auto c4 = FiniteMatrixGroup::close({quarter_turn(z4)});
  auto w2 = wreath_imprimitive(c4, 2);
  CHECK(w2.order() == 32);
  CHECK(w2.degree() == 4);

  auto w1 = wreath_imprimitive(c4, 1);
  CHECK(w1.order() == 4);
  CHECK(w1.degree() == 2);

  auto c2 = FiniteMatrixGroup::close({inversion(z4)});
  auto cw = wreath_imprimitive(c2, 2);
  CHECK(cw.order() == 8);
  CHECK(cw.degree() == 2);

  auto w3 = wreath_imprimitive(c4, 3);
  CHECK(w3.order() == 4 * 4 * 4 * 6);  // |base|^s . s!
}

TEST_CASE("direct sums") {
  RingSpec z4(2, 2);
  auto trivial1 = FiniteMatrixGroup::close({ZpkMatrix::identity(z4, 1)});
  CHECK(direct_sum(trivial1, trivial1).order() == 1);

  auto c2 = FiniteMatrixGroup::close({inversion(z4)});
  auto s22 = direct_sum(c2, c2);
  CHECK(s22.order() == 4);
  CHECK(s22.degree() == 2);

  auto c4 = FiniteMatrixGroup::close({quarter_turn(z4)});
  auto s44 = direct_sum(c4, c4);
  CHECK(s44.order() == 16);
  CHECK(s44.degree() == 4);
}

TEST_CASE("subgroups: generated closure and Lagrange") {
  RingSpec z4(2, 2);
  auto c4 = FiniteMatrixGroup::close({quarter_turn(z4)});

  Subgroup triv = subgroup_generated(c4, {0});
  CHECK(triv.order() == 1);

  Subgroup full = subgroup_generated(c4, {c4.generator_indices()});
  CHECK(full.order() == 4);

  int gen = c4.generator_indices()[0];
  Subgroup half = subgroup_generated(c4, {c4.product(gen, gen)});
  CHECK(half.order() == 2);
  CHECK(half.is_normal());

  auto w2 = wreath_imprimitive(c4, 2);
  for (size_t i = 0; i < w2.order(); ++i) {
    Subgroup s = subgroup_generated(w2, {static_cast<int>(i)});
    CHECK(w2.order() % s.order() == 0);
  }
}

TEST_CASE("element orders and abelianness") {
  RingSpec z4(2, 2);
  auto c4 = FiniteMatrixGroup::close({quarter_turn(z4)});
  CHECK(c4.element_order(c4.generator_indices()[0]) == 4);
  CHECK(c4.abelian());
  auto w2 = wreath_imprimitive(c4, 2);
  CHECK(!w2.abelian());
}
