#include "doctest.h"

#include "pforge/pruefer.hpp"

#include <random>
#include <set>

using namespace pforge;

namespace {

PrueferVector pv(const Int& p, std::vector<std::pair<Int, int>> cs) {
  return PrueferVector::make(p, cs);
}

}  // namespace

TEST_CASE("pruefer addition examples") {
  // (1/2, 0) + (1/2, 0) = 0
  auto a = pv(2, {{1, 1}, {0, 0}});
  CHECK(pruefer_add(a, a).is_zero());

  // (1/4, 1/2) + (1/4, 1/2) = (1/2, 0)
  auto b = pv(2, {{1, 2}, {1, 1}});
  CHECK(pruefer_add(b, b) == pv(2, {{1, 1}, {0, 0}}));

  // (1/3, 0) + (1/9, 0) = (4/9, 0)
  auto c = pv(3, {{1, 1}, {0, 0}});
  auto d = pv(3, {{1, 2}, {0, 0}});
  CHECK(pruefer_add(c, d) == pv(3, {{4, 2}, {0, 0}}));
}

TEST_CASE("pruefer order examples") {
  CHECK(pruefer_order(pv(2, {{0, 0}, {0, 0}})) == 1);
  CHECK(pruefer_order(pv(2, {{1, 2}, {1, 1}})) == 4);
  CHECK(pruefer_order(pv(2, {{1, 3}, {1, 1}})) == 8);
}

TEST_CASE("torsion truncations") {
  CHECK(torsion(2, RingSpec(3, 1)).enumerate(1 << 20).size() == 9);

  auto t = torsion(1, RingSpec(2, 3));
  auto elems = t.enumerate(1 << 20);
  CHECK(elems.size() == 8);
  std::set<std::string> keys;
  for (const auto& e : elems) {
    keys.insert(e.key());
    CHECK(pruefer_order(e) <= 8);
  }
  CHECK(keys.size() == 8);

  auto t22 = torsion(2, RingSpec(2, 2));
  auto e22 = t22.enumerate(1 << 20);
  CHECK(e22.size() == 16);
  for (const auto& e : e22) CHECK(pruefer_order(e) <= 4);
}

TEST_CASE("torsion bijection intertwines addition (exhaustive, small)") {
  for (const RingSpec& ring : {RingSpec(2, 2), RingSpec(3, 1)}) {
    auto t = torsion(2, ring);
    auto elems = t.enumerate(1 << 20);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        Vec sum_res = vec_add(ring, t.to_residues(x), t.to_residues(y));
        CHECK(t.from_residues(sum_res) == pruefer_add(x, y));
      }
  }
}

TEST_CASE("multiplication-by-p reports") {
  auto r1 = mult_by_p_check(1, RingSpec(2, 3));
  CHECK(r1.pass());
  CHECK(r1.image_size == 4);
  CHECK(r1.kernel_size == 2);

  auto r2 = mult_by_p_check(2, RingSpec(3, 2));
  CHECK(r2.pass());
  CHECK(r2.kernel_size == 9);

  auto r3 = mult_by_p_check(1, RingSpec(5, 1));
  CHECK(r3.pass());
  CHECK(r3.image_size == 1);
  CHECK(r3.kernel_size == 5);
}

TEST_CASE("abelian group laws on random elements") {
  std::mt19937_64 rng(7);
  for (const Int& p : {Int(2), Int(3), Int(5)}) {
    for (int t = 0; t < 40; ++t) {
      auto rand_pv = [&]() {
        std::vector<std::pair<Int, int>> cs;
        for (int i = 0; i < 3; ++i) {
          int e = static_cast<int>(rng() % 4);
          cs.push_back({Int(static_cast<long>(rng() % 16)), e});
        }
        return pv(p, cs);
      };
      auto x = rand_pv(), y = rand_pv(), z = rand_pv();
      CHECK(pruefer_add(x, y) == pruefer_add(y, x));
      CHECK(pruefer_add(pruefer_add(x, y), z) == pruefer_add(x, pruefer_add(y, z)));
      CHECK(pruefer_add(x, pruefer_neg(x)).is_zero());
      if (!x.is_zero())
        CHECK(pruefer_order(pruefer_scale(p, x)) * p == pruefer_order(x));
    }
  }
}

TEST_CASE("order drops by exactly p under multiplication by p") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    Int p = (t % 2 == 0) ? 2 : 3;
    auto x = pv(p, {{Int(static_cast<long>(rng() % 27)), static_cast<int>(rng() % 4)}});
    if (pruefer_order(x) == 1) continue;
    CHECK(pruefer_order(pruefer_scale(p, x)) == pruefer_order(x) / p);
  }
}

TEST_CASE("hull action from integer matrices") {
  // Quarter turn on rank 2 at p = 2: (1/2, 0) -> (0, 1/2).
  std::vector<Vec> rot = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  HullAction h = divisible_hull_from_cover({rot}, 2, 2);
  CHECK(h.apply(0, pv(2, {{1, 1}, {0, 0}})) == pv(2, {{0, 0}, {1, 1}}));

  // Identity generator fixes everything.
  std::vector<Vec> id = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  HullAction hi = divisible_hull_from_cover({id}, 3, 2);
  auto x = pv(3, {{1, 2}, {2, 1}});
  CHECK(hi.apply(0, x) == x);

  // Inversion on rank 1: 1/4 -> 3/4.
  std::vector<Vec> inv = {{Int(-1)}};
  HullAction hn = divisible_hull_from_cover({inv}, 2, 1);
  CHECK(hn.apply(0, pv(2, {{1, 2}})) == pv(2, {{3, 2}}));
}

TEST_CASE("hull action is compatible with every truncation level") {
  std::vector<Vec> rot = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  CHECK(divisible_hull_from_cover({rot}, 2, 2).compatible_with_truncations(4));
  std::vector<Vec> inv = {{Int(-1)}};
  CHECK(divisible_hull_from_cover({inv}, 2, 1).compatible_with_truncations(5));
  CHECK(divisible_hull_from_cover({inv}, 5, 1).compatible_with_truncations(2));
}

TEST_CASE("torsion points stay closed under addition and hull matrices") {
  RingSpec ring(2, 2);
  auto t = torsion(2, ring);
  auto elems = t.enumerate(1 << 20);
  std::set<std::string> keys;
  for (const auto& e : elems) keys.insert(e.key());
  std::vector<Vec> rot = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  HullAction h = divisible_hull_from_cover({rot}, 2, 2);
  for (const auto& x : elems) {
    for (const auto& y : elems) CHECK(keys.count(pruefer_add(x, y).key()) == 1);
    CHECK(keys.count(h.apply(0, x).key()) == 1);
  }
}

TEST_CASE("caps and bad input are rejected") {
  CHECK_THROWS_AS(torsion(40, RingSpec(2, 20)), cap_exceeded);
  std::vector<Vec> bad = {{Int(1), Int(0)}};  // ragged for rank 2
  CHECK_THROWS_AS(divisible_hull_from_cover({bad}, 2, 2), input_error);
}
