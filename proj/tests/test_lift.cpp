#include "doctest.h"

#include "pforge/lift.hpp"

#include <random>

using namespace pforge;

namespace {

Representation c4_rep(int k) {
  RingSpec ring(2, k);
  return make_rep({ZpkMatrix(ring, {{0, 1}, {-1, 0}})}, "c4");
}

Representation c3_rep(int k) {
  RingSpec ring(3, k);
  return make_rep({ZpkMatrix(ring, {{0, 1}, {-1, -1}})}, "c3");
}

Representation c5_unipotent() {
  RingSpec z5(5, 1);
  return make_rep({ZpkMatrix(z5, {{1, 1}, {0, 1}})}, "c5u");
}

// Independent oracle: enumerate all 5^4 candidates g(I + 5X) over Z/25 and
// test whether any has fifth power equal to the identity.
bool c5_unipotent_lifts_by_enumeration() {
  RingSpec z25(5, 2);
  ZpkMatrix g(z25, {{1, 1}, {0, 1}});
  for (long code = 0; code < 625; ++code) {
    long t = code;
    ZpkMatrix corr = ZpkMatrix::identity(z25, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        corr.at(a, b) = z25.reduce(corr.at(a, b) + 5 * Int(t % 5));
        t /= 5;
      }
    ZpkMatrix cand = g * corr;
    ZpkMatrix pw = cand;
    for (int i = 1; i < 5; ++i) pw = pw * cand;
    if (pw.is_identity()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("canonical preimages of the quarter-turn group have zero defect") {
  for (int k = 1; k <= 7; ++k) {
    Representation r = c4_rep(k);
    for (size_t g = 0; g < r.order(); ++g)
      for (size_t h = 0; h < r.order(); ++h)
        CHECK(lift_defect(r, static_cast<int>(g), static_cast<int>(h)).is_zero());
  }
}

TEST_CASE("lift_once: integer-entry images lift") {
  for (int k = 1; k <= 4; ++k) {
    LiftOutcome out = lift_once(c4_rep(k));
    REQUIRE(out.status == LiftStatus::Lifted);
    CHECK(out.table_verified);
  }
  LiftOutcome o3 = lift_once(c3_rep(1));
  REQUIRE(o3.status == LiftStatus::Lifted);
  CHECK(o3.table_verified);
}

TEST_CASE("lift_once: trivial representation lifts at any precision") {
  RingSpec z27(3, 3);
  Representation t = make_rep({ZpkMatrix::identity(z27, 2)}, "1");
  LiftOutcome out = lift_once(t);
  CHECK(out.status == LiftStatus::Lifted);
}

TEST_CASE("lifted representations reduce back to the original") {
  Representation r = c3_rep(2);
  LiftOutcome out = lift_once(r);
  REQUIRE(out.status == LiftStatus::Lifted);
  Representation up = lifted_representation(r, out);
  CHECK(up.ring().k == 3);
  CHECK(up.order() == r.order());
  for (size_t i = 0; i < r.order(); ++i)
    CHECK(up.group.element(static_cast<int>(i)).mod_reduced(2) ==
          r.group.element(static_cast<int>(i)));
}

TEST_CASE("unipotent order-5 image is obstructed mod 25, matching the oracle") {
  CHECK(!c5_unipotent_lifts_by_enumeration());
  LiftOutcome out = lift_once(c5_unipotent());
  REQUIRE(out.status == LiftStatus::Obstructed);
  CHECK(out.certificate_checked);
  CHECK(out.witness_g >= 0);
  CHECK(!out.cocycle_witness.is_zero());
}

TEST_CASE("defect satisfies the 2-cocycle identity under the adjoint action") {
  std::mt19937_64 rng(5);
  for (Representation r : {c3_rep(2), c4_rep(3), c5_unipotent()}) {
    int64_t p = to_int64(r.ring().p);
    const int n = static_cast<int>(r.order());
    for (int t = 0; t < 40; ++t) {
      int g = rng() % n, h = rng() % n, l = rng() % n;
      FpMat chl = lift_defect(r, h, l);
      FpMat G = fp_from_zpk(r.group.element(g));
      FpMat Gi = fp_from_zpk(r.group.element(r.group.inverse(g)));
      FpMat lhs = G.mul(chl).mul(Gi)
                      .sub(lift_defect(r, r.group.product(g, h), l))
                      .add(lift_defect(r, g, r.group.product(h, l)))
                      .sub(lift_defect(r, g, h));
      CHECK(lhs.is_zero());
      (void)p;
    }
  }
}

TEST_CASE("hull search: worked examples") {
  // The mod-2 image of the quarter turn is the swap, which lifts forever.
  Representation swap_rep = reduce_mod(c4_rep(3), 1);
  HullReport hr = hull_search(swap_rep, 5);
  CHECK(hr.reached_k == 5);
  CHECK(!hr.budget_exhausted);
  REQUIRE(!hr.witness_generators.empty());
  CHECK(hr.witness_generators[0].ring().k == 5);
  CHECK(hr.witness_generators[0].mod_reduced(1) ==
        swap_rep.group.generator_matrices()[0]);

  HullReport ob = hull_search(c5_unipotent(), 2);
  CHECK(ob.reached_k == 1);
  CHECK(ob.levels[0].obstructed == 1);

  RingSpec z3(3, 1);
  Representation triv = make_rep({ZpkMatrix::identity(z3, 1)}, "1");
  CHECK(hull_search(triv, 6).reached_k == 6);
}

TEST_CASE("hull search climbs odd-prime towers with nonzero defects") {
  HullReport hr = hull_search(c3_rep(1), 4);
  CHECK(hr.reached_k == 4);
  REQUIRE(!hr.witness_generators.empty());
  // Witness generators are honest order-3 matrices at the top precision.
  ZpkMatrix g = hr.witness_generators[0];
  CHECK((g * g * g).is_identity());
}

TEST_CASE("nocando probe: precondition and report") {
  CHECK_THROWS_AS(nocando_probe(3), input_error);
  NocandoReport rep = nocando_probe(5, 2);
  CHECK(rep.group_order == 480);
  CHECK(!rep.note.empty());
  // Whatever the verdict, certificates must be re-verified when obstructed.
  if (rep.first_lift.status == LiftStatus::Obstructed)
    CHECK(rep.first_lift.certificate_checked);
  CHECK(rep.hull.reached_k >= 1);
}

TEST_CASE("budget exhaustion is reported") {
  Caps tiny;
  tiny.branch_budget = 1;
  HullReport hr = hull_search(c3_rep(1), 6, tiny);
  CHECK(hr.budget_exhausted);
  CHECK(hr.reached_k < 6);
}
