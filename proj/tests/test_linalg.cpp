#include "doctest.h"

#include "pforge/linalg.hpp"

#include <random>
#include <set>
#include <string>

using namespace pforge;

namespace {

std::string vec_key(const Vec& v) {
  std::string s;
  for (const Int& x : v) { s += x.str(); s += ','; }
  return s;
}

// Exhaustive row span: every Z/p^k combination of the rows.
std::set<std::string> enumerate_row_span(const ZpkMatrix& a) {
  const RingSpec& ring = a.ring();
  long pk = to_int64(ring.modulus);
  std::set<std::string> out;
  std::vector<long> coeff(a.rows(), 0);
  while (true) {
    Vec acc(a.cols(), Int(0));
    for (int i = 0; i < a.rows(); ++i)
      if (coeff[i] != 0)
        acc = vec_add(ring, acc, vec_scaled(ring, Int(coeff[i]), a.row(i)));
    out.insert(vec_key(acc));
    int pos = 0;
    while (pos < a.rows() && ++coeff[pos] == pk) coeff[pos++] = 0;
    if (pos == a.rows()) break;
    if (a.rows() == 0) break;
  }
  return out;
}

// Exhaustive solution set of a x = b.
std::set<std::string> enumerate_solutions(const ZpkMatrix& a, const Vec& b) {
  const RingSpec& ring = a.ring();
  long pk = to_int64(ring.modulus);
  std::set<std::string> out;
  std::vector<long> x(a.cols(), 0);
  while (true) {
    Vec xv(a.cols());
    for (int j = 0; j < a.cols(); ++j) xv[j] = x[j];
    if (mat_mul_vec(ring, a, xv) == b) out.insert(vec_key(xv));
    int pos = 0;
    while (pos < a.cols() && ++x[pos] == pk) x[pos++] = 0;
    if (pos == a.cols() || a.cols() == 0) break;
  }
  return out;
}

// Expand a SolutionSet into the explicit solution set it describes.
std::set<std::string> expand_solution_set(const RingSpec& ring, int n,
                                          const SolutionSet& s) {
  std::set<std::string> out;
  if (!s.particular) return out;
  long pk = to_int64(ring.modulus);
  std::vector<long> coeff(s.kernel_basis.size(), 0);
  while (true) {
    Vec acc = *s.particular;
    for (size_t i = 0; i < s.kernel_basis.size(); ++i)
      if (coeff[i] != 0)
        acc = vec_add(ring, acc, vec_scaled(ring, Int(coeff[i]), s.kernel_basis[i]));
    out.insert(vec_key(acc));
    if (s.kernel_basis.empty()) break;
    size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == pk) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  (void)n;
  return out;
}

ZpkMatrix random_matrix(const RingSpec& ring, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, to_int64(ring.modulus) - 1);
  ZpkMatrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

// a padded with zero rows to the transform's size.
ZpkMatrix padded_to(const ZpkMatrix& a, int rows) {
  ZpkMatrix out(a.ring(), rows, a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return out;
}

const std::vector<RingSpec>& small_rings() {
  static const std::vector<RingSpec> rings = {
      RingSpec(2, 1), RingSpec(2, 2), RingSpec(2, 3), RingSpec(2, 4),
      RingSpec(3, 1), RingSpec(3, 2), RingSpec(3, 3), RingSpec(5, 1),
      RingSpec(5, 2), RingSpec(7, 1)};
  return rings;
}

}  // namespace

TEST_CASE("ring basics") {
  CHECK_THROWS_AS(RingSpec(4, 2), input_error);
  CHECK_THROWS_AS(RingSpec(6, 1), input_error);
  CHECK_THROWS_AS(RingSpec(5, 0), input_error);
  RingSpec r(3, 3);
  CHECK(r.modulus == 27);
  CHECK(r.reduce(-1) == 26);
  CHECK(r.unit_inverse(2) == 14);  // 2*14 = 28 = 1 mod 27
}

TEST_CASE("valuation examples") {
  CHECK(valuation(8, RingSpec(2, 4)) == 3);
  CHECK(valuation(0, RingSpec(3, 3)) == 3);
  CHECK(valuation(10, RingSpec(5, 3)) == 1);
}

TEST_CASE("valuation is multiplicative below the precision cap") {
  std::mt19937_64 rng(11);
  for (const RingSpec& ring : small_rings()) {
    std::uniform_int_distribution<long> d(0, to_int64(ring.modulus) - 1);
    for (int t = 0; t < 50; ++t) {
      Int x = d(rng), y = d(rng);
      if (x * y >= ring.modulus) continue;
      int got = ring.valuation(ring.reduce(x * y));
      int expect = std::min(ring.k, ring.valuation(x) + ring.valuation(y));
      CHECK(got == expect);
    }
  }
}

TEST_CASE("howell form: identity and zero") {
  RingSpec z4(2, 2);
  ZpkMatrix id = ZpkMatrix::identity(z4, 2);
  HowellResult h = howell_form(id);
  CHECK(h.h == id);
  CHECK(h.u == id);

  RingSpec z9(3, 2);
  ZpkMatrix zero(z9, 2, 2);
  HowellResult hz = howell_form(zero);
  CHECK(hz.h == zero);
  CHECK(hz.u == ZpkMatrix::identity(z9, 2));
  CHECK(hz.basis_rows == 0);
}

TEST_CASE("howell form: span preserved for [[2,1],[0,2]] over Z/4") {
  RingSpec z4(2, 2);
  ZpkMatrix a(z4, {{2, 1}, {0, 2}});
  HowellResult h = howell_form(a);
  CHECK(enumerate_row_span(a) == enumerate_row_span(h.h));
}

TEST_CASE("howell transform is invertible and maps the padded input to h") {
  std::mt19937_64 rng(23);
  for (const RingSpec& ring : small_rings()) {
    for (int t = 0; t < 12; ++t) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      ZpkMatrix a = random_matrix(ring, rows, cols, rng);
      HowellResult h = howell_form(a);
      CHECK(invert(h.u).has_value());
      CHECK(h.u * padded_to(a, h.u.rows()) == padded_to(h.h, h.u.rows()));
    }
  }
}

TEST_CASE("howell form is idempotent") {
  std::mt19937_64 rng(37);
  for (const RingSpec& ring : small_rings()) {
    for (int t = 0; t < 10; ++t) {
      ZpkMatrix a = random_matrix(ring, 1 + rng() % 3, 1 + rng() % 3, rng);
      ZpkMatrix h = howell_form(a).h;
      CHECK(howell_form(h).h == h);
    }
  }
}

TEST_CASE("howell basis depends only on the row span") {
  std::mt19937_64 rng(41);
  for (const RingSpec& ring : small_rings()) {
    for (int t = 0; t < 8; ++t) {
      int n = 2 + static_cast<int>(rng() % 2);
      ZpkMatrix a = random_matrix(ring, n, n, rng);
      // Random invertible row transform.
      ZpkMatrix g(ring, 0, 0);
      do {
        g = random_matrix(ring, n, n, rng);
      } while (!invert(g).has_value());
      HowellResult ha = howell_form(a), hb = howell_form(g * a);
      REQUIRE(ha.basis_rows == hb.basis_rows);
      for (int i = 0; i < ha.basis_rows; ++i) CHECK(ha.h.row(i) == hb.h.row(i));
    }
  }
}

TEST_CASE("howell row-span preservation vs enumeration (random)") {
  std::mt19937_64 rng(53);
  int done = 0;
  for (const RingSpec& ring : small_rings()) {
    if (ring.modulus > 27) continue;
    for (int t = 0; t < 12; ++t) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      ZpkMatrix a = random_matrix(ring, rows, cols, rng);
      CHECK(enumerate_row_span(a) == enumerate_row_span(howell_form(a).h));
      ++done;
    }
  }
  CHECK(done >= 100);
}

TEST_CASE("solve: worked examples") {
  RingSpec z5(5, 1);
  SolutionSet s1 = solve(ZpkMatrix::identity(z5, 2), {Int(3), Int(1)});
  REQUIRE(s1.particular.has_value());
  CHECK(*s1.particular == Vec{Int(3), Int(1)});
  CHECK(s1.kernel_basis.empty());

  RingSpec z4(2, 2);
  ZpkMatrix two(z4, {{2}});
  SolutionSet s2 = solve(two, {Int(2)});
  REQUIRE(s2.particular.has_value());
  CHECK(expand_solution_set(z4, 1, s2) == enumerate_solutions(two, {Int(2)}));
  CHECK(enumerate_solutions(two, {Int(2)}) ==
        std::set<std::string>{"1,", "3,"});

  SolutionSet s3 = solve(two, {Int(1)});
  CHECK(!s3.particular.has_value());
}

TEST_CASE("solve matches exhaustive enumeration (>= 100 random instances)") {
  std::mt19937_64 rng(67);
  int instances = 0;
  for (const RingSpec& ring : small_rings()) {
    if (ring.modulus > 27) continue;
    for (int t = 0; t < 16; ++t) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      ZpkMatrix a = random_matrix(ring, rows, cols, rng);
      std::uniform_int_distribution<long> d(0, to_int64(ring.modulus) - 1);
      Vec b(rows);
      for (int i = 0; i < rows; ++i) b[i] = d(rng);
      // Half the time force solvability.
      if (t % 2 == 0) {
        Vec x(cols);
        for (int j = 0; j < cols; ++j) x[j] = d(rng);
        b = mat_mul_vec(ring, a, x);
      }
      CHECK(expand_solution_set(ring, cols, solve(a, b)) ==
            enumerate_solutions(a, b));
      ++instances;
    }
  }
  CHECK(instances >= 100);
}

TEST_CASE("kernel: worked examples") {
  RingSpec z8(2, 3);
  ZpkMatrix p_id(z8, {{2, 0}, {0, 2}});
  SolutionSet s = solve(p_id, {Int(0), Int(0)});
  CHECK(expand_solution_set(z8, 2, s).size() == 4);  // p^r elements

  RingSpec z2(2, 1);
  ZpkMatrix n(z2, {{0, 1}, {0, 0}});
  auto ker = kernel(n);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vec{Int(1), Int(0)});

  RingSpec z9(3, 2);
  CHECK(kernel(ZpkMatrix::identity(z9, 3)).empty());
}

TEST_CASE("invert: worked examples") {
  RingSpec z4(2, 2);
  ZpkMatrix rot(z4, {{0, 1}, {-1, 0}});
  auto inv = invert(rot);
  REQUIRE(inv.has_value());
  CHECK(*inv == ZpkMatrix(z4, {{0, 3}, {1, 0}}));
  CHECK((*inv * rot).is_identity());
  CHECK((rot * *inv).is_identity());

  CHECK(invert(ZpkMatrix::identity(z4, 3)).has_value());
  CHECK(!invert(ZpkMatrix(z4, {{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("invert round-trips on random units") {
  std::mt19937_64 rng(71);
  for (const RingSpec& ring : small_rings()) {
    for (int t = 0; t < 10; ++t) {
      int n = 1 + static_cast<int>(rng() % 3);
      ZpkMatrix a = random_matrix(ring, n, n, rng);
      auto inv = invert(a);
      if (!inv) continue;
      CHECK((a * *inv).is_identity());
      CHECK((*inv * a).is_identity());
    }
  }
}

TEST_CASE("smith form diagonalizes with invertible transforms") {
  std::mt19937_64 rng(83);
  for (const RingSpec& ring : small_rings()) {
    for (int t = 0; t < 10; ++t) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      ZpkMatrix a = random_matrix(ring, rows, cols, rng);
      SmithResult s = smith_form(a);
      CHECK(invert(s.l).has_value());
      CHECK(invert(s.r).has_value());
      CHECK(s.l * a * s.r == s.d);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          if (i != j) CHECK(s.d.at(i, j) == 0);
      // Ascending valuations down the diagonal.
      for (int j = 0; j + 1 < std::min(rows, cols); ++j)
        CHECK(s.diag_valuations[j] <= s.diag_valuations[j + 1]);
    }
  }
}

TEST_CASE("degenerate shapes are legal") {
  RingSpec z4(2, 2);
  ZpkMatrix empty_rows(z4, 0, 3);
  CHECK(howell_form(empty_rows).h.rows() == 0);
  ZpkMatrix empty_cols(z4, 3, 0);
  SolutionSet s = solve(empty_cols, {Int(0), Int(0), Int(0)});
  REQUIRE(s.particular.has_value());
  CHECK(s.particular->empty());
  CHECK(!solve(empty_cols, {Int(1), Int(0), Int(0)}).particular.has_value());
}

TEST_CASE("in_row_span / same_row_span") {
  RingSpec z4(2, 2);
  ZpkMatrix a(z4, {{2, 1}, {0, 2}});
  CHECK(in_row_span(a, {Int(2), Int(3)}));
  CHECK(!in_row_span(a, {Int(1), Int(0)}));
  CHECK(same_row_span(a, howell_form(a).h));
}
