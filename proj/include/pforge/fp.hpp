#pragma once

#include "pforge/matrix.hpp"

#include <cstdint>
#include <vector>

namespace pforge {

// Dense linear algebra modulo a small prime (p < 256). This is the fast path
// under the lift solver, the meataxe and the group-algebra machinery; exact
// Z/p^k work stays in ZpkMatrix.

using FpVec = std::vector<uint8_t>;

int64_t fp_inv(int64_t a, int64_t p);

struct FpMat {
  int rows = 0, cols = 0;
  int64_t p = 2;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(int64_t p_, int rows_, int cols_)
      : rows(rows_), cols(cols_), p(p_),
        a(static_cast<size_t>(rows_) * cols_, 0) {}

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMat identity(int64_t p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  FpMat mul(const FpMat& o) const;
  FpMat add(const FpMat& o) const;
  FpMat sub(const FpMat& o) const;
  FpMat scaled(int64_t c) const;
  FpMat transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const FpMat& o) const {
    return rows == o.rows && cols == o.cols && p == o.p && a == o.a;
  }
};

FpMat fp_from_zpk(const ZpkMatrix& m);   // entries reduced mod p
ZpkMatrix zpk_from_fp(const FpMat& m);   // lands in Z/p (k = 1)

FpVec fp_vec_mul_mat(const FpVec& x, const FpMat& m);
FpVec fp_vec_from_zpk(const Vec& x, const Int& p);

// Row-reduced (RREF) basis of a row space, maintained incrementally.
class FpRowBasis {
 public:
  FpRowBasis(int64_t p, int width) : p_(p), width_(width) {}

  // Fully reduces v; inserts the residue if nonzero. Returns true on insert.
  bool insert(FpVec v);
  FpVec reduce(FpVec v) const;
  bool contains(const FpVec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int64_t p_;
  int width_;
  std::vector<FpVec> rows_;   // sorted by pivot column, pivot entry 1
  std::vector<int> pivots_;
};

// {x (row) : x . m = 0}, as an RREF basis.
std::vector<FpVec> fp_row_nullspace(const FpMat& m);
int fp_rank(const FpMat& m);

// Closure of the seed rows under right multiplication by the generators.
FpRowBasis fp_spin(const std::vector<FpVec>& seeds,
                   const std::vector<FpMat>& gens, int64_t p, int width);

// Streaming Gaussian elimination for A x = b over F_p. Rows are folded into
// an RREF basis as they arrive; an infeasible row is remembered together
// with (optionally) the combination of input equations that certifies it.
class FpSystem {
 public:
  FpSystem(int64_t p, int n_unknowns, bool track_certificate = false);

  void add_equation(const FpVec& coeffs, uint8_t rhs);
  bool feasible() const { return feasible_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  long equations() const { return n_eq_; }
  int unknowns() const { return n_; }

  FpVec particular() const;            // free variables set to 0
  std::vector<FpVec> kernel() const;   // basis of the homogeneous solutions
  int kernel_dim() const { return n_ - rank(); }

  // Certificate y over the added equations: y.A = 0, y.b != 0.
  const FpVec& certificate() const { return certificate_; }

 private:
  int64_t p_;
  int n_;
  bool track_;
  bool feasible_ = true;
  long n_eq_ = 0;
  std::vector<FpVec> rows_;    // width n_ + 1 (coeffs | rhs), RREF
  std::vector<int> pivots_;    // pivot column per row, < n_
  std::vector<FpVec> combos_;  // provenance per row (when tracking)
  FpVec certificate_;
};

// Polynomials over F_p, coefficients ascending.
struct FpPoly {
  int64_t p = 2;
  std::vector<uint8_t> c;

  int deg() const;
  void trim();
  bool is_zero() const { return deg() < 0; }
  static FpPoly x(int64_t p);
};

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b);           // monic gcd
FpPoly fp_poly_powmod(const FpPoly& base, Int e, const FpPoly& m);
bool fp_poly_irreducible(const FpPoly& f);
// Monic irreducible factors with multiplicities.
std::vector<std::pair<FpPoly, int>> fp_poly_factor(const FpPoly& f);

// Characteristic polynomial over F_p via Hessenberg reduction.
FpPoly fp_charpoly(const FpMat& m);

}  // namespace pforge
