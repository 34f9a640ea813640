#pragma once

#include "pforge/matrix.hpp"

#include <optional>
#include <vector>

namespace pforge {

// Diagonalization d = l . a . r with l, r invertible and d diagonal with
// entries that are powers of p in ascending valuation (0 stands for p^k).
struct SmithResult {
  ZpkMatrix d, l, r;
  std::vector<int> diag_valuations;  // one per column of a, k for zero columns
};

SmithResult smith_form(const ZpkMatrix& a);

// Canonical row-span form over Z/p^k:
//  - h's nonzero rows are the unique Howell basis of the row span, sorted by
//    pivot column, pivots normalized to powers of p, entries above each pivot
//    reduced modulo the pivot; h has max(a.rows, basis_rows) rows, so extra
//    rows appear only when the basis needs more rows than the input has;
//  - u is square invertible with u . pad(a) = pad(h), both sides zero-padded
//    to u's size (u may be larger than h when intermediate rows were needed;
//    for typical inputs with a.rows >= basis_rows it is exactly u . a = h).
struct HowellResult {
  ZpkMatrix h, u;
  int basis_rows = 0;  // count of nonzero rows of h
};

HowellResult howell_form(const ZpkMatrix& a);

// Solutions of a . x = b as a coset particular + <kernel_basis>.
struct SolutionSet {
  std::optional<Vec> particular;
  std::vector<Vec> kernel_basis;
};

SolutionSet solve(const ZpkMatrix& a, const Vec& b);

// Generators of {x : a . x = 0}.
std::vector<Vec> kernel(const ZpkMatrix& a);

// Inverse when a is a unit of M(n, Z/p^k); nullopt when det(a) = 0 mod p.
std::optional<ZpkMatrix> invert(const ZpkMatrix& a);

// Valuation of a residue (spec'd operation; thin wrapper over RingSpec).
inline int valuation(const Int& x, const RingSpec& ring) { return ring.valuation(x); }

// True iff v lies in the row span of a.
bool in_row_span(const ZpkMatrix& a, const Vec& v);

// True iff the two matrices generate the same row span.
bool same_row_span(const ZpkMatrix& a, const ZpkMatrix& b);

}  // namespace pforge
