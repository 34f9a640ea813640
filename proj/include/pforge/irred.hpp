#pragma once

#include "pforge/fp.hpp"
#include "pforge/rep.hpp"

#include <optional>

namespace pforge {

// ---- dense polynomials over Z/p^k ------------------------------------------

struct ZpkPoly {
  RingSpec ring;
  std::vector<Int> c;  // ascending coefficients, reduced

  int deg() const;
  void trim();
  Int eval(const Int& x) const;
  bool operator==(const ZpkPoly& o) const { return ring == o.ring && c == o.c; }
};

ZpkPoly zpk_poly_mul(const ZpkPoly& a, const ZpkPoly& b);
ZpkPoly zpk_charpoly(const ZpkMatrix& a, const Caps& caps = default_caps());
FpPoly fp_poly_from_zpk(const ZpkPoly& f);

// Coprime lifting of the mod-p factorization into irreducible-power blocks.
// Inapplicable when the mod-p form is a power of a single irreducible.
struct HenselFactorization {
  bool applicable = false;
  std::vector<ZpkPoly> factors;  // product re-verified against the input
};

HenselFactorization hensel_factor(const ZpkPoly& f,
                                  const Caps& caps = default_caps());

// All roots in Z/p^k by enumeration (desk scale).
std::vector<Int> zpk_poly_roots(const ZpkPoly& f,
                                const Caps& caps = default_caps());

// ---- modules over F_p group algebras ---------------------------------------

// A right F_pH-module: dim coordinates, one action matrix per generator of
// the group. Row vectors act on the right.
struct FpModule {
  int64_t p = 2;
  int dim = 0;
  std::vector<FpMat> gen_action;
  const FiniteMatrixGroup* group = nullptr;
};

FpModule regular_module(const FiniteMatrixGroup& h, const Int& p);
FpModule rep_module(const Representation& rep);  // requires k = 1

// Action matrices for every group element (via the closure's BFS words).
std::vector<FpMat> module_element_actions(const FpModule& m);

FpMat fp_invert(const FpMat& m);  // throws not_unit when singular

struct ModuleSplit {
  FpModule sub, quot;
  std::vector<FpVec> sub_basis;
};

// Splits along an invariant row space (basis rows over F_p).
ModuleSplit split_module(const FpModule& m, const std::vector<FpVec>& basis);

// ---- irreducibility verdicts -----------------------------------------------

enum class IrredStatus { Irreducible, Reducible, IrreducibleUpToPrecision, Inconclusive };

struct InvariantSummand {
  ZpkMatrix basis;       // s x r, rows span the invariant free summand
  int rank = 0;
  ZpkMatrix complement;  // (r-s) x r; stacked (basis | complement) inverts
};

struct IrredVerdict {
  IrredStatus status = IrredStatus::Inconclusive;
  int precision = 0;                 // certified precision for the p-adic form
  std::vector<FpVec> witness;        // invariant subspace basis (mod-p form)
  std::optional<InvariantSummand> summand;
  bool found_rank1 = false;          // a rank-1 summand exists at precision k
  std::string trace;
  uint64_t seed = 0;
};

// Mod-p meataxe on a module: deterministic spinning below the enumeration
// cap, Norton's nullity-1 criterion with seeded randomness above it, plus a
// characteristic-polynomial path for abelian groups.
IrredVerdict meataxe_module(const FpModule& m, uint64_t seed = 0,
                            const Caps& caps = default_caps());

IrredVerdict meataxe_mod_p(const Representation& rep, uint64_t seed = 0,
                           const Caps& caps = default_caps());

// Composition factors of m (recursive chop; throws cap_exceeded when any
// constituent cannot be decided).
std::vector<FpModule> chop(const FpModule& m, uint64_t seed = 0,
                           const Caps& caps = default_caps());

// Precision-bounded invariant-free-summand search at the rep's own k:
// Reducible carries an exact summand; IrreducibleUpToPrecision(k) means no
// mod-p invariant subspace lifts to an invariant free summand mod p^k, each
// failed branch certified by an unsolvable linear system.
IrredVerdict padic_irreducible(const Representation& rep, uint64_t seed = 0,
                               const Caps& caps = default_caps());

// Eigenline/charpoly analysis for cyclic groups: coprime Hensel splits give
// summands, roots with unimodular eigenvectors give lines. Decisive only in
// the cases those analyses cover.
struct CyclicFastPath {
  bool applicable = false;
  ZpkPoly charpoly;
  bool hensel_split = false;
  std::vector<ZpkPoly> factors;
  std::vector<Int> roots;
  bool line_found = false;
  Vec line;  // a unimodular eigenvector when found
  std::optional<IrredStatus> decisive;
};

CyclicFastPath cyclic_fast_path(const Representation& rep,
                                const Caps& caps = default_caps());

}  // namespace pforge
