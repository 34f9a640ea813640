#pragma once

#include "pforge/fp.hpp"
#include "pforge/rep.hpp"

#include <optional>

namespace pforge {

// Lifting a representation from Z/p^k to Z/p^{k+1}.
//
// Canonical entrywise preimages rho^(g) are multiplicative up to a defect
//   rho^(g) rho^(h) rho^(gh)^{-1} = I + p^k c(g,h),
// and corrected images (I + p^k X_g) rho^(g) form a group iff the F_p-linear
// system  X_{gh} - X_g - Ad_{g}(X_h) = c(g,h)  is solvable, with one block of
// unknowns X_g per group element. Imposing the equations for all pairs
// (g, s) with s a generator suffices; multiplicativity on the full table
// follows and is re-verified explicitly.

enum class LiftStatus { Lifted, Obstructed };

struct LiftOutcome {
  LiftStatus status = LiftStatus::Obstructed;
  // When Lifted: per-element images at precision k+1, full table verified.
  std::vector<ZpkMatrix> lifted_images;
  bool table_verified = false;
  // Dimension of the solution space of the homogeneous coboundary system.
  int correction_space_dim = 0;
  int cocycle_rank = 0;
  // When Obstructed: y with y.A = 0, y.b != 0 over the emitted equations,
  // re-checked by a second direct pass; plus the defect on the pair whose
  // equation the certificate weights.
  FpVec certificate;
  bool certificate_checked = false;
  int witness_g = -1, witness_h = -1;
  FpMat cocycle_witness;
};

LiftOutcome lift_once(const Representation& rep,
                      const Caps& caps = default_caps());

// The lifted group at precision k+1 (same multiplication table).
Representation lifted_representation(const Representation& rep,
                                     const LiftOutcome& out);

// Defect cocycle c(g,h) of the canonical preimages (entries mod p).
FpMat lift_defect(const Representation& rep, int g, int h);

struct HullLevelStat {
  int level = 0;          // lifting from this precision
  long attempts = 0;      // nodes expanded at this level
  long obstructed = 0;
  long children_truncated = 0;
};

struct HullReport {
  int start_k = 1;
  int target_k = 1;
  int reached_k = 1;
  long nodes_visited = 0;
  long budget = 0;
  bool budget_exhausted = false;
  std::vector<HullLevelStat> levels;
  // Generator images at the highest precision reached (witness tower top).
  std::vector<ZpkMatrix> witness_generators;
};

// Iterated lifting with backtracking; lift choices at each level are the
// coset representatives of the solution torsor modulo coboundaries.
HullReport hull_search(const Representation& rep_mod_p, int k_max,
                       const Caps& caps = default_caps());

struct NocandoReport {
  Int p;
  size_t group_order = 0;
  LiftOutcome first_lift;
  HullReport hull;
  std::string note;
};

// Tower probe for the natural 2-dimensional module of GL(2, p), p in {5, 7}.
NocandoReport nocando_probe(const Int& p, int k_max = 3,
                            const Caps& caps = default_caps());

}  // namespace pforge
