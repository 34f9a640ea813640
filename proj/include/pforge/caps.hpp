#pragma once

#include <cstdlib>
#include <string>

namespace pforge {

inline constexpr const char* kVersion = "0.1.0";

// Resource limits. PRUFER_FORGE_CAP=<n> overrides the four coarse-grained
// caps (closure, enumeration, solver, branch budget) in one go.
struct Caps {
  long closure_cap = 10000;        // matrix-group closure size
  long enum_cap = 1L << 20;        // torsion-point enumeration
  long solver_cap = 50000;         // unknowns in the lift solver
  long branch_budget = 10000;      // hull-search nodes
  long padic_budget = 20000;       // summand-search nodes
  long affine_cap = 1L << 16;      // affine permutation degree * order
  long subgroup_enum_cap = 100000; // abelian subgroup lattice size
  long radical_group_cap = 200;    // group order for regular-module work
  int poly_degree_cap = 8;
  long meataxe_enum_cap = 256;     // p^dim bound for exhaustive spinning
  long padic_subspace_cap = 4096;  // p^r bound for invariant-subspace enumeration
  int children_cap = 256;          // torsor cosets enumerated per node

  static Caps with_env() {
    Caps c;
    if (const char* s = std::getenv("PRUFER_FORGE_CAP")) {
      long v = std::atol(s);
      if (v > 0) {
        c.closure_cap = v;
        c.enum_cap = v;
        c.solver_cap = v;
        c.branch_budget = v;
      }
    }
    return c;
  }
};

inline const Caps& default_caps() {
  static const Caps caps = Caps::with_env();
  return caps;
}

}  // namespace pforge
