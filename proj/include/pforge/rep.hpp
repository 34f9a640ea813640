#pragma once

#include "pforge/group.hpp"

#include <string>

namespace pforge {

// A representation at precision k is identified with its image group inside
// GL(r, Z/p^k); the images are the elements themselves.
struct Representation {
  FiniteMatrixGroup group;
  std::string label;

  const RingSpec& ring() const { return group.ring(); }
  int degree() const { return group.degree(); }
  size_t order() const { return group.order(); }
};

Representation make_rep(const std::vector<ZpkMatrix>& generators,
                        std::string label, const Caps& caps = default_caps());

// Entrywise reduction into Z/p^j; the image group is re-closed from the
// reduced generators (it may be smaller than the source group).
Representation reduce_mod(const Representation& rep, int j,
                          const Caps& caps = default_caps());

struct KernelReport {
  Subgroup kernel;
  int j = 1;
  bool is_trivial = false;
  Int exponent = 1;
  bool is_elementary_abelian_2 = false;
};

// The subgroup {g : image of g is the identity mod p^j}.
KernelReport reduction_kernel(const Representation& rep, int j);

// p odd: the mod-p reduction kernel must be trivial; p = 2: it must be
// elementary abelian of exponent <= 2. A FAIL is diagnostic: it means the
// matrices do not arise as the truncation of a group acting compatibly at
// all precisions (or there is a bug), not that the dichotomy is wrong.
struct Theorem5Verdict {
  bool pass = false;
  KernelReport kernel;
  int counterexample = -1;  // element index witnessing the failure
  std::string detail;
};

Theorem5Verdict check_theorem5(const Representation& rep,
                               const Caps& caps = default_caps());

// Images replaced by inverse transposes (the action on the dual module).
Representation dual_rep(const Representation& rep,
                        const Caps& caps = default_caps());

// The two routes to the mod-p dual module commute: reducing the dual equals
// dualizing the reduction, generator by generator.
struct DualCoverReport {
  bool routes_agree = false;
  int generators_checked = 0;
};

DualCoverReport dual_cover_check(const Representation& rep,
                                 const Caps& caps = default_caps());

}  // namespace pforge
