#pragma once

#include "pforge/caps.hpp"
#include "pforge/linalg.hpp"

#include <vector>

namespace pforge {

// One coordinate of an element of (Q_p/Z_p)^r: num / p^den_exp taken mod 1,
// kept reduced (0 <= num < p^den_exp, p does not divide num unless the
// coordinate is zero, in which case num = 0 and den_exp = 0).
struct PrueferCoord {
  Int num;
  int den_exp = 0;

  bool operator==(const PrueferCoord& o) const {
    return num == o.num && den_exp == o.den_exp;
  }
};

struct PrueferVector {
  Int p;
  std::vector<PrueferCoord> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool operator==(const PrueferVector& o) const {
    return p == o.p && coords == o.coords;
  }

  static PrueferVector zero(const Int& p, int rank);
  // Builds num/p^den_exp coordinates, canonicalizing as it goes.
  static PrueferVector make(const Int& p, const std::vector<std::pair<Int, int>>& cs);

  std::string key() const;
};

PrueferVector pruefer_add(const PrueferVector& x, const PrueferVector& y);
PrueferVector pruefer_neg(const PrueferVector& x);
PrueferVector pruefer_scale(const Int& c, const PrueferVector& x);

// Least p-power n with n.x = 0.
Int pruefer_order(const PrueferVector& x);

// The truncation M[p^k] together with the fixed identification with
// (Z/p^k)^r: a/p^m on coordinate i corresponds to the residue a.p^{k-m}.
struct TorsionSubgroup {
  int rank;
  RingSpec ring;          // exponent bound p^k
  Int cardinality;        // p^{k.rank}

  Vec to_residues(const PrueferVector& x) const;
  PrueferVector from_residues(const Vec& v) const;
  std::vector<PrueferVector> enumerate(long cap) const;
};

TorsionSubgroup torsion(int rank, const RingSpec& ring,
                        const Caps& caps = default_caps());

struct MultByPReport {
  bool image_is_lower_torsion = false;  // p.M[p^k] = M[p^{k-1}] exactly
  bool kernel_is_socle = false;         // ker(x -> p.x) on M[p^k] equals M[p]
  long image_size = 0;
  long kernel_size = 0;
  bool pass() const { return image_is_lower_torsion && kernel_is_socle; }
};

MultByPReport mult_by_p_check(int rank, const RingSpec& ring,
                              const Caps& caps = default_caps());

// Action of a group of integer matrices on (Q_p/Z_p)^r by fractional
// matrix action mod 1; the generators must close to a finite group.
struct HullAction {
  Int p;
  int rank;
  std::vector<std::vector<Vec>> generators;  // integer matrices, row-major

  PrueferVector apply(int gen, const PrueferVector& x) const;

  // The induced action on M[p^k] matches the matrix action mod p^k under
  // the fixed bijection, for every k = 1..k_max.
  bool compatible_with_truncations(int k_max,
                                   const Caps& caps = default_caps()) const;
};

HullAction divisible_hull_from_cover(const std::vector<std::vector<Vec>>& gen_mats,
                                     const Int& p, int rank,
                                     const Caps& caps = default_caps());

}  // namespace pforge
