#pragma once

#include "pforge/errors.hpp"
#include "pforge/ints.hpp"

namespace pforge {

// The local ring Z/p^k, p prime, k >= 1. Residues live in [0, p^k).
struct RingSpec {
  Int p;
  int k;
  Int modulus;  // p^k

  RingSpec() : p(2), k(1), modulus(2) {}

  RingSpec(Int p_, int k_) : p(std::move(p_)), k(k_) {
    if (k < 1) throw input_error("RingSpec: precision k must be >= 1");
    if (!is_prime(p)) throw input_error("RingSpec: p must be prime");
    modulus = pow_int(p, k);
  }

  Int reduce(const Int& x) const { return mod_reduce(x, modulus); }

  bool is_unit(const Int& x) const { return reduce(x) % p != 0; }

  // Largest v <= k with p^v | x; k for x == 0.
  int valuation(const Int& x) const { return p_valuation(reduce(x), p, k); }

  // Inverse of a unit via extended Euclid; throws not_unit otherwise.
  Int unit_inverse(const Int& x) const {
    Int a = reduce(x);
    if (a % p == 0) throw not_unit("unit_inverse: argument divisible by p");
    Int r0 = modulus, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int r2 = r0 - q * r1;
      Int s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    return reduce(s0);
  }

  RingSpec truncated(int j) const {
    if (j < 1 || j > k) throw input_error("RingSpec::truncated: need 1 <= j <= k");
    return RingSpec(p, j);
  }

  bool operator==(const RingSpec& o) const { return p == o.p && k == o.k; }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }
};

}  // namespace pforge
