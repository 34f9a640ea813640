#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pforge {

using Int = boost::multiprecision::cpp_int;

inline Int mod_reduce(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int pow_int(Int base, int exp) {
  Int r = 1;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

// Largest v in [0, vmax] with p^v | x; returns vmax for x == 0.
inline int p_valuation(Int x, const Int& p, int vmax) {
  if (x == 0) return vmax;
  int v = 0;
  while (v < vmax && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Trial division; inputs here are small primes, so this is enough.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int64_t to_int64(const Int& x) { return static_cast<int64_t>(x); }

}  // namespace pforge
