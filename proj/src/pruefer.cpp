#include "pforge/pruefer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pforge {

namespace {

PrueferCoord canonical_coord(const Int& p, Int num, int den_exp) {
  Int den = pow_int(p, den_exp);
  num = mod_reduce(num, den);
  while (den_exp > 0 && num % p == 0) {
    num /= p;
    den /= p;
    --den_exp;
  }
  if (num == 0) den_exp = 0;
  return {num, den_exp};
}

}  // namespace

bool PrueferVector::is_zero() const {
  for (const auto& c : coords)
    if (c.num != 0) return false;
  return true;
}

PrueferVector PrueferVector::zero(const Int& p, int rank) {
  PrueferVector v{p, std::vector<PrueferCoord>(rank)};
  return v;
}

PrueferVector PrueferVector::make(const Int& p,
                                  const std::vector<std::pair<Int, int>>& cs) {
  PrueferVector v{p, {}};
  v.coords.reserve(cs.size());
  for (const auto& [num, e] : cs) v.coords.push_back(canonical_coord(p, num, e));
  return v;
}

std::string PrueferVector::key() const {
  std::string s;
  for (const auto& c : coords) {
    s += c.num.str();
    s += '/';
    s += std::to_string(c.den_exp);
    s += ' ';
  }
  return s;
}

PrueferVector pruefer_add(const PrueferVector& x, const PrueferVector& y) {
  if (x.p != y.p || x.rank() != y.rank())
    throw input_error("pruefer_add: rank or prime mismatch");
  PrueferVector r{x.p, {}};
  r.coords.reserve(x.coords.size());
  for (int i = 0; i < x.rank(); ++i) {
    int e = std::max(x.coords[i].den_exp, y.coords[i].den_exp);
    Int num = x.coords[i].num * pow_int(x.p, e - x.coords[i].den_exp) +
              y.coords[i].num * pow_int(x.p, e - y.coords[i].den_exp);
    r.coords.push_back(canonical_coord(x.p, num, e));
  }
  return r;
}

PrueferVector pruefer_neg(const PrueferVector& x) {
  PrueferVector r{x.p, {}};
  for (const auto& c : x.coords)
    r.coords.push_back(canonical_coord(x.p, -c.num, c.den_exp));
  return r;
}

PrueferVector pruefer_scale(const Int& c, const PrueferVector& x) {
  PrueferVector r{x.p, {}};
  for (const auto& co : x.coords)
    r.coords.push_back(canonical_coord(x.p, c * co.num, co.den_exp));
  return r;
}

Int pruefer_order(const PrueferVector& x) {
  int e = 0;
  for (const auto& c : x.coords) e = std::max(e, c.den_exp);
  return pow_int(x.p, e);
}

Vec TorsionSubgroup::to_residues(const PrueferVector& x) const {
  if (x.p != ring.p || x.rank() != rank)
    throw input_error("torsion: vector outside this truncation");
  Vec v(rank);
  for (int i = 0; i < rank; ++i) {
    const auto& c = x.coords[i];
    if (c.den_exp > ring.k)
      throw input_error("torsion: element order exceeds the truncation");
    v[i] = ring.reduce(c.num * pow_int(ring.p, ring.k - c.den_exp));
  }
  return v;
}

PrueferVector TorsionSubgroup::from_residues(const Vec& v) const {
  if (static_cast<int>(v.size()) != rank)
    throw input_error("torsion: residue vector has wrong rank");
  PrueferVector x{ring.p, {}};
  for (int i = 0; i < rank; ++i)
    x.coords.push_back(canonical_coord(ring.p, ring.reduce(v[i]), ring.k));
  return x;
}

std::vector<PrueferVector> TorsionSubgroup::enumerate(long cap) const {
  if (cardinality > cap)
    throw cap_exceeded("torsion: enumeration exceeds the configured cap");
  long n = to_int64(cardinality);
  long pk = to_int64(ring.modulus);
  std::vector<PrueferVector> out;
  out.reserve(n);
  Vec v(rank, Int(0));
  for (long idx = 0; idx < n; ++idx) {
    long t = idx;
    for (int i = 0; i < rank; ++i) {
      v[i] = t % pk;
      t /= pk;
    }
    out.push_back(from_residues(v));
  }
  return out;
}

TorsionSubgroup torsion(int rank, const RingSpec& ring, const Caps& caps) {
  if (rank < 0) throw input_error("torsion: negative rank");
  TorsionSubgroup t{rank, ring, pow_int(ring.modulus, rank)};
  if (t.cardinality > caps.enum_cap)
    throw cap_exceeded("torsion: p^{kr} exceeds the enumeration cap");
  return t;
}

MultByPReport mult_by_p_check(int rank, const RingSpec& ring, const Caps& caps) {
  MultByPReport rep;
  TorsionSubgroup tk = torsion(rank, ring, caps);
  std::vector<PrueferVector> all = tk.enumerate(caps.enum_cap);

  std::set<std::string> image, kernel;
  for (const auto& x : all) {
    PrueferVector px = pruefer_scale(ring.p, x);
    image.insert(px.key());
    if (px.is_zero()) kernel.insert(x.key());
  }

  std::set<std::string> lower;
  if (ring.k == 1) {
    lower.insert(PrueferVector::zero(ring.p, rank).key());
  } else {
    TorsionSubgroup tk1 = torsion(rank, ring.truncated(ring.k - 1), caps);
    for (const auto& x : tk1.enumerate(caps.enum_cap)) lower.insert(x.key());
  }

  std::set<std::string> socle;
  for (const auto& x : torsion(rank, RingSpec(ring.p, 1), caps).enumerate(caps.enum_cap))
    socle.insert(x.key());

  rep.image_size = static_cast<long>(image.size());
  rep.kernel_size = static_cast<long>(kernel.size());
  rep.image_is_lower_torsion = (image == lower);
  rep.kernel_is_socle = (kernel == socle);
  return rep;
}

PrueferVector HullAction::apply(int gen, const PrueferVector& x) const {
  const auto& m = generators.at(gen);
  if (x.rank() != rank || x.p != p)
    throw input_error("hull action: vector mismatch");
  // Row vector of fractions times an integer matrix, mod 1.
  int e = 0;
  for (const auto& c : x.coords) e = std::max(e, c.den_exp);
  Int den = pow_int(p, e);
  PrueferVector r{p, {}};
  for (int j = 0; j < rank; ++j) {
    Int num = 0;
    for (int i = 0; i < rank; ++i)
      num += x.coords[i].num * pow_int(p, e - x.coords[i].den_exp) * m[i][j];
    r.coords.push_back(canonical_coord(p, num, e));
  }
  (void)den;
  return r;
}

bool HullAction::compatible_with_truncations(int k_max, const Caps& caps) const {
  for (int k = 1; k <= k_max; ++k) {
    RingSpec ring(p, k);
    TorsionSubgroup tk = torsion(rank, ring, caps);
    ZpkMatrix red(ring, rank, rank);
    for (size_t g = 0; g < generators.size(); ++g) {
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) red.at(i, j) = ring.reduce(generators[g][i][j]);
      for (const auto& x : tk.enumerate(caps.enum_cap)) {
        Vec via_matrix = vec_mul_mat(ring, tk.to_residues(x), red);
        Vec via_fractions = tk.to_residues(apply(static_cast<int>(g), x));
        if (via_matrix != via_fractions) return false;
      }
    }
  }
  return true;
}

HullAction divisible_hull_from_cover(const std::vector<std::vector<Vec>>& gen_mats,
                                     const Int& p, int rank, const Caps& caps) {
  if (!is_prime(p)) throw input_error("hull: p must be prime");
  HullAction h{p, rank, gen_mats};
  for (const auto& m : gen_mats) {
    if (static_cast<int>(m.size()) != rank)
      throw input_error("hull: generator has wrong shape");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != rank)
        throw input_error("hull: generator has wrong shape");
  }

  // The generators must close to a finite integer matrix group.
  std::map<std::string, int> seen;
  std::vector<std::vector<Vec>> elems;
  auto key_of = [rank](const std::vector<Vec>& m) {
    std::string s;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) { s += m[i][j].str(); s += ','; }
    return s;
  };
  std::vector<Vec> id(rank, Vec(rank, Int(0)));
  for (int i = 0; i < rank; ++i) id[i][i] = 1;
  elems.push_back(id);
  seen[key_of(id)] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gen_mats) {
      std::vector<Vec> prod(rank, Vec(rank, Int(0)));
      for (int i = 0; i < rank; ++i)
        for (int l = 0; l < rank; ++l)
          for (int j = 0; j < rank; ++j)
            prod[i][j] += elems[head][i][l] * g[l][j];
      std::string k = key_of(prod);
      if (!seen.count(k)) {
        if (static_cast<long>(elems.size()) >= caps.closure_cap)
          throw cap_exceeded("hull: integer closure exceeds the cap");
        seen[k] = static_cast<int>(elems.size());
        elems.push_back(std::move(prod));
      }
    }
  }
  return h;
}

}  // namespace pforge
