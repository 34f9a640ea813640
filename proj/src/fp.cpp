#include "pforge/fp.hpp"

#include "pforge/errors.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace pforge {

namespace {

inline uint8_t norm(int64_t x, int64_t p) {
  int64_t r = x % p;
  if (r < 0) r += p;
  return static_cast<uint8_t>(r);
}

int64_t small_prime(const Int& p) {
  if (p >= 256) throw cap_exceeded("fp: prime too large for the dense mod-p path");
  return to_int64(p);
}

}  // namespace

int64_t fp_inv(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw not_unit("fp_inv: zero");
  int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(s0 -= q * s1, s1);
  }
  return ((s0 % p) + p) % p;
}

FpMat FpMat::mul(const FpMat& o) const {
  assert(cols == o.rows && p == o.p);
  FpMat r(p, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int l = 0; l < cols; ++l) {
      int64_t x = at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = norm(r.at(i, j) + x * o.at(l, j), p);
    }
  return r;
}

FpMat FpMat::add(const FpMat& o) const {
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = norm(a[i] + o.a[i], p);
  return r;
}

FpMat FpMat::sub(const FpMat& o) const {
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = norm(int64_t(a[i]) - o.a[i], p);
  return r;
}

FpMat FpMat::scaled(int64_t c) const {
  FpMat r(p, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = norm(c * a[i], p);
  return r;
}

FpMat FpMat::transpose() const {
  FpMat r(p, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool FpMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool FpMat::is_zero() const {
  for (uint8_t x : a)
    if (x) return false;
  return true;
}

FpMat fp_from_zpk(const ZpkMatrix& m) {
  int64_t p = small_prime(m.ring().p);
  FpMat r(p, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r.at(i, j) = static_cast<uint8_t>(to_int64(m.at(i, j) % p));
  return r;
}

ZpkMatrix zpk_from_fp(const FpMat& m) {
  ZpkMatrix r(RingSpec(m.p, 1), m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
  return r;
}

FpVec fp_vec_mul_mat(const FpVec& x, const FpMat& m) {
  assert(static_cast<int>(x.size()) == m.rows);
  FpVec r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    int64_t c = x[i];
    if (c == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] = norm(r[j] + c * m.at(i, j), m.p);
  }
  return r;
}

FpVec fp_vec_from_zpk(const Vec& x, const Int& p) {
  int64_t pp = small_prime(p);
  FpVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    r[i] = static_cast<uint8_t>(to_int64(x[i] % pp));
  return r;
}

FpVec FpRowBasis::reduce(FpVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivots_[i];
    if (v[c] == 0) continue;
    int64_t f = v[c];
    for (int j = 0; j < width_; ++j)
      v[j] = norm(int64_t(v[j]) - f * rows_[i][j], p_);
  }
  return v;
}

bool FpRowBasis::contains(const FpVec& v) const {
  FpVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

bool FpRowBasis::insert(FpVec v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j]) { piv = j; break; }
  if (piv < 0) return false;
  int64_t inv = fp_inv(v[piv], p_);
  for (int j = 0; j < width_; ++j) v[j] = norm(inv * v[j], p_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    int64_t f = rows_[i][piv];
    if (f == 0) continue;
    for (int j = 0; j < width_; ++j)
      rows_[i][j] = norm(int64_t(rows_[i][j]) - f * v[j], p_);
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

std::vector<FpVec> fp_row_nullspace(const FpMat& m) {
  // Row nullspace of m = solutions x of the transposed column system.
  FpMat t = m.transpose();
  FpRowBasis rref(m.p, t.cols);
  for (int i = 0; i < t.rows; ++i) {
    FpVec row(t.cols);
    for (int j = 0; j < t.cols; ++j) row[j] = t.at(i, j);
    rref.insert(std::move(row));
  }
  std::vector<bool> is_pivot(t.cols, false);
  for (int c : rref.pivots()) is_pivot[c] = true;
  std::vector<FpVec> out;
  for (int f = 0; f < t.cols; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(t.cols, 0);
    v[f] = 1;
    for (int i = 0; i < rref.dim(); ++i)
      v[rref.pivots()[i]] = norm(-int64_t(rref.rows()[i][f]), m.p);
    out.push_back(std::move(v));
  }
  return out;
}

int fp_rank(const FpMat& m) {
  FpRowBasis b(m.p, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    FpVec row(m.cols);
    for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    b.insert(std::move(row));
  }
  return b.dim();
}

FpRowBasis fp_spin(const std::vector<FpVec>& seeds,
                   const std::vector<FpMat>& gens, int64_t p, int width) {
  FpRowBasis basis(p, width);
  for (const FpVec& s : seeds) basis.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FpVec> snapshot = basis.rows();
    for (const FpVec& v : snapshot)
      for (const FpMat& g : gens)
        if (basis.insert(fp_vec_mul_mat(v, g))) grew = true;
  }
  return basis;
}

FpSystem::FpSystem(int64_t p, int n_unknowns, bool track_certificate)
    : p_(p), n_(n_unknowns), track_(track_certificate) {}

void FpSystem::add_equation(const FpVec& coeffs, uint8_t rhs) {
  assert(static_cast<int>(coeffs.size()) == n_);
  long idx = n_eq_++;
  if (!feasible_) return;  // first certificate wins

  FpVec row(coeffs);
  row.push_back(norm(rhs, p_));
  FpVec combo;
  if (track_) {
    combo.assign(idx + 1, 0);
    combo[idx] = 1;
  }

  auto axpy = [&](FpVec& dst, const FpVec& src, int64_t f) {
    if (dst.size() < src.size()) dst.resize(src.size(), 0);
    for (size_t j = 0; j < src.size(); ++j)
      dst[j] = norm(int64_t(dst[j]) - f * src[j], p_);
  };

  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivots_[i];
    if (row[c] == 0) continue;
    int64_t f = row[c];
    for (int j = 0; j <= n_; ++j)
      row[j] = norm(int64_t(row[j]) - f * rows_[i][j], p_);
    if (track_) axpy(combo, combos_[i], f);
  }

  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (row[j]) { piv = j; break; }

  if (piv < 0) {
    if (row[n_] != 0) {
      feasible_ = false;
      if (track_) {
        combo.resize(n_eq_, 0);
        certificate_ = std::move(combo);
      }
    }
    return;
  }

  int64_t inv = fp_inv(row[piv], p_);
  for (int j = 0; j <= n_; ++j) row[j] = norm(inv * row[j], p_);
  if (track_)
    for (size_t j = 0; j < combo.size(); ++j) combo[j] = norm(inv * combo[j], p_);

  for (size_t i = 0; i < rows_.size(); ++i) {
    int64_t f = rows_[i][piv];
    if (f == 0) continue;
    for (int j = 0; j <= n_; ++j)
      rows_[i][j] = norm(int64_t(rows_[i][j]) - f * row[j], p_);
    if (track_) axpy(combos_[i], combo, f);
  }

  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, piv);
  if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
}

FpVec FpSystem::particular() const {
  assert(feasible_);
  FpVec x(n_, 0);
  for (size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = rows_[i][n_];
  return x;
}

std::vector<FpVec> FpSystem::kernel() const {
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivots_) is_pivot[c] = true;
  std::vector<FpVec> out;
  for (int f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(n_, 0);
    v[f] = 1;
    for (size_t i = 0; i < rows_.size(); ++i)
      v[pivots_[i]] = norm(-int64_t(rows_[i][f]), p_);
    out.push_back(std::move(v));
  }
  return out;
}

// ---- polynomials -----------------------------------------------------------

int FpPoly::deg() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i]) return i;
  return -1;
}

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::x(int64_t p) { return FpPoly{p, {0, 1}}; }

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
  FpPoly r{a.p, FpVec(a.deg() + b.deg() + 1, 0)};
  for (int i = 0; i <= a.deg(); ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j <= b.deg(); ++j)
      r.c[i + j] = norm(r.c[i + j] + int64_t(a.c[i]) * b.c[j], a.p);
  }
  return r;
}

FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& m) {
  FpPoly r = a;
  r.trim();
  int dm = m.deg();
  assert(dm >= 0);
  int64_t lead_inv = fp_inv(m.c[dm], m.p);
  while (r.deg() >= dm) {
    int dr = r.deg();
    int64_t f = norm(int64_t(r.c[dr]) * lead_inv, m.p);
    for (int j = 0; j <= dm; ++j)
      r.c[dr - dm + j] = norm(int64_t(r.c[dr - dm + j]) - f * m.c[j], m.p);
    r.trim();
  }
  return r;
}

static FpPoly fp_poly_monic(FpPoly a) {
  a.trim();
  if (a.is_zero()) return a;
  int64_t inv = fp_inv(a.c[a.deg()], a.p);
  for (auto& x : a.c) x = norm(int64_t(x) * inv, a.p);
  return a;
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    FpPoly r = fp_poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_poly_monic(a);
}

FpPoly fp_poly_powmod(const FpPoly& base, Int e, const FpPoly& m) {
  FpPoly r{base.p, {1}};
  FpPoly b = fp_poly_mod(base, m);
  while (e > 0) {
    if ((e & 1) != 0) r = fp_poly_mod(fp_poly_mul(r, b), m);
    b = fp_poly_mod(fp_poly_mul(b, b), m);
    e >>= 1;
  }
  return r;
}

static FpPoly fp_poly_div_exact(const FpPoly& a, const FpPoly& d) {
  FpPoly r = a, q{a.p, FpVec(std::max(0, a.deg() - d.deg() + 1), 0)};
  int dd = d.deg();
  int64_t lead_inv = fp_inv(d.c[dd], d.p);
  while (r.deg() >= dd) {
    int dr = r.deg();
    int64_t f = norm(int64_t(r.c[dr]) * lead_inv, a.p);
    q.c[dr - dd] = static_cast<uint8_t>(f);
    for (int j = 0; j <= dd; ++j)
      r.c[dr - dd + j] = norm(int64_t(r.c[dr - dd + j]) - f * d.c[j], a.p);
    r.trim();
  }
  assert(r.is_zero());
  return q;
}

static FpPoly fp_poly_derivative(const FpPoly& a) {
  FpPoly d{a.p, {}};
  for (int i = 1; i <= a.deg(); ++i)
    d.c.push_back(norm(int64_t(a.c[i]) * i, a.p));
  d.trim();
  return d;
}

bool fp_poly_irreducible(const FpPoly& f_in) {
  FpPoly f = fp_poly_monic(f_in);
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FpPoly x = FpPoly::x(f.p);
  // x^{p^n} == x mod f, and gcd(x^{p^{n/q}} - x, f) = 1 for primes q | n.
  FpPoly xpn = fp_poly_powmod(x, pow_int(Int(f.p), n), f);
  FpPoly diff = xpn;
  diff.c.resize(std::max<size_t>(diff.c.size(), 2), 0);
  diff.c[1] = norm(int64_t(diff.c[1]) - 1, f.p);
  diff.trim();
  if (!diff.is_zero()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(Int(q))) continue;
    FpPoly t = fp_poly_powmod(x, pow_int(Int(f.p), n / q), f);
    t.c.resize(std::max<size_t>(t.c.size(), 2), 0);
    t.c[1] = norm(int64_t(t.c[1]) - 1, f.p);
    t.trim();
    if (fp_poly_gcd(t, f).deg() != 0) return false;
  }
  return true;
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus), deterministic seeded retries.
void fp_edf(const FpPoly& h, int d, std::mt19937_64& rng,
            std::vector<FpPoly>& out) {
  if (h.deg() == d) {
    out.push_back(fp_poly_monic(h));
    return;
  }
  const int64_t p = h.p;
  for (int attempt = 0; attempt < 200; ++attempt) {
    FpPoly t{p, FpVec(h.deg(), 0)};
    for (auto& c : t.c) c = static_cast<uint8_t>(rng() % p);
    t.trim();
    if (t.deg() < 1) continue;
    FpPoly u;
    if (p == 2) {
      u = FpPoly{p, {}};
      FpPoly acc = fp_poly_mod(t, h);
      for (int i = 0; i < d; ++i) {
        if (u.c.size() < acc.c.size()) u.c.resize(acc.c.size(), 0);
        for (size_t j = 0; j < acc.c.size(); ++j)
          u.c[j] = norm(u.c[j] + acc.c[j], p);
        acc = fp_poly_mod(fp_poly_mul(acc, acc), h);
      }
      u.trim();
    } else {
      Int e = (pow_int(Int(p), d) - 1) / 2;
      u = fp_poly_powmod(t, e, h);
      if (u.c.empty()) u.c.push_back(0);
      u.c[0] = norm(int64_t(u.c[0]) - 1, p);
      u.trim();
    }
    if (u.is_zero()) continue;
    FpPoly g = fp_poly_gcd(u, h);
    if (g.deg() > 0 && g.deg() < h.deg()) {
      fp_edf(g, d, rng, out);
      fp_edf(fp_poly_div_exact(h, g), d, rng, out);
      return;
    }
  }
  throw cap_exceeded("fp_edf: equal-degree splitting failed");
}

// Distinct-degree factorization of a squarefree monic s, then equal-degree
// splits; returns the distinct monic irreducible factors.
std::vector<FpPoly> fp_distinct_irreducibles(FpPoly s, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  s = fp_poly_monic(s);
  if (s.deg() <= 0) return out;
  const FpPoly x = FpPoly::x(s.p);
  FpPoly h = fp_poly_mod(x, s);
  int d = 0;
  while (s.deg() > 0 && 2 * (d + 1) <= s.deg()) {
    ++d;
    h = fp_poly_powmod(h, Int(s.p), s);
    FpPoly diff = h;
    diff.c.resize(std::max<size_t>(diff.c.size(), 2), 0);
    diff.c[1] = norm(int64_t(diff.c[1]) - 1, s.p);
    diff.trim();
    FpPoly g = fp_poly_gcd(diff, s);
    if (g.deg() > 0) {
      fp_edf(g, d, rng, out);
      s = fp_poly_div_exact(s, g);
      if (s.deg() > 0) h = fp_poly_mod(h, s);
    }
  }
  if (s.deg() > 0) out.push_back(fp_poly_monic(s));
  return out;
}

// All distinct irreducible factors of f (multiplicities ignored). Factors
// whose multiplicity is divisible by p are reached via p-th roots.
void fp_collect_distinct(FpPoly f, std::mt19937_64& rng,
                         std::vector<FpPoly>& distinct) {
  f = fp_poly_monic(f);
  if (f.deg() < 1) return;
  FpPoly d = fp_poly_derivative(f);
  if (d.is_zero()) {
    // f = g(x^p) = g(x)^p over F_p.
    FpPoly g{f.p, {}};
    for (int i = 0; i <= f.deg(); i += static_cast<int>(f.p))
      g.c.push_back(f.c[i]);
    g.trim();
    fp_collect_distinct(g, rng, distinct);
    return;
  }
  FpPoly gcd = fp_poly_gcd(f, d);
  FpPoly u = gcd.deg() > 0 ? fp_poly_div_exact(f, gcd) : f;
  std::vector<FpPoly> found = fp_distinct_irreducibles(u, rng);
  FpPoly rest = f;
  for (const FpPoly& q : found) {
    distinct.push_back(q);
    while (rest.deg() >= q.deg() && fp_poly_mod(rest, q).is_zero())
      rest = fp_poly_div_exact(rest, q);
  }
  fp_collect_distinct(rest, rng, distinct);
}

}  // namespace

std::vector<std::pair<FpPoly, int>> fp_poly_factor(const FpPoly& f_in) {
  FpPoly f = fp_poly_monic(f_in);
  if (f.deg() < 1) return {};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);

  std::vector<FpPoly> distinct;
  fp_collect_distinct(f, rng, distinct);

  std::vector<std::pair<FpPoly, int>> out;
  for (const FpPoly& q : distinct) {
    int mult = 0;
    FpPoly rest = f;
    while (rest.deg() >= q.deg() && fp_poly_mod(rest, q).is_zero()) {
      rest = fp_poly_div_exact(rest, q);
      ++mult;
    }
    if (mult > 0) out.emplace_back(q, mult);
  }
  // Deterministic order: by degree, then coefficient string.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return out;
}

FpPoly fp_charpoly(const FpMat& m_in) {
  assert(m_in.rows == m_in.cols);
  const int n = m_in.rows;
  const int64_t p = m_in.p;
  if (n == 0) return FpPoly{p, {1}};
  FpMat h = m_in;

  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (h.at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(c + 1, j), h.at(piv, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, c + 1), h.at(i, piv));
    }
    int64_t inv = fp_inv(h.at(c + 1, c), p);
    for (int i = c + 2; i < n; ++i) {
      if (!h.at(i, c)) continue;
      int64_t f = norm(int64_t(h.at(i, c)) * inv, p);
      for (int j = 0; j < n; ++j)
        h.at(i, j) = norm(int64_t(h.at(i, j)) - f * h.at(c + 1, j), p);
      for (int r = 0; r < n; ++r)
        h.at(r, c + 1) = norm(h.at(r, c + 1) + f * h.at(r, i), p);
    }
  }

  // Charpoly recurrence on leading principal Hessenberg minors.
  std::vector<FpPoly> ps(n + 1);
  ps[0] = FpPoly{p, {1}};
  for (int m = 1; m <= n; ++m) {
    FpPoly t{p, FpVec(2, 0)};
    t.c[0] = norm(-int64_t(h.at(m - 1, m - 1)), p);
    t.c[1] = 1;
    FpPoly acc = fp_poly_mul(t, ps[m - 1]);
    int64_t run = 1;
    for (int i = m - 1; i >= 1; --i) {
      run = norm(run * h.at(i, i - 1), p);
      if (run == 0) break;
      int64_t coef = norm(int64_t(h.at(i - 1, m - 1)) * run, p);
      if (coef == 0) continue;
      FpPoly term = ps[i - 1];
      for (auto& c : term.c) c = norm(int64_t(c) * (p - coef), p);
      if (acc.c.size() < term.c.size()) acc.c.resize(term.c.size(), 0);
      for (size_t j = 0; j < term.c.size(); ++j)
        acc.c[j] = norm(acc.c[j] + term.c[j], p);
    }
    acc.trim();
    ps[m] = std::move(acc);
  }
  return ps[n];
}

}  // namespace pforge
