#include "pforge/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace pforge {

namespace {

// Exact division of a residue representative by p^v.
Int div_pow(const Int& x, const Int& p, int v) {
  Int r = x;
  for (int i = 0; i < v; ++i) r /= p;
  return r;
}

}  // namespace

SmithResult smith_form(const ZpkMatrix& a) {
  const RingSpec& ring = a.ring();
  const int m = a.rows(), n = a.cols(), k = ring.k;
  ZpkMatrix d = a;
  ZpkMatrix l = ZpkMatrix::identity(ring, m);
  ZpkMatrix r = ZpkMatrix::identity(ring, n);
  const int nmin = std::min(m, n);

  for (int pos = 0; pos < nmin; ++pos) {
    int bi = -1, bj = -1, bv = k;
    for (int i = pos; i < m; ++i)
      for (int j = pos; j < n; ++j) {
        int v = ring.valuation(d.at(i, j));
        if (v < bv) { bv = v; bi = i; bj = j; }
      }
    if (bi < 0) break;  // remaining block is zero

    if (bi != pos)
      for (int j = 0; j < n; ++j) { std::swap(d.at(pos, j), d.at(bi, j)); }
    if (bi != pos)
      for (int j = 0; j < m; ++j) { std::swap(l.at(pos, j), l.at(bi, j)); }
    if (bj != pos) {
      for (int i = 0; i < m; ++i) std::swap(d.at(i, pos), d.at(i, bj));
      for (int i = 0; i < n; ++i) std::swap(r.at(i, pos), r.at(i, bj));
    }

    // Normalize the pivot to exactly p^v.
    Int unit = div_pow(d.at(pos, pos), ring.p, bv);
    Int uinv = ring.unit_inverse(unit);
    for (int j = 0; j < n; ++j) d.at(pos, j) = ring.reduce(uinv * d.at(pos, j));
    for (int j = 0; j < m; ++j) l.at(pos, j) = ring.reduce(uinv * l.at(pos, j));

    Int piv = d.at(pos, pos);  // p^bv, divides every remaining entry
    for (int i = pos + 1; i < m; ++i) {
      if (d.at(i, pos) == 0) continue;
      Int q = div_pow(d.at(i, pos), ring.p, bv);
      for (int j = 0; j < n; ++j) d.at(i, j) = ring.reduce(d.at(i, j) - q * d.at(pos, j));
      for (int j = 0; j < m; ++j) l.at(i, j) = ring.reduce(l.at(i, j) - q * l.at(pos, j));
    }
    for (int j = pos + 1; j < n; ++j) {
      if (d.at(pos, j) == 0) continue;
      Int q = div_pow(d.at(pos, j), ring.p, bv);
      for (int i = 0; i < m; ++i) d.at(i, j) = ring.reduce(d.at(i, j) - q * d.at(i, pos));
      for (int i = 0; i < n; ++i) r.at(i, j) = ring.reduce(r.at(i, j) - q * r.at(i, pos));
    }
    (void)piv;
  }

  SmithResult out{std::move(d), std::move(l), std::move(r), {}};
  out.diag_valuations.assign(n, k);
  for (int j = 0; j < nmin; ++j)
    out.diag_valuations[j] = ring.valuation(out.d.at(j, j));
  return out;
}

namespace {

struct HowellPass {
  std::vector<Vec> w;          // workspace rows
  std::vector<Vec> u;          // transform rows (pass 2 only)
  std::vector<std::array<int, 3>> pivots;  // (row, col, valuation)
  int insertions = 0;
};

// One run of the Howell elimination. In counting mode (track_u = false) the
// workspace grows on annihilator insertions; in transform mode it is
// pre-padded with `pad` zero rows and every step is an elementary row op
// mirrored on u.
HowellPass howell_run(const ZpkMatrix& a, int pad, bool track_u) {
  const RingSpec& ring = a.ring();
  const int m = a.rows(), n = a.cols(), k = ring.k;
  HowellPass ps;
  for (int i = 0; i < m; ++i) ps.w.push_back(a.row(i));
  for (int i = 0; i < pad; ++i) ps.w.emplace_back(n, Int(0));
  if (track_u) {
    int sz = m + pad;
    ps.u.assign(sz, Vec(sz, Int(0)));
    for (int i = 0; i < sz; ++i) ps.u[i][i] = 1;
  }
  int pad_cursor = m;

  auto row_sub = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < n; ++j)
      ps.w[dst][j] = ring.reduce(ps.w[dst][j] - q * ps.w[src][j]);
    if (track_u)
      for (size_t j = 0; j < ps.u[dst].size(); ++j)
        ps.u[dst][j] = ring.reduce(ps.u[dst][j] - q * ps.u[src][j]);
  };

  int r = 0;
  for (int c = 0; c < n; ++c) {
    int best = -1, bestv = k;
    for (int i = r; i < static_cast<int>(ps.w.size()); ++i) {
      int v = ring.valuation(ps.w[i][c]);
      if (v < bestv) { bestv = v; best = i; }
    }
    if (best < 0) continue;

    if (best != r) {
      std::swap(ps.w[best], ps.w[r]);
      if (track_u) std::swap(ps.u[best], ps.u[r]);
    }
    Int unit = div_pow(ps.w[r][c], ring.p, bestv);
    Int uinv = ring.unit_inverse(unit);
    for (int j = 0; j < n; ++j) ps.w[r][j] = ring.reduce(uinv * ps.w[r][j]);
    if (track_u)
      for (size_t j = 0; j < ps.u[r].size(); ++j)
        ps.u[r][j] = ring.reduce(uinv * ps.u[r][j]);

    for (int i = r + 1; i < static_cast<int>(ps.w.size()); ++i) {
      if (ps.w[i][c] == 0) continue;
      row_sub(i, r, div_pow(ps.w[i][c], ring.p, bestv));
    }

    if (bestv > 0) {
      Int mult = pow_int(ring.p, k - bestv);
      Vec ann(n);
      for (int j = 0; j < n; ++j) ann[j] = ring.reduce(mult * ps.w[r][j]);
      if (!vec_is_zero(ann)) {
        if (track_u) {
          assert(pad_cursor < static_cast<int>(ps.w.size()));
          ps.w[pad_cursor] = ann;
          for (size_t j = 0; j < ps.u[pad_cursor].size(); ++j)
            ps.u[pad_cursor][j] =
                ring.reduce(ps.u[pad_cursor][j] + mult * ps.u[r][j]);
          ++pad_cursor;
        } else {
          ps.w.push_back(ann);
        }
        ++ps.insertions;
      }
    }

    ps.pivots.push_back({r, c, bestv});
    ++r;
  }

  // Reduce entries above each pivot modulo the pivot power.
  for (const auto& pv : ps.pivots) {
    int i = pv[0], c = pv[1], v = pv[2];
    for (int j = 0; j < i; ++j) {
      Int q = div_pow(ps.w[j][c], ring.p, v);
      if (q != 0) row_sub(j, i, q);
    }
  }
  return ps;
}

}  // namespace

HowellResult howell_form(const ZpkMatrix& a) {
  const RingSpec& ring = a.ring();
  HowellPass count = howell_run(a, 0, false);
  HowellPass full = howell_run(a, count.insertions, true);
  assert(full.insertions == count.insertions);

  int total = a.rows() + count.insertions;
  int basis = static_cast<int>(full.pivots.size());
  int h_rows = std::max(a.rows(), basis);
  HowellResult out{ZpkMatrix(ring, h_rows, a.cols()),
                   ZpkMatrix(ring, total, total), basis};
  for (int i = 0; i < h_rows; ++i) out.h.set_row(i, full.w[i]);
  for (int i = h_rows; i < total; ++i)
    assert(vec_is_zero(full.w[i]));  // trimmed rows carry no content
  for (int i = 0; i < total; ++i) out.u.set_row(i, full.u[i]);
  return out;
}

SolutionSet solve(const ZpkMatrix& a, const Vec& b) {
  const RingSpec& ring = a.ring();
  if (static_cast<int>(b.size()) != a.rows())
    throw input_error("solve: rhs length does not match row count");
  const int m = a.rows(), n = a.cols(), k = ring.k;
  const int nmin = std::min(m, n);

  SmithResult s = smith_form(a);
  Vec bp = mat_mul_vec(ring, s.l, b);

  SolutionSet out;
  bool solvable = true;
  Vec w(n, Int(0));
  for (int i = 0; i < m && solvable; ++i) {
    int need = (i < nmin) ? s.diag_valuations[i] : k;
    if (ring.valuation(bp[i]) < need) solvable = false;
    else if (i < nmin && bp[i] != 0) w[i] = div_pow(bp[i], ring.p, need);
  }
  if (solvable) out.particular = mat_mul_vec(ring, s.r, w);

  for (int j = 0; j < n; ++j) {
    int e = s.diag_valuations[j];
    if (e == 0) continue;  // unit pivot pins this coordinate
    Vec gen(n, Int(0));
    gen[j] = pow_int(ring.p, k - e);
    Vec x = mat_mul_vec(ring, s.r, gen);
    if (!vec_is_zero(x)) out.kernel_basis.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> kernel(const ZpkMatrix& a) {
  return solve(a, Vec(a.rows(), Int(0))).kernel_basis;
}

std::optional<ZpkMatrix> invert(const ZpkMatrix& a) {
  if (a.rows() != a.cols()) throw input_error("invert: matrix not square");
  const RingSpec& ring = a.ring();
  const int n = a.rows();
  ZpkMatrix m = a;
  ZpkMatrix e = ZpkMatrix::identity(ring, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (ring.is_unit(m.at(i, c))) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(c, j), m.at(piv, j));
        std::swap(e.at(c, j), e.at(piv, j));
      }
    Int inv = ring.unit_inverse(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = ring.reduce(inv * m.at(c, j));
      e.at(c, j) = ring.reduce(inv * e.at(c, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      Int q = m.at(i, c);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = ring.reduce(m.at(i, j) - q * m.at(c, j));
        e.at(i, j) = ring.reduce(e.at(i, j) - q * e.at(c, j));
      }
    }
  }
  return e;
}

bool in_row_span(const ZpkMatrix& a, const Vec& v) {
  return solve(a.transpose(), v).particular.has_value();
}

bool same_row_span(const ZpkMatrix& a, const ZpkMatrix& b) {
  if (a.cols() != b.cols() || a.ring() != b.ring()) return false;
  HowellResult ha = howell_form(a), hb = howell_form(b);
  if (ha.basis_rows != hb.basis_rows) return false;
  for (int i = 0; i < ha.basis_rows; ++i)
    if (ha.h.row(i) != hb.h.row(i)) return false;
  return true;
}

}  // namespace pforge
