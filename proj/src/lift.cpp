#include "pforge/lift.hpp"

#include <algorithm>
#include <cassert>

namespace pforge {

namespace {

struct CocycleSystem {
  int r = 0;
  int64_t p = 2;
  long n_unknowns = 0;
  std::vector<FpMat> mod_p;      // images mod p
  std::vector<FpMat> mod_p_inv;  // inverses mod p
  std::vector<std::pair<int, int>> pairs;  // (g, s) per equation block
  FpSystem sys{2, 0};

  long unknown(int g, int a, int b) const {
    return static_cast<long>(g) * r * r + a * r + b;
  }
};

// Defect matrix c(g,h) with rho^(g) rho^(h) rho^(gh)^{-1} = I + p^k c(g,h).
FpMat defect(const Representation& rep, int g, int h) {
  const RingSpec& ring = rep.ring();
  const int k1 = ring.k + 1;
  ZpkMatrix lg = rep.group.element(g).canonical_lift(k1);
  ZpkMatrix lh = rep.group.element(h).canonical_lift(k1);
  ZpkMatrix lgh = rep.group.element(rep.group.product(g, h)).canonical_lift(k1);
  auto inv = invert(lgh);
  assert(inv.has_value());
  ZpkMatrix e = lg * lh * *inv;
  Int pk = ring.modulus;
  FpMat c(to_int64(ring.p), rep.degree(), rep.degree());
  for (int a = 0; a < rep.degree(); ++a)
    for (int b = 0; b < rep.degree(); ++b) {
      Int d = e.at(a, b) - Int(a == b ? 1 : 0);
      if (d % pk != 0)
        throw input_error("lift: images are not multiplicative at precision k");
      c.at(a, b) = static_cast<uint8_t>(to_int64((d / pk) % ring.p));
    }
  return c;
}

CocycleSystem build_system(const Representation& rep, const Caps& caps,
                           bool track_certificate) {
  CocycleSystem cs;
  cs.r = rep.degree();
  cs.p = to_int64(rep.ring().p);
  const long n = static_cast<long>(rep.order());
  cs.n_unknowns = n * cs.r * cs.r;
  if (cs.n_unknowns > caps.solver_cap)
    throw cap_exceeded("lift: unknown count exceeds the solver cap");
  cs.sys = FpSystem(cs.p, static_cast<int>(cs.n_unknowns), track_certificate);

  cs.mod_p.reserve(n);
  cs.mod_p_inv.reserve(n);
  for (long g = 0; g < n; ++g)
    cs.mod_p.push_back(fp_from_zpk(rep.group.element(static_cast<int>(g))));
  for (long g = 0; g < n; ++g)
    cs.mod_p_inv.push_back(cs.mod_p[rep.group.inverse(static_cast<int>(g))]);

  FpVec row(cs.n_unknowns, 0);
  for (int g = 0; g < n; ++g) {
    for (int s : rep.group.generator_indices()) {
      FpMat c = defect(rep, g, s);
      int gs = rep.group.product(g, s);
      cs.pairs.emplace_back(g, s);
      const FpMat& G = cs.mod_p[g];
      const FpMat& Gi = cs.mod_p_inv[g];
      for (int a = 0; a < cs.r; ++a)
        for (int b = 0; b < cs.r; ++b) {
          std::fill(row.begin(), row.end(), 0);
          auto bump = [&](long idx, int64_t delta) {
            row[idx] = static_cast<uint8_t>((((row[idx] + delta) % cs.p) + cs.p) % cs.p);
          };
          bump(cs.unknown(gs, a, b), 1);
          bump(cs.unknown(g, a, b), -1);
          // -(G X_s G^{-1})[a][b] = -sum_{u,v} G[a][u] X_s[u][v] G^{-1}[v][b]
          for (int u = 0; u < cs.r; ++u) {
            if (G.at(a, u) == 0) continue;
            for (int v = 0; v < cs.r; ++v) {
              int64_t coef = int64_t(G.at(a, u)) * Gi.at(v, b);
              if (coef % cs.p == 0) continue;
              bump(cs.unknown(s, u, v), -coef);
            }
          }
          cs.sys.add_equation(row, c.at(a, b));
        }
    }
  }
  return cs;
}

std::vector<ZpkMatrix> corrected_images(const Representation& rep, const FpVec& x) {
  const RingSpec& ring = rep.ring();
  const int k1 = ring.k + 1;
  RingSpec target(ring.p, k1);
  const Int pk = ring.modulus;
  const int r = rep.degree();
  std::vector<ZpkMatrix> out;
  out.reserve(rep.order());
  for (size_t g = 0; g < rep.order(); ++g) {
    ZpkMatrix m = rep.group.element(static_cast<int>(g)).canonical_lift(k1);
    // (I + p^k X_g) rho^(g)
    ZpkMatrix corr = ZpkMatrix::identity(target, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        long idx = static_cast<long>(g) * r * r + a * r + b;
        if (x[idx])
          corr.at(a, b) = target.reduce(corr.at(a, b) + pk * Int(x[idx]));
      }
    out.push_back(corr * m);
  }
  return out;
}

bool verify_full_table(const Representation& rep,
                       const std::vector<ZpkMatrix>& images) {
  const size_t n = rep.order();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (images[i] * images[j] !=
          images[rep.group.product(static_cast<int>(i), static_cast<int>(j))])
        return false;
  return true;
}

// Re-derive the certificate check by streaming the equations once more.
bool recheck_certificate(const Representation& rep, const CocycleSystem& cs,
                         const FpVec& y) {
  const int r = cs.r;
  const int64_t p = cs.p;
  std::vector<int64_t> acc(cs.n_unknowns, 0);
  int64_t rhs_acc = 0;
  long eq = 0;
  for (size_t pi = 0; pi < cs.pairs.size(); ++pi) {
    auto [g, s] = cs.pairs[pi];
    FpMat c = defect(rep, g, s);
    int gs = rep.group.product(g, s);
    const FpMat& G = cs.mod_p[g];
    const FpMat& Gi = cs.mod_p_inv[g];
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b, ++eq) {
        int64_t w = (eq < static_cast<long>(y.size())) ? y[eq] : 0;
        if (w == 0) continue;
        acc[cs.unknown(gs, a, b)] += w;
        acc[cs.unknown(g, a, b)] -= w;
        for (int u = 0; u < r; ++u)
          for (int v = 0; v < r; ++v)
            acc[cs.unknown(s, u, v)] -= w * G.at(a, u) * Gi.at(v, b);
        rhs_acc += w * c.at(a, b);
      }
  }
  for (int64_t v : acc)
    if (v % p != 0) return false;
  return rhs_acc % p != 0;
}

}  // namespace

FpMat lift_defect(const Representation& rep, int g, int h) {
  return defect(rep, g, h);
}

LiftOutcome lift_once(const Representation& rep, const Caps& caps) {
  CocycleSystem cs = build_system(rep, caps, /*track_certificate=*/true);
  LiftOutcome out;
  out.cocycle_rank = cs.sys.rank();
  out.correction_space_dim = cs.sys.kernel_dim();

  if (!cs.sys.feasible()) {
    out.status = LiftStatus::Obstructed;
    out.certificate = cs.sys.certificate();
    out.certificate_checked = recheck_certificate(rep, cs, out.certificate);
    // Name the last equation the certificate weights.
    for (long e = static_cast<long>(out.certificate.size()) - 1; e >= 0; --e)
      if (out.certificate[e]) {
        auto [g, s] = cs.pairs[e / (cs.r * cs.r)];
        out.witness_g = g;
        out.witness_h = s;
        out.cocycle_witness = defect(rep, g, s);
        break;
      }
    return out;
  }

  out.status = LiftStatus::Lifted;
  out.lifted_images = corrected_images(rep, cs.sys.particular());
  out.table_verified = verify_full_table(rep, out.lifted_images);
  if (!out.table_verified)
    throw input_error("lift: solver produced images that fail the table check");
  return out;
}

Representation lifted_representation(const Representation& rep,
                                     const LiftOutcome& out) {
  if (out.status != LiftStatus::Lifted)
    throw input_error("lifted_representation: outcome is not a lift");
  return Representation{
      FiniteMatrixGroup::from_elements(out.lifted_images,
                                       rep.group.generator_indices()),
      rep.label + "^" + std::to_string(rep.ring().k + 1)};
}

namespace {

struct HullSearch {
  int target_k;
  const Caps* caps;
  HullReport report;
  std::vector<ZpkMatrix> witness;

  bool dfs(const Representation& rep) {
    const int level = rep.ring().k;
    ++report.nodes_visited;
    report.reached_k = std::max(report.reached_k, level);
    if (level >= target_k) {
      witness = rep.group.generator_matrices();
      return true;
    }
    if (report.nodes_visited > report.budget) {
      report.budget_exhausted = true;
      return false;
    }

    HullLevelStat& stat = report.levels[level - report.start_k];
    ++stat.attempts;

    CocycleSystem cs;
    try {
      cs = build_system(rep, *caps, /*track_certificate=*/false);
    } catch (const cap_exceeded&) {
      report.budget_exhausted = true;
      return false;
    }
    if (!cs.sys.feasible()) {
      ++stat.obstructed;
      return false;
    }

    FpVec particular = cs.sys.particular();
    std::vector<FpVec> kernel = cs.sys.kernel();

    // Quotient the solution torsor by coboundaries Y - Ad_g(Y).
    const int r = cs.r;
    FpRowBasis basis(cs.p, static_cast<int>(cs.n_unknowns));
    for (int u = 0; u < r; ++u)
      for (int v = 0; v < r; ++v) {
        FpVec w(cs.n_unknowns, 0);
        for (size_t g = 0; g < rep.order(); ++g) {
          // (Y - G Y G^{-1}) for Y = E_{uv}
          const FpMat& G = cs.mod_p[g];
          const FpMat& Gi = cs.mod_p_inv[g];
          for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
              int64_t val = (a == u && b == v) ? 1 : 0;
              val -= int64_t(G.at(a, u)) * Gi.at(v, b);
              val %= cs.p;
              if (val < 0) val += cs.p;
              if (val)
                w[static_cast<long>(g) * r * r + a * r + b] =
                    static_cast<uint8_t>(val);
            }
        }
        basis.insert(std::move(w));
      }
    std::vector<FpVec> coset_dirs;
    for (FpVec& kv : kernel)
      if (basis.insert(kv)) coset_dirs.push_back(kv);

    // Enumerate coset representatives lexicographically, zero tuple first.
    long n_children = 1;
    for (size_t i = 0; i < coset_dirs.size(); ++i) {
      n_children *= cs.p;
      if (n_children > caps->children_cap) break;
    }
    if (n_children > caps->children_cap) {
      n_children = caps->children_cap;
      ++stat.children_truncated;
    }

    std::vector<int> tuple(coset_dirs.size(), 0);
    for (long child = 0; child < n_children; ++child) {
      FpVec x = particular;
      for (size_t i = 0; i < coset_dirs.size(); ++i) {
        if (tuple[i] == 0) continue;
        for (size_t j = 0; j < x.size(); ++j)
          x[j] = static_cast<uint8_t>((x[j] + int64_t(tuple[i]) * coset_dirs[i][j]) % cs.p);
      }
      std::vector<ZpkMatrix> images = corrected_images(rep, x);
      if (!verify_full_table(rep, images))
        throw input_error("hull_search: corrected images fail the table check");
      Representation child_rep{
          FiniteMatrixGroup::from_elements(std::move(images),
                                           rep.group.generator_indices()),
          rep.label};
      if (dfs(child_rep)) return true;
      if (report.budget_exhausted) return false;
      // next tuple
      size_t pos = 0;
      while (pos < tuple.size() && ++tuple[pos] == cs.p) tuple[pos++] = 0;
      if (pos == tuple.size() && !tuple.empty()) break;
      if (tuple.empty()) break;
    }
    return false;
  }
};

}  // namespace

HullReport hull_search(const Representation& rep_mod_p, int k_max,
                       const Caps& caps) {
  if (k_max < rep_mod_p.ring().k)
    throw input_error("hull_search: k_max below the starting precision");
  HullSearch hs{k_max, &caps, {}, {}};
  hs.report.start_k = rep_mod_p.ring().k;
  hs.report.target_k = k_max;
  hs.report.reached_k = rep_mod_p.ring().k;
  hs.report.budget = caps.branch_budget;
  hs.report.levels.assign(std::max(0, k_max - rep_mod_p.ring().k),
                          HullLevelStat{});
  for (int l = 0; l < static_cast<int>(hs.report.levels.size()); ++l)
    hs.report.levels[l].level = rep_mod_p.ring().k + l;

  hs.dfs(rep_mod_p);
  hs.report.witness_generators = std::move(hs.witness);
  return hs.report;
}

NocandoReport nocando_probe(const Int& p, int k_max, const Caps& caps) {
  if (p != 5 && p != 7)
    throw input_error("nocando_probe: p must be 5 or 7");
  RingSpec ring(p, 1);
  // Standard generating pair for GL(2, p): diag(z, 1) with z a primitive
  // root, and the order-(p^2-1)-ish companion [[-1,1],[-1,0]].
  long pl = to_int64(p);
  long z = 0;
  for (long cand = 2; cand < pl; ++cand) {
    long x = 1;
    bool primitive = true;
    for (long e = 1; e < pl - 1; ++e) {
      x = (x * cand) % pl;
      if (x == 1) { primitive = false; break; }
    }
    if (primitive) { z = cand; break; }
  }
  ZpkMatrix d(ring, {{Int(z), 0}, {0, 1}});
  ZpkMatrix s(ring, {{-1, 1}, {-1, 0}});
  Caps wide = caps;
  wide.closure_cap = std::max(caps.closure_cap, 4100L);
  Representation rep = make_rep({d, s}, "gl2-" + p.str(), wide);

  NocandoReport out;
  out.p = p;
  out.group_order = rep.order();
  out.first_lift = lift_once(rep, wide);
  out.hull = hull_search(rep, k_max, wide);
  out.note =
      "for p >= 5 the natural 2-dimensional module of GL(2,p) admits no "
      "integral cover; any finite tower height reported here is consistent "
      "experimental data, not a proof in either direction";
  return out;
}

}  // namespace pforge
