#include "pforge/rep.hpp"

namespace pforge {

Representation make_rep(const std::vector<ZpkMatrix>& generators,
                        std::string label, const Caps& caps) {
  return Representation{FiniteMatrixGroup::close(generators, caps), std::move(label)};
}

Representation reduce_mod(const Representation& rep, int j, const Caps& caps) {
  if (j < 1 || j > rep.ring().k)
    throw input_error("reduce_mod: need 1 <= j <= k");
  if (j == rep.ring().k) return rep;
  std::vector<ZpkMatrix> gens;
  for (const ZpkMatrix& g : rep.group.generator_matrices())
    gens.push_back(g.mod_reduced(j));
  return Representation{FiniteMatrixGroup::close(gens, caps),
                        rep.label + "|mod p^" + std::to_string(j)};
}

KernelReport reduction_kernel(const Representation& rep, int j) {
  if (j < 1 || j > rep.ring().k)
    throw input_error("reduction_kernel: need 1 <= j <= k");
  std::vector<int> members;
  for (size_t i = 0; i < rep.order(); ++i)
    if (rep.group.element(static_cast<int>(i)).mod_reduced(j).is_identity())
      members.push_back(static_cast<int>(i));

  KernelReport out;
  out.j = j;
  out.kernel.parent = &rep.group;
  out.kernel.members = std::move(members);
  out.is_trivial = out.kernel.order() == 1;
  out.exponent = out.kernel.exponent();
  out.is_elementary_abelian_2 =
      rep.ring().p == 2 && out.kernel.is_elementary_abelian_2();
  return out;
}

Theorem5Verdict check_theorem5(const Representation& rep, const Caps& caps) {
  (void)caps;
  Theorem5Verdict v;
  v.kernel = reduction_kernel(rep, 1);
  const bool odd = rep.ring().p != 2;
  if (odd) {
    v.pass = v.kernel.is_trivial;
    if (!v.pass) {
      for (int m : v.kernel.kernel.members)
        if (m != 0) { v.counterexample = m; break; }
      v.detail = "odd p: a non-identity element reduces to the identity mod p";
    } else {
      v.detail = "odd p: mod-p reduction kernel is trivial";
    }
  } else {
    v.pass = v.kernel.exponent <= 2 && v.kernel.kernel.is_elementary_abelian_2();
    if (!v.pass) {
      for (int m : v.kernel.kernel.members)
        if (rep.group.element_order(m) > 2) { v.counterexample = m; break; }
      v.detail = "p = 2: mod-2 reduction kernel has an element of order > 2";
    } else {
      v.detail = "p = 2: mod-2 reduction kernel is elementary abelian of exponent <= 2";
    }
  }
  if (!v.pass)
    v.detail += "; diagnostic only: the images then do not extend to a "
                "compatible action at all precisions";
  return v;
}

Representation dual_rep(const Representation& rep, const Caps& caps) {
  std::vector<ZpkMatrix> gens;
  for (const ZpkMatrix& g : rep.group.generator_matrices()) {
    auto inv = invert(g);
    if (!inv) throw not_unit("dual_rep: generator not invertible");
    gens.push_back(inv->transpose());
  }
  Representation dual{FiniteMatrixGroup::close(gens, caps), rep.label + "*"};
  // Inverse-transpose is multiplicative, so the dual has the same order.
  if (dual.order() != rep.order())
    throw input_error("dual_rep: dual closure has a different order");
  return dual;
}

DualCoverReport dual_cover_check(const Representation& rep, const Caps& caps) {
  if (rep.ring().k < 2) throw input_error("dual_cover_check: need precision k >= 2");
  Representation dual_then_reduce = reduce_mod(dual_rep(rep, caps), 1, caps);
  Representation reduce_then_dual = dual_rep(reduce_mod(rep, 1, caps), caps);

  DualCoverReport out;
  auto a = dual_then_reduce.group.generator_matrices();
  auto b = reduce_then_dual.group.generator_matrices();
  out.routes_agree = a.size() == b.size();
  for (size_t i = 0; out.routes_agree && i < a.size(); ++i)
    out.routes_agree = (a[i] == b[i]);
  out.generators_checked = static_cast<int>(a.size());
  return out;
}

}  // namespace pforge
