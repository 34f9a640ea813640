#include "pforge/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace pforge {

namespace {

constexpr size_t kEagerTableLimit = 2048;

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<ZpkMatrix>& generators,
                                           const Caps& caps) {
  if (generators.empty()) throw input_error("close: need at least one generator");
  FiniteMatrixGroup g;
  g.ring_ = generators.front().ring();
  g.degree_ = generators.front().rows();
  for (const auto& m : generators) {
    if (m.rows() != m.cols() || m.rows() != g.degree_ || m.ring() != g.ring_)
      throw input_error("close: generators must be square over one ring");
    if (!invert(m).has_value())
      throw not_unit("close: generator is singular mod p");
  }

  g.elements_.push_back(ZpkMatrix::identity(g.ring_, g.degree_));
  g.bfs_parent_.push_back(-1);
  g.bfs_gen_.push_back(-1);
  std::map<std::string, int> seen;
  seen[g.elements_[0].key()] = 0;

  for (size_t head = 0; head < g.elements_.size(); ++head) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      ZpkMatrix prod = g.elements_[head] * generators[gi];
      std::string key = prod.key();
      auto it = seen.find(key);
      if (it == seen.end()) {
        if (static_cast<long>(g.elements_.size()) >= caps.closure_cap)
          throw cap_exceeded("close: group order exceeds the closure cap");
        seen.emplace(std::move(key), static_cast<int>(g.elements_.size()));
        g.elements_.push_back(std::move(prod));
        g.bfs_parent_.push_back(static_cast<int>(head));
        g.bfs_gen_.push_back(static_cast<int>(gi));
      }
    }
  }

  g.index_ = std::move(seen);
  for (const auto& gen : generators) g.generators_.push_back(g.index_.at(gen.key()));
  g.build_index();
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(std::vector<ZpkMatrix> elements,
                                                   std::vector<int> generator_indices) {
  if (elements.empty() || !elements.front().is_identity())
    throw input_error("from_elements: element 0 must be the identity");
  FiniteMatrixGroup g;
  g.ring_ = elements.front().ring();
  g.degree_ = elements.front().rows();
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generator_indices);
  g.bfs_parent_.assign(g.elements_.size(), -1);
  g.bfs_gen_.assign(g.elements_.size(), -1);
  for (size_t i = 0; i < g.elements_.size(); ++i)
    g.index_[g.elements_[i].key()] = static_cast<int>(i);
  if (g.index_.size() != g.elements_.size())
    throw input_error("from_elements: duplicate elements");
  g.build_index();
  return g;
}

void FiniteMatrixGroup::build_index() {
  const size_t n = elements_.size();
  inverses_.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    auto inv = invert(elements_[i]);
    if (!inv) throw not_unit("group: non-invertible element");
    int j = index_of(*inv);
    if (j < 0) throw input_error("group: element set not closed under inverse");
    inverses_[i] = j;
  }
  if (n <= kEagerTableLimit) {
    table_.assign(n * n, -1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        int idx = index_of(elements_[i] * elements_[j]);
        if (idx < 0) throw input_error("group: element set not closed");
        table_[i * n + j] = idx;
      }
    has_table_ = true;
  }
}

std::vector<ZpkMatrix> FiniteMatrixGroup::generator_matrices() const {
  std::vector<ZpkMatrix> out;
  for (int i : generators_) out.push_back(elements_[i]);
  return out;
}

int FiniteMatrixGroup::product(int i, int j) const {
  if (has_table_) return table_[static_cast<size_t>(i) * elements_.size() + j];
  int idx = index_of(elements_[i] * elements_[j]);
  assert(idx >= 0);
  return idx;
}

int FiniteMatrixGroup::inverse(int i) const { return inverses_[i]; }

int FiniteMatrixGroup::index_of(const ZpkMatrix& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

Int FiniteMatrixGroup::element_order(int i) const {
  Int n = 1;
  int cur = i;
  while (cur != 0) {
    cur = product(cur, i);
    ++n;
  }
  return n;
}

bool FiniteMatrixGroup::abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

FiniteMatrixGroup wreath_imprimitive(const FiniteMatrixGroup& base, int s,
                                     const Caps& caps) {
  if (s < 1) throw input_error("wreath: s must be >= 1");
  const RingSpec& ring = base.ring();
  const int d = base.degree();
  const int D = d * s;

  std::vector<ZpkMatrix> gens;
  // Base generators acting on the first block.
  for (const ZpkMatrix& b : base.generator_matrices()) {
    ZpkMatrix m = ZpkMatrix::identity(ring, D);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = b.at(i, j);
    gens.push_back(std::move(m));
  }
  // Block permutations generating Sym(s): a transposition and an s-cycle.
  auto block_perm = [&](const std::vector<int>& pi) {
    ZpkMatrix m(ring, D, D);
    for (int blk = 0; blk < s; ++blk)
      for (int i = 0; i < d; ++i) m.at(blk * d + i, pi[blk] * d + i) = 1;
    return m;
  };
  if (s >= 2) {
    std::vector<int> tr(s);
    std::iota(tr.begin(), tr.end(), 0);
    std::swap(tr[0], tr[1]);
    gens.push_back(block_perm(tr));
  }
  if (s >= 3) {
    std::vector<int> cyc(s);
    for (int i = 0; i < s; ++i) cyc[i] = (i + 1) % s;
    gens.push_back(block_perm(cyc));
  }
  return FiniteMatrixGroup::close(gens, caps);
}

FiniteMatrixGroup direct_sum(const FiniteMatrixGroup& g1,
                             const FiniteMatrixGroup& g2, const Caps& caps) {
  if (g1.ring() != g2.ring()) throw input_error("direct_sum: ring mismatch");
  const RingSpec& ring = g1.ring();
  const int d1 = g1.degree(), d2 = g2.degree();
  std::vector<ZpkMatrix> gens;
  for (const ZpkMatrix& a : g1.generator_matrices()) {
    ZpkMatrix m = ZpkMatrix::identity(ring, d1 + d2);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) m.at(i, j) = a.at(i, j);
    gens.push_back(std::move(m));
  }
  for (const ZpkMatrix& b : g2.generator_matrices()) {
    ZpkMatrix m = ZpkMatrix::identity(ring, d1 + d2);
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d2; ++j) m.at(d1 + i, d1 + j) = b.at(i, j);
    gens.push_back(std::move(m));
  }
  return FiniteMatrixGroup::close(gens, caps);
}

bool Subgroup::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool Subgroup::is_normal() const {
  for (size_t g = 0; g < parent->order(); ++g) {
    int ginv = parent->inverse(static_cast<int>(g));
    for (int m : members)
      if (!contains(parent->product(parent->product(ginv, m), static_cast<int>(g))))
        return false;
  }
  return true;
}

Int Subgroup::exponent() const {
  Int e = 1;
  for (int m : members) {
    Int o = parent->element_order(m);
    e = e * o / boost::multiprecision::gcd(e, o);
  }
  return e;
}

bool Subgroup::is_elementary_abelian_2() const {
  for (int m : members)
    if (m != 0 && parent->product(m, m) != 0) return false;
  // Exponent <= 2 forces commutativity; check anyway.
  for (int a : members)
    for (int b : members)
      if (parent->product(a, b) != parent->product(b, a)) return false;
  return true;
}

Subgroup subgroup_generated(const FiniteMatrixGroup& g, const std::vector<int>& idx) {
  std::set<int> members = {0};
  std::vector<int> queue = {0};
  for (int i : idx) {
    if (i < 0 || static_cast<size_t>(i) >= g.order())
      throw input_error("subgroup_generated: index out of range");
    if (members.insert(i).second) queue.push_back(i);
  }
  for (size_t head = 0; head < queue.size(); ++head)
    for (int i : idx) {
      int nxt = g.product(queue[head], i);
      if (members.insert(nxt).second) queue.push_back(nxt);
      int inv = g.product(queue[head], g.inverse(i));
      if (members.insert(inv).second) queue.push_back(inv);
    }
  Subgroup s;
  s.parent = &g;
  s.members.assign(members.begin(), members.end());
  return s;
}

}  // namespace pforge
