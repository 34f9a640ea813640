#pragma once

#include "pforge/caps.hpp"
#include "pforge/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace pforge {

// A finite subgroup of GL(r, Z/p^k) stored by exhaustive element list.
// Element 0 is the identity; element order is the BFS discovery order from
// the identity with generators applied in the given order, so closures are
// reproducible.
class FiniteMatrixGroup {
 public:
  // Smallest closed set containing the generators (all must be invertible).
  static FiniteMatrixGroup close(const std::vector<ZpkMatrix>& generators,
                                 const Caps& caps = default_caps());

  // Wraps an already-closed element list (index 0 = identity). Used when a
  // group is transported to another precision without re-closing.
  static FiniteMatrixGroup from_elements(std::vector<ZpkMatrix> elements,
                                         std::vector<int> generator_indices);

  const RingSpec& ring() const { return ring_; }
  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<ZpkMatrix>& elements() const { return elements_; }
  const ZpkMatrix& element(int i) const { return elements_[i]; }
  const std::vector<int>& generator_indices() const { return generators_; }
  std::vector<ZpkMatrix> generator_matrices() const;

  int product(int i, int j) const;       // index of elements[i] . elements[j]
  int inverse(int i) const;
  int index_of(const ZpkMatrix& m) const;  // -1 when absent
  Int element_order(int i) const;
  bool abelian() const;

  // BFS link: elements_[i] = elements_[bfs_parent(i)] . gen(bfs_gen(i)).
  int bfs_parent(int i) const { return bfs_parent_[i]; }
  int bfs_gen(int i) const { return bfs_gen_[i]; }

 private:
  FiniteMatrixGroup() = default;
  void build_index();

  RingSpec ring_;
  int degree_ = 0;
  std::vector<ZpkMatrix> elements_;
  std::vector<int> generators_;
  std::vector<int> bfs_parent_, bfs_gen_;
  std::map<std::string, int> index_;
  std::vector<int> inverses_;
  std::vector<int32_t> table_;  // |G|^2 when small enough, else empty
  bool has_table_ = false;
};

// Block-diagonal copies of the base composed with block permutations of
// Sym(s); the natural imprimitive action, order |base|^s . s!.
FiniteMatrixGroup wreath_imprimitive(const FiniteMatrixGroup& base, int s,
                                     const Caps& caps = default_caps());

FiniteMatrixGroup direct_sum(const FiniteMatrixGroup& g1,
                             const FiniteMatrixGroup& g2,
                             const Caps& caps = default_caps());

struct Subgroup {
  const FiniteMatrixGroup* parent = nullptr;
  std::vector<int> members;  // sorted, contains 0

  size_t order() const { return members.size(); }
  bool contains(int i) const;
  bool is_normal() const;  // closed under conjugation by the parent group
  Int exponent() const;
  bool is_elementary_abelian_2() const;
};

Subgroup subgroup_generated(const FiniteMatrixGroup& g, const std::vector<int>& idx);

}  // namespace pforge
