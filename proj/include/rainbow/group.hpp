#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/bitset.hpp"

namespace rainbow {

// Thrown when an exhaustive routine is asked to run past its configured
// size bound.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Element of a direct sum of cyclic groups, one coordinate per factor,
// coordinate i reduced mod the i-th factor order.
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z/n1 + Z/n2 + ... + Z/nk given by its factor list. The factor list is
// taken as written: "6" and "2,3" are treated as distinct presentations.
// Elements are addressed by mixed-radix index with the last coordinate
// least significant, so for cyclic groups index arithmetic is arithmetic
// mod n.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup();  // trivial group, order 1
  explicit FiniteAbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  bool odd_order() const { return order_ % 2 == 1; }
  bool is_cyclic_presentation() const { return factors_.size() <= 1; }

  int index_of(const GroupElement& x) const;
  GroupElement element_at(int index) const;

  // Index-level arithmetic. Arguments must be valid element indices.
  int add_index(int i, int j) const;
  int sub_index(int i, int j) const;
  int neg_index(int i) const;
  int double_index(int i) const { return add_index(i, i); }
  int scalar_index(long long k, int i) const;
  // Unique y with 2y = x. Requires odd group order.
  int halve_index(int i) const;

  int element_order(int i) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

private:
  std::vector<int> factors_;
  std::vector<int> radix_;  // radix_[f] = product of factors_[g] for g > f
  std::vector<int> half_;   // per-factor inverse of 2, odd factors only
  int order_ = 1;

  void check_index(int i) const;
};

// Element-level operations mirroring the index arithmetic.
GroupElement add(const FiniteAbelianGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement scalar_mul(const FiniteAbelianGroup& g, long long k, const GroupElement& x);
GroupElement halve(const FiniteAbelianGroup& g, const GroupElement& x);

// Subgroup kept as its sorted member list plus a membership mask over the
// parent's element indices.
struct Subgroup {
  FiniteAbelianGroup parent;
  std::vector<int> members;  // ascending, members[0] == 0
  Bitset mask;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int index) const { return mask.test(index); }
  bool is_trivial() const { return members.size() == 1; }
  bool is_full() const { return size() == parent.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

// Validates identity, additive and negation closure, and Lagrange.
Subgroup make_subgroup(const FiniteAbelianGroup& g, std::vector<int> members);
Subgroup trivial_subgroup(const FiniteAbelianGroup& g);
Subgroup full_subgroup(const FiniteAbelianGroup& g);
Subgroup generated_subgroup(const FiniteAbelianGroup& g, const std::vector<int>& generators);

inline constexpr int kSubgroupEnumerationBound = 200;

// All subgroups, ordered by size then lexicographic member list. Seeds the
// collection with every cyclic subgroup and closes it under pairwise join.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          int max_order = kSubgroupEnumerationBound);

// Partition of the parent into H-cosets. Coset 0 is H itself; the rest are
// numbered by first appearance as element indices are scanned in order, so
// rep[k] is the least element index in coset k.
struct CosetDecomposition {
  FiniteAbelianGroup parent;
  Subgroup subgroup;
  std::vector<std::vector<int>> cosets;  // each ascending
  std::vector<int> rep;                  // coset -> least element index
  std::vector<int> project;              // element index -> coset id

  int size() const { return static_cast<int>(cosets.size()); }
  int add(int a, int b) const { return project[parent.add_index(rep[a], rep[b])]; }
  int neg(int a) const { return project[parent.neg_index(rep[a])]; }
  int dbl(int a) const { return add(a, a); }
};

CosetDecomposition cosets(const FiniteAbelianGroup& g, const Subgroup& h);
int quotient_project(const CosetDecomposition& q, int element_index);
int quotient_project(const FiniteAbelianGroup& g, const Subgroup& h, int element_index);

}  // namespace rainbow
