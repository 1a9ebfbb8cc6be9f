#pragma once

#include <optional>
#include <vector>

#include "rainbow/bitset.hpp"
#include "rainbow/group.hpp"

namespace rainbow {

// Immutable-by-convention subset of a group, membership kept as a bitset
// over element indices.
class GroupSubset {
public:
  explicit GroupSubset(FiniteAbelianGroup parent)
      : parent_(std::move(parent)), bits_(parent_.order()) {}
  GroupSubset(FiniteAbelianGroup parent, const std::vector<int>& indices)
      : GroupSubset(std::move(parent)) {
    for (int i : indices) add(i);
  }

  static GroupSubset full(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const Bitset& bits() const { return bits_; }

  bool contains(int index) const { return bits_.test(index); }
  void add(int index) {
    if (index < 0 || index >= parent_.order())
      throw std::invalid_argument("element index out of range");
    bits_.set(index);
  }
  void remove(int index) {
    if (index < 0 || index >= parent_.order())
      throw std::invalid_argument("element index out of range");
    bits_.reset(index);
  }

  int cardinality() const { return bits_.count(); }
  bool empty() const { return !bits_.any(); }
  std::vector<int> elements() const { return bits_.to_indices(); }

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.parent_ == b.parent_ && a.bits_ == b.bits_;
  }

private:
  FiniteAbelianGroup parent_;
  Bitset bits_;

  friend GroupSubset set_union(const GroupSubset&, const GroupSubset&);
  friend GroupSubset set_intersection(const GroupSubset&, const GroupSubset&);
  friend GroupSubset set_difference(const GroupSubset&, const GroupSubset&);
  friend GroupSubset complement(const GroupSubset&);
  friend GroupSubset translate(const GroupSubset&, int);
  friend GroupSubset minkowski_sum(const GroupSubset&, const GroupSubset&);
};

GroupSubset set_union(const GroupSubset& x, const GroupSubset& y);
GroupSubset set_intersection(const GroupSubset& x, const GroupSubset& y);
GroupSubset set_difference(const GroupSubset& x, const GroupSubset& y);
GroupSubset complement(const GroupSubset& x);

GroupSubset translate(const GroupSubset& x, int g_index);
// Exact sumset {a+b}. Rejects empty operands and parent mismatch.
GroupSubset minkowski_sum(const GroupSubset& x, const GroupSubset& y);
GroupSubset negate(const GroupSubset& x);
GroupSubset dilate2(const GroupSubset& x);
// Preimage of doubling; odd group order required.
GroupSubset halve_set(const GroupSubset& x);

// Stabilizer P(S) = {g : S+g = S}. P(empty) = P(G) = G.
Subgroup period(const GroupSubset& s);
bool is_h_periodic(const GroupSubset& s, const Subgroup& h);
bool is_aperiodic(const GroupSubset& s);

// S = partial ∪ periodic_part with periodic_part the union of all full
// H-cosets inside S.
struct QuasiperiodicDecomposition {
  GroupSubset partial;        // S0, meets at most one H-coset
  GroupSubset periodic_part;  // S1
};

// H must be nontrivial. Empty result when S0 spreads over two or more
// H-cosets.
std::optional<QuasiperiodicDecomposition> quasiperiodic_decomposition(const GroupSubset& s,
                                                                      const Subgroup& h);

struct ArithmeticProgression {
  int start;       // element index
  int difference;  // element index, nonzero
};

// S = {a, a+d, ..., a+(|S|-1)d} with distinct members for the given d;
// start returned when such a representation exists.
std::optional<int> ap_start_with_difference(const GroupSubset& s, int d);
// Smallest valid difference by element index.
std::optional<ArithmeticProgression> is_arithmetic_progression(const GroupSubset& s);
// Every valid difference, ascending.
std::vector<int> ap_differences(const GroupSubset& s);

struct AlmostProgression {
  int difference;
  int missing;  // x not in S with S + {x} an AP of that difference
};

// Smallest (difference, missing) pair, difference-major. A set that is
// already an AP and extends by one endpoint also qualifies.
std::optional<AlmostProgression> is_almost_progression(const GroupSubset& s);

}  // namespace rainbow
