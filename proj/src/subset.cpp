#include "rainbow/subset.hpp"

#include <algorithm>

namespace rainbow {

namespace {

void require_same_parent(const GroupSubset& x, const GroupSubset& y) {
  if (!(x.parent() == y.parent())) throw std::invalid_argument("subsets live in different groups");
}

void require_subgroup_of(const GroupSubset& s, const Subgroup& h) {
  if (!(s.parent() == h.parent)) throw std::invalid_argument("subgroup belongs to a different group");
}

}  // namespace

GroupSubset GroupSubset::full(const FiniteAbelianGroup& g) {
  GroupSubset s(g);
  for (int i = 0; i < g.order(); ++i) s.add(i);
  return s;
}

GroupSubset set_union(const GroupSubset& x, const GroupSubset& y) {
  require_same_parent(x, y);
  GroupSubset out = x;
  out.bits_ |= y.bits_;
  return out;
}

GroupSubset set_intersection(const GroupSubset& x, const GroupSubset& y) {
  require_same_parent(x, y);
  GroupSubset out = x;
  out.bits_ &= y.bits_;
  return out;
}

GroupSubset set_difference(const GroupSubset& x, const GroupSubset& y) {
  require_same_parent(x, y);
  GroupSubset out = x;
  out.bits_.subtract(y.bits_);
  return out;
}

GroupSubset complement(const GroupSubset& x) {
  GroupSubset out(x.parent());
  for (int i = 0; i < x.parent().order(); ++i)
    if (!x.contains(i)) out.add(i);
  return out;
}

GroupSubset translate(const GroupSubset& x, int g_index) {
  const auto& g = x.parent();
  int n = g.order();
  if (g_index < 0 || g_index >= n) throw std::invalid_argument("element index out of range");
  // cyclic groups that fit one word: translation is a bit rotation
  if (g.is_cyclic_presentation() && n <= 64) {
    std::uint64_t w = x.bits().word(0);
    std::uint64_t mask = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::uint64_t r = g_index == 0 ? w : (((w << g_index) | (w >> (n - g_index))) & mask);
    GroupSubset out(g);
    out.bits_.set_word(0, r);
    return out;
  }
  GroupSubset out(g);
  for (int i = x.bits().next_set(0); i >= 0; i = x.bits().next_set(i + 1))
    out.add(g.add_index(i, g_index));
  return out;
}

GroupSubset minkowski_sum(const GroupSubset& x, const GroupSubset& y) {
  require_same_parent(x, y);
  if (x.empty() || y.empty()) throw std::invalid_argument("sumset of an empty set is rejected");
  const auto& g = x.parent();
  const GroupSubset& big = x.cardinality() >= y.cardinality() ? x : y;
  const GroupSubset& small = x.cardinality() >= y.cardinality() ? y : x;
  GroupSubset out(g);
  for (int t = small.bits().next_set(0); t >= 0; t = small.bits().next_set(t + 1)) {
    GroupSubset shifted = translate(big, t);
    out.bits_ |= shifted.bits();
  }
  return out;
}

GroupSubset negate(const GroupSubset& x) {
  const auto& g = x.parent();
  GroupSubset out(g);
  for (int i = x.bits().next_set(0); i >= 0; i = x.bits().next_set(i + 1)) out.add(g.neg_index(i));
  return out;
}

GroupSubset dilate2(const GroupSubset& x) {
  const auto& g = x.parent();
  GroupSubset out(g);
  for (int i = x.bits().next_set(0); i >= 0; i = x.bits().next_set(i + 1)) out.add(g.double_index(i));
  return out;
}

GroupSubset halve_set(const GroupSubset& x) {
  const auto& g = x.parent();
  if (!g.odd_order()) throw std::domain_error("halve_set: odd order required");
  GroupSubset out(g);
  for (int i = x.bits().next_set(0); i >= 0; i = x.bits().next_set(i + 1)) out.add(g.halve_index(i));
  return out;
}

Subgroup period(const GroupSubset& s) {
  const auto& g = s.parent();
  std::vector<int> members{0};
  for (int t = 1; t < g.order(); ++t) {
    bool stabilizes = true;
    for (int i = s.bits().next_set(0); i >= 0; i = s.bits().next_set(i + 1)) {
      if (!s.contains(g.add_index(i, t))) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) members.push_back(t);
  }
  return make_subgroup(g, std::move(members));
}

bool is_h_periodic(const GroupSubset& s, const Subgroup& h) {
  require_subgroup_of(s, h);
  const auto& g = s.parent();
  for (int t : h.members) {
    if (t == 0) continue;
    for (int i = s.bits().next_set(0); i >= 0; i = s.bits().next_set(i + 1))
      if (!s.contains(g.add_index(i, t))) return false;
  }
  return true;
}

bool is_aperiodic(const GroupSubset& s) {
  const auto& g = s.parent();
  for (int t = 1; t < g.order(); ++t) {
    bool stabilizes = true;
    for (int i = s.bits().next_set(0); i >= 0; i = s.bits().next_set(i + 1)) {
      if (!s.contains(g.add_index(i, t))) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) return false;
  }
  return true;
}

std::optional<QuasiperiodicDecomposition> quasiperiodic_decomposition(const GroupSubset& s,
                                                                      const Subgroup& h) {
  require_subgroup_of(s, h);
  if (h.is_trivial()) throw std::invalid_argument("quasiperiodic decomposition needs a nontrivial subgroup");
  const auto q = cosets(s.parent(), h);
  GroupSubset periodic_part(s.parent());
  GroupSubset partial(s.parent());
  int partial_coset = -1;
  for (int k = 0; k < q.size(); ++k) {
    int inside = 0;
    for (int e : q.cosets[k])
      if (s.contains(e)) ++inside;
    if (inside == 0) continue;
    if (inside == h.size()) {
      for (int e : q.cosets[k]) periodic_part.add(e);
    } else {
      if (partial_coset >= 0) return std::nullopt;
      partial_coset = k;
      for (int e : q.cosets[k])
        if (s.contains(e)) partial.add(e);
    }
  }
  return QuasiperiodicDecomposition{std::move(partial), std::move(periodic_part)};
}

std::optional<int> ap_start_with_difference(const GroupSubset& s, int d) {
  const auto& g = s.parent();
  if (s.empty()) throw std::invalid_argument("empty set has no progression form");
  if (d <= 0 || d >= g.order()) return std::nullopt;
  int size = s.cardinality();
  std::vector<int> starts;
  for (int i = s.bits().next_set(0); i >= 0; i = s.bits().next_set(i + 1))
    if (!s.contains(g.sub_index(i, d))) starts.push_back(i);
  if (starts.size() > 1) return std::nullopt;
  if (starts.empty()) {
    // every member has a predecessor: union of full <d>-cycles, an AP only
    // as a single full cycle
    if (size != g.element_order(d)) return std::nullopt;
    return s.bits().next_set(0);
  }
  int a = starts[0];
  int cur = a;
  for (int k = 1; k < size; ++k) {
    cur = g.add_index(cur, d);
    if (cur == a || !s.contains(cur)) return std::nullopt;
  }
  return a;
}

std::optional<ArithmeticProgression> is_arithmetic_progression(const GroupSubset& s) {
  const auto& g = s.parent();
  if (s.empty()) throw std::invalid_argument("empty set has no progression form");
  for (int d = 1; d < g.order(); ++d)
    if (auto a = ap_start_with_difference(s, d)) return ArithmeticProgression{*a, d};
  return std::nullopt;
}

std::vector<int> ap_differences(const GroupSubset& s) {
  const auto& g = s.parent();
  if (s.empty()) throw std::invalid_argument("empty set has no progression form");
  std::vector<int> out;
  for (int d = 1; d < g.order(); ++d)
    if (ap_start_with_difference(s, d)) out.push_back(d);
  return out;
}

std::optional<AlmostProgression> is_almost_progression(const GroupSubset& s) {
  const auto& g = s.parent();
  if (s.empty()) throw std::invalid_argument("empty set has no progression form");
  for (int d = 1; d < g.order(); ++d) {
    for (int x = 0; x < g.order(); ++x) {
      if (s.contains(x)) continue;
      GroupSubset t = s;
      t.add(x);
      if (ap_start_with_difference(t, d)) return AlmostProgression{d, x};
    }
  }
  return std::nullopt;
}

}  // namespace rainbow
