#include "rainbow/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rainbow {

FiniteAbelianGroup::FiniteAbelianGroup() = default;

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  long long n = 1;
  for (int f : factors_) {
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");
    n *= f;
    if (n > (1 << 26)) throw capacity_error("group order too large");
  }
  order_ = static_cast<int>(n);
  radix_.assign(factors_.size(), 1);
  for (int f = static_cast<int>(factors_.size()) - 2; f >= 0; --f)
    radix_[f] = radix_[f + 1] * factors_[f + 1];
  half_.assign(factors_.size(), -1);
  for (size_t f = 0; f < factors_.size(); ++f)
    if (factors_[f] % 2 == 1) half_[f] = (factors_[f] + 1) / 2;
}

void FiniteAbelianGroup::check_index(int i) const {
  if (i < 0 || i >= order_) throw std::invalid_argument("element index out of range");
}

int FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (static_cast<int>(x.coords.size()) != factor_count())
    throw std::invalid_argument("element dimension does not match group");
  int idx = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int c = x.coords[f];
    if (c < 0 || c >= factors_[f]) throw std::invalid_argument("element coordinate out of range");
    idx += c * radix_[f];
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(int index) const {
  check_index(index);
  GroupElement x;
  x.coords.resize(factors_.size());
  for (size_t f = 0; f < factors_.size(); ++f)
    x.coords[f] = (index / radix_[f]) % factors_[f];
  return x;
}

int FiniteAbelianGroup::add_index(int i, int j) const {
  check_index(i);
  check_index(j);
  int out = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int n = factors_[f], p = radix_[f];
    int s = (i / p) % n + (j / p) % n;
    if (s >= n) s -= n;
    out += s * p;
  }
  return out;
}

int FiniteAbelianGroup::sub_index(int i, int j) const { return add_index(i, neg_index(j)); }

int FiniteAbelianGroup::neg_index(int i) const {
  check_index(i);
  int out = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int n = factors_[f], p = radix_[f];
    int c = (i / p) % n;
    out += (c == 0 ? 0 : n - c) * p;
  }
  return out;
}

int FiniteAbelianGroup::scalar_index(long long k, int i) const {
  check_index(i);
  int out = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int n = factors_[f], p = radix_[f];
    long long c = ((i / p) % n) * (k % n) % n;
    if (c < 0) c += n;
    out += static_cast<int>(c) * p;
  }
  return out;
}

int FiniteAbelianGroup::halve_index(int i) const {
  if (!odd_order()) throw std::domain_error("halve: odd order required");
  check_index(i);
  int out = 0;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int n = factors_[f], p = radix_[f];
    long long c = static_cast<long long>((i / p) % n) * half_[f] % n;
    out += static_cast<int>(c) * p;
  }
  return out;
}

int FiniteAbelianGroup::element_order(int i) const {
  check_index(i);
  int ord = 1;
  for (size_t f = 0; f < factors_.size(); ++f) {
    int n = factors_[f], c = (i / radix_[f]) % n;
    int o = n / std::gcd(n, c == 0 ? n : c);
    ord = std::lcm(ord, o);
  }
  return ord;
}

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& x, const GroupElement& y) {
  return g.element_at(g.add_index(g.index_of(x), g.index_of(y)));
}

GroupElement scalar_mul(const FiniteAbelianGroup& g, long long k, const GroupElement& x) {
  return g.element_at(g.scalar_index(k, g.index_of(x)));
}

GroupElement halve(const FiniteAbelianGroup& g, const GroupElement& x) {
  return g.element_at(g.halve_index(g.index_of(x)));
}

Subgroup make_subgroup(const FiniteAbelianGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw std::invalid_argument("subgroup must be nonempty");
  Bitset mask(g.order());
  for (int m : members) {
    if (m < 0 || m >= g.order()) throw std::invalid_argument("subgroup member out of range");
    mask.set(m);
  }
  if (!mask.test(0)) throw std::invalid_argument("subgroup must contain the identity");
  for (int a : members) {
    if (!mask.test(g.neg_index(a))) throw std::invalid_argument("subgroup not closed under negation");
    for (int b : members)
      if (!mask.test(g.add_index(a, b))) throw std::invalid_argument("subgroup not closed under addition");
  }
  if (g.order() % static_cast<int>(members.size()) != 0)
    throw std::invalid_argument("subgroup size must divide group order");
  return Subgroup{g, std::move(members), std::move(mask)};
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& g) {
  Bitset mask(g.order());
  mask.set(0);
  return Subgroup{g, {0}, std::move(mask)};
}

Subgroup full_subgroup(const FiniteAbelianGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Bitset mask(g.order());
  for (int i = 0; i < g.order(); ++i) mask.set(i);
  return Subgroup{g, std::move(all), std::move(mask)};
}

Subgroup generated_subgroup(const FiniteAbelianGroup& g, const std::vector<int>& generators) {
  Bitset mask(g.order());
  mask.set(0);
  std::vector<int> work{0};
  for (int gen : generators) {
    if (gen < 0 || gen >= g.order()) throw std::invalid_argument("generator out of range");
    if (!mask.test(gen)) {
      mask.set(gen);
      work.push_back(gen);
    }
  }
  // close under pairwise addition; inverses follow since the group is finite
  for (size_t head = 0; head < work.size(); ++head) {
    for (size_t k = 0; k <= head; ++k) {
      int s = g.add_index(work[head], work[k]);
      if (!mask.test(s)) {
        mask.set(s);
        work.push_back(s);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return Subgroup{g, std::move(work), std::move(mask)};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, int max_order) {
  if (g.order() > max_order) throw capacity_error("subgroup enumeration: group order above bound");
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> found;
  auto push = [&](Subgroup h) {
    if (seen.insert(h.members).second) found.push_back(std::move(h));
  };
  for (int i = 0; i < g.order(); ++i) push(generated_subgroup(g, {i}));
  // join pairs until no new subgroup appears
  for (size_t a = 0; a < found.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      if (found[a].mask.is_subset_of(found[b].mask) || found[b].mask.is_subset_of(found[a].mask))
        continue;
      std::vector<int> gens = found[a].members;
      gens.insert(gens.end(), found[b].members.begin(), found[b].members.end());
      push(generated_subgroup(g, gens));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members < y.members;
  });
  return found;
}

CosetDecomposition cosets(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  CosetDecomposition q;
  q.parent = g;
  q.subgroup = h;
  q.project.assign(g.order(), -1);
  for (int i = 0; i < g.order(); ++i) {
    if (q.project[i] >= 0) continue;
    int id = q.size();
    q.rep.push_back(i);
    std::vector<int> cs;
    cs.reserve(h.size());
    for (int m : h.members) {
      int e = g.add_index(i, m);
      q.project[e] = id;
      cs.push_back(e);
    }
    std::sort(cs.begin(), cs.end());
    q.cosets.push_back(std::move(cs));
  }
  return q;
}

int quotient_project(const CosetDecomposition& q, int element_index) {
  if (element_index < 0 || element_index >= q.parent.order())
    throw std::invalid_argument("element index out of range");
  return q.project[element_index];
}

int quotient_project(const FiniteAbelianGroup& g, const Subgroup& h, int element_index) {
  return quotient_project(cosets(g, h), element_index);
}

}  // namespace rainbow
