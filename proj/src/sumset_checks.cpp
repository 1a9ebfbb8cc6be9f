#include "rainbow/sumset_checks.hpp"

#include <algorithm>
#include <random>

namespace rainbow {

namespace {

void require_usable_pair(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.parent() == b.parent())) throw std::invalid_argument("subsets live in different groups");
  if (a.empty() || b.empty()) throw std::invalid_argument("empty operand");
}

std::optional<Subgroup> common_quasiperiodic_subgroup(const GroupSubset& a, const GroupSubset& b) {
  for (const Subgroup& h : enumerate_subgroups(a.parent())) {
    if (h.is_trivial() || h.is_full()) continue;
    if (quasiperiodic_decomposition(a, h) && quasiperiodic_decomposition(b, h)) return h;
  }
  return std::nullopt;
}

}  // namespace

KneserReport verify_kneser(const GroupSubset& a, const GroupSubset& b) {
  require_usable_pair(a, b);
  GroupSubset sum = minkowski_sum(a, b);
  Subgroup h = period(sum);
  GroupSubset ah = minkowski_sum(a, GroupSubset(a.parent(), h.members));
  GroupSubset bh = minkowski_sum(b, GroupSubset(b.parent(), h.members));
  KneserReport r;
  r.sumset_size = sum.cardinality();
  r.saturated_bound = ah.cardinality() + bh.cardinality() - h.size();
  r.stabilizer = std::move(h);
  r.bound_holds = r.sumset_size >= r.saturated_bound;
  r.small_sumset = r.sumset_size <= a.cardinality() + b.cardinality() - 1;
  r.equality_when_small = !r.small_sumset || r.sumset_size == r.saturated_bound;
  return r;
}

KstClassification kst_case(const GroupSubset& a, const GroupSubset& b) {
  require_usable_pair(a, b);
  const int n = a.parent().order();
  GroupSubset sum = minkowski_sum(a, b);
  KstClassification r{};
  if (sum.cardinality() != a.cardinality() + b.cardinality() - 1) {
    r.note = "sumset size differs from |A|+|B|-1";
    return r;
  }
  if (sum.cardinality() > n - 2) {
    r.note = "sumset larger than |G|-2";
    return r;
  }
  if (!is_aperiodic(sum)) {
    r.note = "sumset is periodic";
    return r;
  }
  r.hypotheses_met = true;
  r.singleton_side = std::min(a.cardinality(), b.cardinality()) == 1;
  std::vector<int> da = ap_differences(a);
  std::vector<int> db = ap_differences(b);
  std::vector<int> common;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
  if (!common.empty()) r.common_difference = common.front();
  r.quasiperiodic_subgroup = common_quasiperiodic_subgroup(a, b);
  return r;
}

GrynkiewiczClassification grynkiewicz_case(const GroupSubset& a, const GroupSubset& b) {
  require_usable_pair(a, b);
  const auto& g = a.parent();
  const int n = g.order();
  GrynkiewiczClassification r{};
  if (n % 2 == 0) {
    r.note = "group order is even";
    return r;
  }
  GroupSubset sum = minkowski_sum(a, b);
  if (sum.cardinality() != a.cardinality() + b.cardinality()) {
    r.note = "sumset size differs from |A|+|B|";
    return r;
  }
  if (sum.cardinality() > n - 3) {
    r.note = "sumset larger than |G|-3";
    return r;
  }
  if (!is_aperiodic(sum)) {
    r.note = "sumset is periodic";
    return r;
  }
  r.hypotheses_met = true;
  int ca = a.cardinality(), cb = b.cardinality();
  r.small_side = std::min(ca, cb) == 2 || (ca == 3 && cb == 3);
  r.quasiperiodic_subgroup = common_quasiperiodic_subgroup(a, b);
  for (int x = 0; x < n; ++x) {
    GroupSubset ax = a;
    ax.add(x);
    for (int y = 0; y < n; ++y) {
      GroupSubset by = b;
      by.add(y);
      if (minkowski_sum(ax, by).cardinality() == ax.cardinality() + by.cardinality() - 1)
        r.extension_pairs.emplace_back(x, y);
    }
  }
  return r;
}

FillLemmaReport verify_fill_lemma(const GroupSubset& a, const GroupSubset& b) {
  require_usable_pair(a, b);
  const auto& g = a.parent();
  const int n = g.order();
  FillLemmaReport r{};
  int total = a.cardinality() + b.cardinality();
  if (total < n) return r;
  r.hypotheses_met = true;
  GroupSubset sum = minkowski_sum(a, b);
  r.sum_full = sum.cardinality() == n;
  if (total > n) {
    r.holds = r.sum_full;
    return r;
  }
  if (r.sum_full) {
    r.holds = true;
    return r;
  }
  Subgroup h = period(sum);
  GroupSubset missing = complement(sum);
  bool single_coset = missing.cardinality() == h.size();
  if (single_coset) {
    int rep = missing.elements().front();
    single_coset = missing == translate(GroupSubset(g, h.members), rep);
    if (single_coset) r.excluded_coset_rep = rep;
  }
  r.holds = single_coset && is_h_periodic(a, h) && is_h_periodic(b, h);
  r.subgroup = std::move(h);
  return r;
}

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {  // inclusive
  return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
}

FiniteAbelianGroup random_group(Rng& rng, int max_order) {
  int n = rand_int(rng, 2, max_order);
  // sometimes present a composite order as a two-factor direct sum
  if (rand_int(rng, 0, 2) == 0) {
    std::vector<int> divisors;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    if (!divisors.empty()) {
      int d = divisors[rand_int(rng, 0, static_cast<int>(divisors.size()) - 1)];
      return FiniteAbelianGroup({d, n / d});
    }
  }
  return FiniteAbelianGroup({n});
}

GroupSubset random_nonempty_subset(Rng& rng, const FiniteAbelianGroup& g) {
  int n = g.order();
  int size = rand_int(rng, 1, n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(size);
  return GroupSubset(g, idx);
}

GroupSubset random_ap(Rng& rng, const FiniteAbelianGroup& g, int d, int min_len) {
  int n = g.order();
  int len = rand_int(rng, min_len, std::max(min_len, n / 2));
  int start = rand_int(rng, 0, n - 1);
  GroupSubset s(g);
  int cur = start;
  for (int k = 0; k < len; ++k) {
    s.add(cur);
    cur = g.add_index(cur, d);
  }
  return s;
}

GroupSubset random_quasiperiodic(Rng& rng, const FiniteAbelianGroup& g) {
  auto subgroups = enumerate_subgroups(g);
  std::vector<Subgroup> usable;
  for (auto& h : subgroups)
    if (!h.is_trivial() && !h.is_full()) usable.push_back(h);
  if (usable.empty()) return random_nonempty_subset(rng, g);
  const Subgroup& h = usable[rand_int(rng, 0, static_cast<int>(usable.size()) - 1)];
  auto q = cosets(g, h);
  GroupSubset s(g);
  for (int k = 0; k < q.size(); ++k)
    if (rand_int(rng, 0, 2) == 0)
      for (int e : q.cosets[k]) s.add(e);
  // partial slice of one more coset
  int k = rand_int(rng, 0, q.size() - 1);
  int take = rand_int(rng, 1, h.size() - 1 > 0 ? h.size() - 1 : 1);
  for (int i = 0; i < take && i < static_cast<int>(q.cosets[k].size()); ++i)
    s.add(q.cosets[k][i]);
  return s;
}

std::pair<GroupSubset, GroupSubset> random_pair(Rng& rng, const FiniteAbelianGroup& g, int mode) {
  int n = g.order();
  switch (mode) {
    case 1: {  // two APs sharing a difference
      int d = rand_int(rng, 1, n - 1);
      return {random_ap(rng, g, d, 1), random_ap(rng, g, d, 1)};
    }
    case 2:
      return {random_quasiperiodic(rng, g), random_quasiperiodic(rng, g)};
    case 3: {  // singleton against anything
      GroupSubset a(g);
      a.add(rand_int(rng, 0, n - 1));
      return {a, random_nonempty_subset(rng, g)};
    }
    case 4: {  // AP with an interior point removed, against an AP
      int d = rand_int(rng, 1, n - 1);
      GroupSubset a = random_ap(rng, g, d, 3);
      auto elems = a.elements();
      if (a.cardinality() >= 3) a.remove(elems[rand_int(rng, 1, a.cardinality() - 2)]);
      return {a, random_ap(rng, g, d, 1)};
    }
    default:
      return {random_nonempty_subset(rng, g), random_nonempty_subset(rng, g)};
  }
}

}  // namespace

SumsetTrialTally run_sumset_trials(std::uint64_t seed, long long trials, int max_order) {
  Rng rng(seed);
  SumsetTrialTally t;
  for (long long i = 0; i < trials; ++i) {
    FiniteAbelianGroup g = random_group(rng, max_order);
    auto [a, b] = random_pair(rng, g, static_cast<int>(i % 5));
    ++t.trials;

    KneserReport kn = verify_kneser(a, b);
    ++t.kneser_checked;
    if (!kn.ok()) ++t.kneser_violations;

    KstClassification kc = kst_case(a, b);
    if (kc.hypotheses_met) {
      ++t.kst_applicable;
      if (!kc.some_case()) ++t.kst_no_case;
    }

    GrynkiewiczClassification gc = grynkiewicz_case(a, b);
    if (gc.hypotheses_met) {
      ++t.grynkiewicz_applicable;
      if (!gc.some_case()) ++t.grynkiewicz_no_case;
    }

    FillLemmaReport fr = verify_fill_lemma(a, b);
    if (fr.hypotheses_met) {
      ++t.fill_applicable;
      if (!fr.holds) ++t.fill_violations;
    }
  }
  return t;
}

}  // namespace rainbow
