#include "rainbow/structure.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// Precomputed index tables plus the proper-subgroup list, shared across a
// whole sweep so per-coloring work stays linear-ish.
struct OddWitnessSearcher {
  FiniteAbelianGroup g;
  int n;
  std::vector<int> add, neg, dbl;
  std::vector<Subgroup> proper;  // ascending size, then member order

  explicit OddWitnessSearcher(const FiniteAbelianGroup& group)
      : g(group), n(group.order()), add(static_cast<size_t>(n) * n), neg(n), dbl(n) {
    for (int i = 0; i < n; ++i) {
      neg[i] = g.neg_index(i);
      dbl[i] = g.double_index(i);
      for (int j = 0; j < n; ++j) add[static_cast<size_t>(i) * n + j] = g.add_index(i, j);
    }
    for (auto& h : enumerate_subgroups(g))
      if (!h.is_full()) proper.push_back(std::move(h));
  }

  int plus(int i, int j) const { return add[static_cast<size_t>(i) * n + j]; }

  void translated(const ThreeColoring& c, int t, std::vector<ColorLabel>& out) const {
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = c.label(plus(i, t));
  }

  bool apex_inside(const std::vector<ColorLabel>& tl, const Subgroup& h, ColorLabel apex) const {
    for (int i = 0; i < n; ++i)
      if (tl[i] == apex && !h.contains(i)) return false;
    return true;
  }

  bool induced_rainbow_free(const std::vector<ColorLabel>& tl, const Subgroup& h) const {
    for (int x : h.members) {
      for (int z : h.members) {
        int y = plus(dbl[z], neg[x]);
        ColorLabel a = tl[x], b = tl[y], c = tl[z];
        if (a != b && a != c && b != c) return false;
      }
    }
    return true;
  }

  bool outside_periodic(const std::vector<ColorLabel>& tl, const Subgroup& h, ColorLabel apex) const {
    for (int e = 0; e < n; ++e) {
      ColorLabel lab = tl[e];
      if (lab == apex || h.contains(e)) continue;
      for (int t : h.members) {
        if (t == 0) continue;
        if (tl[plus(e, t)] != lab) return false;
      }
    }
    return true;
  }

  // X = -X = 2X for both non-apex classes off H; doubling and negation
  // keep the outside invariant in odd order, so label equality suffices
  bool closed_neg_double(const std::vector<ColorLabel>& tl, const Subgroup& h, ColorLabel apex) const {
    for (int e = 0; e < n; ++e) {
      ColorLabel lab = tl[e];
      if (lab == apex || h.contains(e)) continue;
      if (tl[neg[e]] != lab || tl[dbl[e]] != lab) return false;
    }
    return true;
  }

  bool passes(const std::vector<ColorLabel>& tl, const Subgroup& h, ColorLabel apex) const {
    return apex_inside(tl, h, apex) && closed_neg_double(tl, h, apex) &&
           outside_periodic(tl, h, apex) && induced_rainbow_free(tl, h);
  }

  std::optional<RegularityWitness> find(const ThreeColoring& c) const {
    std::vector<ColorLabel> tl;
    for (int t = 0; t < n; ++t) {
      translated(c, t, tl);
      for (const Subgroup& h : proper)
        for (ColorLabel apex : kAllLabels)
          if (passes(tl, h, apex)) return RegularityWitness{t, h, apex};
    }
    return std::nullopt;
  }

  std::vector<RegularityWitness> find_all(const ThreeColoring& c) const {
    std::vector<RegularityWitness> out;
    std::vector<ColorLabel> tl;
    for (int t = 0; t < n; ++t) {
      translated(c, t, tl);
      for (const Subgroup& h : proper)
        for (ColorLabel apex : kAllLabels)
          if (passes(tl, h, apex)) out.push_back(RegularityWitness{t, h, apex});
    }
    return out;
  }
};

void require_odd_witness_input(const ThreeColoring& c) {
  if (!c.group().odd_order()) throw std::domain_error("even order: use the even-case checker");
  if (!is_rainbow_free(c)) throw std::invalid_argument("coloring has a rainbow triple");
  if (!has_nonempty_classes(c)) throw std::invalid_argument("coloring must use all three colors");
}

struct EvenWitnessSearcher {
  FiniteAbelianGroup g;
  int n = 0, odd_part = 1, even_part = 1;

  struct Candidate {
    Subgroup h_prime;
    Subgroup h;
    CosetDecomposition quotient;
  };
  std::vector<Candidate> candidates;  // ascending |H|

  explicit EvenWitnessSearcher(const FiniteAbelianGroup& group) : g(group), n(group.order()) {
    if (!g.is_cyclic_presentation())
      throw std::invalid_argument("even-case witness search needs a cyclic presentation");
    if (n % 2 == 1) throw std::invalid_argument("odd order: use the odd-order witness search");
    odd_part = n;
    while (odd_part % 2 == 0) odd_part /= 2;
    even_part = n / odd_part;
    if (odd_part == 1)
      throw std::domain_error("order is a power of two: no rainbow-free colorings with nonempty classes");
    for (int t = 1; t < odd_part; ++t) {
      if (odd_part % t != 0) continue;
      Subgroup h = generated_subgroup(g, {odd_part / t});  // order t * even_part
      Subgroup hp = generated_subgroup(g, {n / t % n});     // order t, inside the odd part
      CosetDecomposition q = cosets(g, h);
      candidates.push_back(Candidate{std::move(hp), std::move(h), std::move(q)});
    }
  }

  std::optional<EvenRegularityWitness> find(const ThreeColoring& c) const {
    for (const Candidate& cand : candidates) {
      const Subgroup& h = cand.h;
      const CosetDecomposition& q = cand.quotient;
      for (ColorLabel apex : kAllLabels) {
        int coset = -1;
        bool single = true;
        for (int i = 0; i < n && single; ++i) {
          if (c.label(i) != apex) continue;
          if (coset < 0)
            coset = q.project[i];
          else if (q.project[i] != coset)
            single = false;
        }
        if (!single || coset < 0) continue;
        // normalize 0 into the apex class: periodicity is required off the
        // apex coset, which the translated coloring sees as off H
        bool periodic = true;
        for (int e = 0; e < n && periodic; ++e) {
          ColorLabel lab = c.label(e);
          if (lab == apex || q.project[e] == coset) continue;
          for (int t : h.members) {
            if (t == 0) continue;
            if (c.label(g.add_index(e, t)) != lab) {
              periodic = false;
              break;
            }
          }
        }
        if (!periodic) continue;
        return EvenRegularityWitness{cand.h_prime, h, apex, q.rep[coset],
                                     closure_analogue(c, h, apex, q.rep[coset])};
      }
    }
    return std::nullopt;
  }

  // after recentering on the apex coset, do the outside classes happen to
  // satisfy X = -X = 2X? recorded, never asserted
  bool closure_analogue(const ThreeColoring& c, const Subgroup& h, ColorLabel apex, int rep) const {
    ThreeColoring tc = translate_coloring(c, rep);
    for (ColorLabel lab : kAllLabels) {
      if (lab == apex) continue;
      GroupSubset outside(g);
      for (int i = 0; i < n; ++i)
        if (tc.label(i) == lab && !h.contains(i)) outside.add(i);
      if (outside.empty()) continue;
      if (!(negate(outside) == outside)) return false;
      if (!(dilate2(outside) == outside)) return false;
    }
    return true;
  }
};

void require_even_witness_input(const ThreeColoring& c) {
  if (!is_rainbow_free(c)) throw std::invalid_argument("coloring has a rainbow triple");
  if (!has_nonempty_classes(c)) throw std::invalid_argument("coloring must use all three colors");
}

bool inside_one_coset_of(const GroupSubset& s, const CosetDecomposition& qk) {
  int seen = -1;
  for (int e = s.bits().next_set(0); e >= 0; e = s.bits().next_set(e + 1)) {
    if (seen < 0)
      seen = qk.project[e];
    else if (qk.project[e] != seen)
      return false;
  }
  return true;
}

// first proper subgroup of H (ascending) with the two paired sets periodic
// and the third confined to one of its cosets
std::optional<Subgroup> find_coset_refinement(const FiniteAbelianGroup& g,
                                              const std::vector<Subgroup>& refinements,
                                              const GroupSubset& first, const GroupSubset& second,
                                              const GroupSubset& third) {
  for (const Subgroup& k : refinements) {
    if (!is_h_periodic(first, k) || !is_h_periodic(second, k)) continue;
    if (inside_one_coset_of(third, cosets(g, k))) return k;
  }
  return std::nullopt;
}

std::vector<Subgroup> proper_subgroups_of(const std::vector<Subgroup>& lattice, const Subgroup& h) {
  std::vector<Subgroup> out;
  for (const Subgroup& k : lattice)
    if (k.size() < h.size() && k.mask.is_subset_of(h.mask)) out.push_back(k);
  return out;
}

}  // namespace

RegularityDiagnostics check_regular(const ThreeColoring& c, const Subgroup& h, ColorLabel apex,
                                    int translation) {
  const auto& g = c.group();
  if (!g.odd_order()) throw std::domain_error("even order: use the even-case checker");
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  if (h.is_full()) throw std::invalid_argument("witness subgroup must be proper");
  OddWitnessSearcher s(g);
  std::vector<ColorLabel> tl;
  s.translated(c, translation, tl);
  RegularityDiagnostics d;
  d.apex_inside = s.apex_inside(tl, h, apex);
  d.induced_rainbow_free = s.induced_rainbow_free(tl, h);
  d.outside_periodic = s.outside_periodic(tl, h, apex);
  d.closed_neg_double = s.closed_neg_double(tl, h, apex);
  return d;
}

std::optional<RegularityWitness> find_regularity_witness(const ThreeColoring& c) {
  require_odd_witness_input(c);
  return OddWitnessSearcher(c.group()).find(c);
}

std::vector<RegularityWitness> all_regularity_witnesses(const ThreeColoring& c) {
  require_odd_witness_input(c);
  return OddWitnessSearcher(c.group()).find_all(c);
}

std::optional<EvenRegularityWitness> find_regularity_witness_even(const ThreeColoring& c) {
  EvenWitnessSearcher s(c.group());
  require_even_witness_input(c);
  return s.find(c);
}

ThreeCosetsReport check_three_cosets(const ThreeColoring& c, const Subgroup& h, int x_rep,
                                     int y_rep, int z_rep) {
  const auto& g = c.group();
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  if (h.is_full()) throw std::invalid_argument("subgroup must be proper");
  ThreeCosetsReport report;
  if (!g.odd_order()) {
    report.note = "group order is even";
    return report;
  }
  if (!is_rainbow_free(c)) {
    report.note = "coloring has a rainbow triple";
    return report;
  }
  CosetDecomposition q = cosets(g, h);
  int px = quotient_project(q, x_rep), py = quotient_project(q, y_rep),
      pz = quotient_project(q, z_rep);
  if (q.add(px, py) != q.dbl(pz)) {
    report.note = "cosets are not in arithmetic progression";
    return report;
  }
  report.applicable = true;

  std::vector<Subgroup> refinements = proper_subgroups_of(enumerate_subgroups(g), h);

  auto class_in_coset = [&](ColorLabel lab, int coset_id) {
    GroupSubset s(g);
    for (int e : q.cosets[coset_id])
      if (c.label(e) == lab) s.add(e);
    return s;
  };

  constexpr ColorLabel L[3] = {ColorLabel::A, ColorLabel::B, ColorLabel::C};
  constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms) {
    ThreeCosetsAssignment a;
    a.on_x = L[p[0]];
    a.on_y = L[p[1]];
    a.on_z = L[p[2]];
    GroupSubset sx = class_in_coset(a.on_x, px);
    GroupSubset sy = class_in_coset(a.on_y, py);
    GroupSubset sz = class_in_coset(a.on_z, pz);
    a.size_x = sx.cardinality();
    a.size_y = sy.cardinality();
    a.size_z = sz.cardinality();
    a.applicable = a.size_x > 0 && a.size_y > 0 && a.size_z > 0;
    if (a.applicable) {
      int s0 = a.size_x + a.size_y, s1 = a.size_x + a.size_z, s2 = a.size_z + a.size_y;
      a.max_pair_sum = std::max({s0, s1, s2});
      a.inequality_holds = a.max_pair_sum <= h.size();
      if (a.inequality_holds) {
        const int sums[3] = {s0, s1, s2};
        const GroupSubset* first[3] = {&sx, &sx, &sz};
        const GroupSubset* second[3] = {&sy, &sz, &sy};
        const GroupSubset* third[3] = {&sz, &sy, &sx};
        for (int pair = 0; pair < 3; ++pair) {
          if (sums[pair] != h.size()) continue;
          ThreeCosetsEquality eq;
          eq.pair = pair;
          eq.refinement = find_coset_refinement(g, refinements, *first[pair], *second[pair],
                                                *third[pair]);
          if (eq.refinement)
            eq.reverified = is_h_periodic(*first[pair], *eq.refinement) &&
                            is_h_periodic(*second[pair], *eq.refinement);
          a.equalities.push_back(std::move(eq));
        }
      }
    }
    report.assignments.push_back(std::move(a));
  }
  return report;
}

ThreeCosetsSweepTally sweep_three_cosets(const ThreeColoring& c,
                                         const std::vector<Subgroup>& subgroups) {
  const auto& g = c.group();
  if (!g.odd_order()) throw std::invalid_argument("coset-triple sweep needs an odd-order group");
  ThreeCosetsSweepTally tally;
  constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const Subgroup& h : subgroups) {
    if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
    if (h.is_full()) continue;
    CosetDecomposition q = cosets(g, h);
    const int t = q.size();
    std::vector<std::array<int, 3>> counts(t, {0, 0, 0});
    for (int e = 0; e < g.order(); ++e) ++counts[q.project[e]][static_cast<int>(c.label(e))];
    std::vector<Subgroup> refinements;  // built only if an equality shows up
    bool refinements_ready = false;
    for (int zc = 0; zc < t; ++zc) {
      int dz = q.dbl(zc);
      for (int xc = 0; xc < t; ++xc) {
        int yc = q.add(dz, q.neg(xc));
        for (auto& p : perms) {
          int sx = counts[xc][p[0]], sy = counts[yc][p[1]], sz = counts[zc][p[2]];
          if (sx == 0 || sy == 0 || sz == 0) continue;
          ++tally.applicable_assignments;
          int s0 = sx + sy, s1 = sx + sz, s2 = sz + sy;
          if (std::max({s0, s1, s2}) > h.size()) {
            ++tally.inequality_violations;
            continue;
          }
          const int sums[3] = {s0, s1, s2};
          for (int pair = 0; pair < 3; ++pair) {
            if (sums[pair] != h.size()) continue;
            ++tally.equality_instances;
            if (!refinements_ready) {
              refinements = proper_subgroups_of(subgroups, h);
              refinements_ready = true;
            }
            auto pick = [&](int coset_id, int lab) {
              GroupSubset s(g);
              for (int e : q.cosets[coset_id])
                if (static_cast<int>(c.label(e)) == lab) s.add(e);
              return s;
            };
            GroupSubset set_x = pick(xc, p[0]);
            GroupSubset set_y = pick(yc, p[1]);
            GroupSubset set_z = pick(zc, p[2]);
            const GroupSubset* first[3] = {&set_x, &set_x, &set_z};
            const GroupSubset* second[3] = {&set_y, &set_z, &set_y};
            const GroupSubset* third[3] = {&set_z, &set_y, &set_x};
            if (!find_coset_refinement(g, refinements, *first[pair], *second[pair], *third[pair]))
              ++tally.equality_without_refinement;
          }
        }
      }
    }
  }
  return tally;
}

bool check_sufficiency(const ThreeColoring& c, const RegularityWitness& w) {
  RegularityDiagnostics d = check_regular(c, w.subgroup, w.apex, w.translation);
  if (!d.ok()) throw std::invalid_argument("witness conditions do not hold");
  return is_rainbow_free(c);
}

CompletenessSweep sweep_odd_regularity(const FiniteAbelianGroup& g, const EnumerationOptions& opt) {
  if (!g.odd_order()) throw std::invalid_argument("odd-order sweep on an even-order group");
  OddWitnessSearcher searcher(g);
  CompletenessSweep sweep;
  EnumerationStats stats = enumerate_rainbow_free(g, opt, [&](const ThreeColoring& c) {
    if (searcher.find(c))
      ++sweep.witnesses_found;
    else
      sweep.failures.push_back(c);
  });
  sweep.colorings_checked = stats.complete;
  sweep.rainbow_free_count = stats.emitted;
  return sweep;
}

CompletenessSweep sweep_even_regularity(const FiniteAbelianGroup& g, const EnumerationOptions& opt) {
  EvenWitnessSearcher searcher(g);
  CompletenessSweep sweep;
  EnumerationStats stats = enumerate_rainbow_free(g, opt, [&](const ThreeColoring& c) {
    if (searcher.find(c))
      ++sweep.witnesses_found;
    else
      sweep.failures.push_back(c);
  });
  sweep.colorings_checked = stats.complete;
  sweep.rainbow_free_count = stats.emitted;
  return sweep;
}

}  // namespace rainbow
