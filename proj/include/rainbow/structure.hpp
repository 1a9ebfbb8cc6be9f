#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/group.hpp"
#include "rainbow/subset.hpp"

namespace rainbow {

// Certificate for the odd-order structure: after translating by g, the
// apex class sits inside the proper subgroup H, colors within H stay
// rainbow-free, and the two outside classes are H-periodic and closed
// under negation and doubling.
struct RegularityWitness {
  int translation;  // element index g
  Subgroup subgroup;
  ColorLabel apex;
};

struct RegularityDiagnostics {
  bool apex_inside = false;
  bool induced_rainbow_free = false;
  bool outside_periodic = false;
  bool closed_neg_double = false;

  bool ok() const {
    return apex_inside && induced_rainbow_free && outside_periodic && closed_neg_double;
  }
};

// Odd-order groups only; H must be proper.
RegularityDiagnostics check_regular(const ThreeColoring& c, const Subgroup& h, ColorLabel apex,
                                    int translation);

// Search order: translations by element index, subgroups by ascending
// size then member order, apex labels A, B, C. The first hit is returned.
std::optional<RegularityWitness> find_regularity_witness(const ThreeColoring& c);
std::vector<RegularityWitness> all_regularity_witnesses(const ThreeColoring& c);

// Certificate for even cyclic orders n = 2^m * l with l > 1 odd: some
// color class sits inside one coset of H = H' + (even part), H' a proper
// subgroup of the odd part, and the other two classes are H-periodic away
// from that coset (equivalently, off H once a translation puts 0 in the
// apex class). Closure under negation/doubling is not part of the
// statement here; whether it happens to hold after recentering is
// recorded only.
struct EvenRegularityWitness {
  Subgroup odd_part_subgroup;  // H'
  Subgroup subgroup;           // H
  ColorLabel apex;
  int apex_coset_rep;  // least element index of the coset holding the apex class
  bool closure_analogue_holds;
};

std::optional<EvenRegularityWitness> find_regularity_witness_even(const ThreeColoring& c);

// Gate + per-label-assignment evaluation of the coset-triple bound: for
// H-cosets X, Y, Z in arithmetic progression and classes U, V, W meeting
// them as assigned, max of the pairwise sums |X∩U|+|Y∩V|, |X∩U|+|Z∩W|,
// |Z∩W|+|Y∩V| stays at most |H|; equality forces a refining subgroup K.
struct ThreeCosetsEquality {
  int pair;  // 0: first+second, 1: first+third, 2: third+second
  std::optional<Subgroup> refinement;
  bool reverified = false;
};

struct ThreeCosetsAssignment {
  ColorLabel on_x, on_y, on_z;
  bool applicable = false;  // all three intersections nonempty
  int size_x = 0, size_y = 0, size_z = 0;
  int max_pair_sum = 0;
  bool inequality_holds = false;
  std::vector<ThreeCosetsEquality> equalities;
};

struct ThreeCosetsReport {
  bool applicable = false;  // group odd, coloring rainbow-free, cosets in AP
  std::string note;
  std::vector<ThreeCosetsAssignment> assignments;

  bool all_hold() const {
    if (!applicable) return true;
    for (const auto& a : assignments) {
      if (!a.applicable) continue;
      if (!a.inequality_holds) return false;
      for (const auto& e : a.equalities)
        if (!e.refinement || !e.reverified) return false;
    }
    return true;
  }
};

// Representatives x_rep, y_rep, z_rep pick the three H-cosets; all 6
// label-to-coset assignments are evaluated.
ThreeCosetsReport check_three_cosets(const ThreeColoring& c, const Subgroup& h, int x_rep,
                                     int y_rep, int z_rep);

// Runs the coset-triple bound over every proper subgroup, every AP triple
// of its cosets, and all 6 label assignments of one rainbow-free coloring.
// Intersection sizes come from per-coset count tables, so the whole
// harvest stays cheap; only equality instances materialize sets for the
// refinement search.
struct ThreeCosetsSweepTally {
  long long applicable_assignments = 0;
  long long inequality_violations = 0;
  long long equality_instances = 0;
  long long equality_without_refinement = 0;

  void absorb(const ThreeCosetsSweepTally& o) {
    applicable_assignments += o.applicable_assignments;
    inequality_violations += o.inequality_violations;
    equality_instances += o.equality_instances;
    equality_without_refinement += o.equality_without_refinement;
  }
};

ThreeCosetsSweepTally sweep_three_cosets(const ThreeColoring& c,
                                         const std::vector<Subgroup>& subgroups);

// Returns is_rainbow_free(c); throws when the witness conditions fail.
bool check_sufficiency(const ThreeColoring& c, const RegularityWitness& w);

// Exhaustive completeness sweeps: enumerate the rainbow-free colorings
// with nonempty classes and certify every one of them.
struct CompletenessSweep {
  long long colorings_checked = 0;  // rainbow-free assignments reached
  long long rainbow_free_count = 0; // of these, with three nonempty classes
  long long witnesses_found = 0;
  std::vector<ThreeColoring> failures;
};

CompletenessSweep sweep_odd_regularity(const FiniteAbelianGroup& g, const EnumerationOptions& opt);
CompletenessSweep sweep_even_regularity(const FiniteAbelianGroup& g, const EnumerationOptions& opt);

}  // namespace rainbow
