#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/subset.hpp"

namespace rainbow {

// |A+B| >= |A+H| + |B+H| - |H| with H the stabilizer of A+B, and equality
// whenever |A+B| <= |A| + |B| - 1. Both flags must come back true on every
// input; a false flag means a bug, not a property of the data.
struct KneserReport {
  int sumset_size;
  Subgroup stabilizer;
  int saturated_bound;  // |A+H| + |B+H| - |H|
  bool bound_holds;
  bool small_sumset;  // |A+B| <= |A| + |B| - 1
  bool equality_when_small;

  bool ok() const { return bound_holds && equality_when_small; }
};

KneserReport verify_kneser(const GroupSubset& a, const GroupSubset& b);

// Case classification for aperiodic sumsets of size |A|+|B|-1 <= |G|-2:
// (i) one side a singleton, (ii) both sides APs with a common difference,
// (iii) both sides H-quasiperiodic for a common nontrivial proper H.
struct KstClassification {
  bool hypotheses_met;
  std::string note;  // which hypothesis failed
  bool singleton_side;
  std::optional<int> common_difference;       // smallest shared difference
  std::optional<Subgroup> quasiperiodic_subgroup;  // first by size then members

  bool some_case() const {
    return singleton_side || common_difference.has_value() || quasiperiodic_subgroup.has_value();
  }
};

KstClassification kst_case(const GroupSubset& a, const GroupSubset& b);

// Case classification for odd-order groups with A+B aperiodic of size
// |A|+|B| <= |G|-3: (i) min side 2 or both sides of size 3, (ii) both
// sides H-quasiperiodic, (iii) some a, b extend the pair to a sumset of
// size |A'|+|B'|-1. All extension pairs are reported.
struct GrynkiewiczClassification {
  bool hypotheses_met;
  std::string note;
  bool small_side;
  std::optional<Subgroup> quasiperiodic_subgroup;
  std::vector<std::pair<int, int>> extension_pairs;

  bool some_case() const {
    return small_side || quasiperiodic_subgroup.has_value() || !extension_pairs.empty();
  }
};

GrynkiewiczClassification grynkiewicz_case(const GroupSubset& a, const GroupSubset& b);

// |A|+|B| > |G| forces A+B = G; |A|+|B| = |G| forces A+B = G or
// A+B = G \ (a+H) with H = P(A+B) and A, B both H-periodic.
struct FillLemmaReport {
  bool hypotheses_met;
  bool sum_full;
  std::optional<Subgroup> subgroup;
  std::optional<int> excluded_coset_rep;  // least element of the missing coset
  bool holds;
};

FillLemmaReport verify_fill_lemma(const GroupSubset& a, const GroupSubset& b);

// Seeded randomized driver behind the sumset verification suite. Counters
// stay zero on a correct implementation.
struct SumsetTrialTally {
  long long trials = 0;
  long long kneser_checked = 0;
  long long kneser_violations = 0;
  long long kst_applicable = 0;
  long long kst_no_case = 0;
  long long grynkiewicz_applicable = 0;
  long long grynkiewicz_no_case = 0;
  long long fill_applicable = 0;
  long long fill_violations = 0;

  long long violations() const {
    return kneser_violations + kst_no_case + grynkiewicz_no_case + fill_violations;
  }
};

SumsetTrialTally run_sumset_trials(std::uint64_t seed, long long trials, int max_order = 49);

}  // namespace rainbow
