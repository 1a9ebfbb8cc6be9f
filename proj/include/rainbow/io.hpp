#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/group.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/subset.hpp"
#include "rainbow/sumset_checks.hpp"

namespace rainbow {

// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// Group literal: comma-separated factor orders, e.g. "9", "3,3", "3,2,2".
FiniteAbelianGroup parse_group_spec(const std::string& text);
std::string format_group_spec(const FiniteAbelianGroup& g);

// Subset literal: comma-separated element indices, e.g. "0,3,6".
std::vector<int> parse_index_list(const std::string& text);
GroupSubset parse_subset(const FiniteAbelianGroup& g, const std::string& text);

// Coloring file: a header line "group: n1,n2,..." followed by one line of
// A/B/C characters, position i = element index i.
std::string format_coloring(const ThreeColoring& c);
ThreeColoring parse_coloring(const std::string& text);
ThreeColoring read_coloring_file(const std::string& path);
void write_coloring_file(const std::string& path, const ThreeColoring& c);

std::string labels_string(const ThreeColoring& c);

Json classification_json(const PrimeClassification& c);
// Table row: n, p, q, formula, search, agree; absent values serialize as null.
Json mn_row_json(const MnResult& r);
MnResult mn_row_from_json(const Json& j);
// mvalue report: n, then only the requested sides, then agree.
Json mvalue_json(const MnResult& r, bool include_formula, bool include_search);

Json witness_json(const RegularityWitness& w);
Json even_witness_json(const EvenRegularityWitness& w);
Json sweep_json(const FiniteAbelianGroup& g, const CompletenessSweep& s);
Json sumset_tally_json(std::uint64_t seed, const SumsetTrialTally& t);

// Shared shape for the sumset verifiers: {hypotheses_met, cases, witnesses}.
Json kneser_json(const KneserReport& r);
Json kst_json(const KstClassification& r);
Json grynkiewicz_json(const GrynkiewiczClassification& r);
Json fill_json(const FillLemmaReport& r);

std::string render_mn_table(const std::vector<MnResult>& rows);
std::string render_mn_csv(const std::vector<MnResult>& rows);

// Persisted table cache: a JSON array of rows. Missing file reads as empty.
std::vector<MnResult> read_mn_rows(const std::string& path);
void write_mn_rows(const std::string& path, const std::vector<MnResult>& rows);

}  // namespace rainbow
