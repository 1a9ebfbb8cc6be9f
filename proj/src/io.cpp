#include "rainbow/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const char* what) {
  std::string t = trim(token);
  if (t.empty()) throw std::invalid_argument(std::string(what) + ": empty value");
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": not an integer: \"" + t + "\"");
  }
  if (pos != t.size())
    throw std::invalid_argument(std::string(what) + ": not an integer: \"" + t + "\"");
  return v;
}

std::vector<int> split_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(parse_int(token, what));
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

Json subgroup_members_json(const Subgroup& h) { return Json(h.members); }

Json opt_int_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string opt_int_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

FiniteAbelianGroup parse_group_spec(const std::string& text) {
  std::vector<int> factors =
      split_ints(text, "group spec (comma-separated factor orders, e.g. \"3,2,2\")");
  return FiniteAbelianGroup(std::move(factors));
}

std::string format_group_spec(const FiniteAbelianGroup& g) {
  std::string out;
  for (size_t i = 0; i < g.factors().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.factors()[i]);
  }
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  return split_ints(text, "subset literal (comma-separated element indices, e.g. \"0,3,6\")");
}

GroupSubset parse_subset(const FiniteAbelianGroup& g, const std::string& text) {
  return GroupSubset(g, parse_index_list(text));
}

std::string labels_string(const ThreeColoring& c) {
  std::string line(c.size(), '?');
  for (int i = 0; i < c.size(); ++i) line[i] = label_char(c.label(i));
  return line;
}

std::string format_coloring(const ThreeColoring& c) {
  return "group: " + format_group_spec(c.group()) + "\n" + labels_string(c) + "\n";
}

ThreeColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string header, line;
  if (!std::getline(in, header))
    throw std::invalid_argument("coloring: missing \"group: ...\" header line");
  header = trim(header);
  const std::string prefix = "group:";
  if (header.rfind(prefix, 0) != 0)
    throw std::invalid_argument("coloring: header must start with \"group:\"");
  FiniteAbelianGroup g = parse_group_spec(header.substr(prefix.size()));
  if (!std::getline(in, line)) throw std::invalid_argument("coloring: missing label line");
  line = trim(line);
  if (static_cast<int>(line.size()) != g.order())
    throw std::invalid_argument("coloring: expected " + std::to_string(g.order()) +
                                " labels, got " + std::to_string(line.size()));
  std::vector<ColorLabel> labels(line.size());
  for (size_t i = 0; i < line.size(); ++i) {
    auto l = label_from_char(line[i]);
    if (!l)
      throw std::invalid_argument(std::string("coloring: invalid label character '") + line[i] +
                                  "'");
    labels[i] = *l;
  }
  return ThreeColoring(std::move(g), std::move(labels));
}

ThreeColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coloring file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coloring(buf.str());
}

void write_coloring_file(const std::string& path, const ThreeColoring& c) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write coloring file: " + path);
  out << format_coloring(c);
}

Json classification_json(const PrimeClassification& c) {
  Json j;
  j["p"] = c.p;
  j["ord2"] = c.ord2;
  j["class"] = c.cls == PrimeClass::P0 ? "P0" : "P1";
  return j;
}

Json mn_row_json(const MnResult& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = opt_int_json(r.p);
  j["q"] = opt_int_json(r.q);
  j["formula"] = opt_int_json(r.formula);
  j["search"] = opt_int_json(r.search);
  j["agree"] = r.agree;
  return j;
}

MnResult mn_row_from_json(const Json& j) {
  MnResult r;
  r.n = j.at("n").get<int>();
  auto opt = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
  };
  r.p = opt("p");
  r.q = opt("q");
  r.formula = opt("formula");
  r.search = opt("search");
  r.agree = j.value("agree", true);
  return r;
}

Json mvalue_json(const MnResult& r, bool include_formula, bool include_search) {
  Json j;
  j["n"] = r.n;
  if (include_formula) j["formula"] = opt_int_json(r.formula);
  if (include_search) j["search"] = opt_int_json(r.search);
  j["agree"] = r.agree;
  return j;
}

Json witness_json(const RegularityWitness& w) {
  Json j;
  j["translation"] = w.translation;
  j["subgroup"] = subgroup_members_json(w.subgroup);
  j["apex"] = std::string(1, label_char(w.apex));
  return j;
}

Json even_witness_json(const EvenRegularityWitness& w) {
  Json j;
  j["odd_part_subgroup"] = subgroup_members_json(w.odd_part_subgroup);
  j["subgroup"] = subgroup_members_json(w.subgroup);
  j["apex"] = std::string(1, label_char(w.apex));
  j["apex_coset_rep"] = w.apex_coset_rep;
  j["closure_analogue_holds"] = w.closure_analogue_holds;
  return j;
}

Json sweep_json(const FiniteAbelianGroup& g, const CompletenessSweep& s) {
  Json j;
  j["group"] = format_group_spec(g);
  j["colorings_checked"] = s.colorings_checked;
  j["rainbow_free_count"] = s.rainbow_free_count;
  j["witnesses_found"] = s.witnesses_found;
  Json fails = Json::array();
  for (const ThreeColoring& c : s.failures) fails.push_back(labels_string(c));
  j["failures"] = fails;
  return j;
}

Json sumset_tally_json(std::uint64_t seed, const SumsetTrialTally& t) {
  Json j;
  j["seed"] = seed;
  j["trials"] = t.trials;
  j["kneser_checked"] = t.kneser_checked;
  j["kneser_violations"] = t.kneser_violations;
  j["kst_applicable"] = t.kst_applicable;
  j["kst_no_case"] = t.kst_no_case;
  j["grynkiewicz_applicable"] = t.grynkiewicz_applicable;
  j["grynkiewicz_no_case"] = t.grynkiewicz_no_case;
  j["fill_applicable"] = t.fill_applicable;
  j["fill_violations"] = t.fill_violations;
  j["violations"] = t.violations();
  return j;
}

Json kneser_json(const KneserReport& r) {
  Json j;
  j["hypotheses_met"] = true;
  Json cases = Json::array();
  if (r.bound_holds) cases.push_back("bound");
  if (r.small_sumset && r.equality_when_small) cases.push_back("equality_when_small");
  j["cases"] = cases;
  Json w;
  w["sumset_size"] = r.sumset_size;
  w["stabilizer"] = subgroup_members_json(r.stabilizer);
  w["saturated_bound"] = r.saturated_bound;
  w["small_sumset"] = r.small_sumset;
  j["witnesses"] = w;
  return j;
}

Json kst_json(const KstClassification& r) {
  Json j;
  j["hypotheses_met"] = r.hypotheses_met;
  if (!r.note.empty()) j["note"] = r.note;
  Json cases = Json::array();
  Json w = Json::object();
  if (r.singleton_side) cases.push_back("singleton");
  if (r.common_difference) {
    cases.push_back("common_difference");
    w["common_difference"] = *r.common_difference;
  }
  if (r.quasiperiodic_subgroup) {
    cases.push_back("quasiperiodic");
    w["quasiperiodic_subgroup"] = subgroup_members_json(*r.quasiperiodic_subgroup);
  }
  j["cases"] = cases;
  j["witnesses"] = w;
  return j;
}

Json grynkiewicz_json(const GrynkiewiczClassification& r) {
  Json j;
  j["hypotheses_met"] = r.hypotheses_met;
  if (!r.note.empty()) j["note"] = r.note;
  Json cases = Json::array();
  Json w = Json::object();
  if (r.small_side) cases.push_back("small_side");
  if (r.quasiperiodic_subgroup) {
    cases.push_back("quasiperiodic");
    w["quasiperiodic_subgroup"] = subgroup_members_json(*r.quasiperiodic_subgroup);
  }
  if (!r.extension_pairs.empty()) {
    cases.push_back("extension");
    Json pairs = Json::array();
    for (auto [a, b] : r.extension_pairs) pairs.push_back(Json::array({a, b}));
    w["extension_pairs"] = pairs;
  }
  j["cases"] = cases;
  j["witnesses"] = w;
  return j;
}

Json fill_json(const FillLemmaReport& r) {
  Json j;
  j["hypotheses_met"] = r.hypotheses_met;
  Json cases = Json::array();
  Json w = Json::object();
  if (r.hypotheses_met) {
    if (r.sum_full) {
      cases.push_back("full");
    } else {
      cases.push_back("complement_of_coset");
      if (r.subgroup) w["subgroup"] = subgroup_members_json(*r.subgroup);
      if (r.excluded_coset_rep) w["excluded_coset_rep"] = *r.excluded_coset_rep;
    }
  }
  j["cases"] = cases;
  j["witnesses"] = w;
  j["holds"] = r.holds;
  return j;
}

std::string render_mn_table(const std::vector<MnResult>& rows) {
  const char* headers[6] = {"n", "p", "q", "formula", "search", "agree"};
  std::vector<std::array<std::string, 6>> cells;
  for (const MnResult& r : rows)
    cells.push_back({std::to_string(r.n), opt_int_cell(r.p), opt_int_cell(r.q),
                     opt_int_cell(r.formula), opt_int_cell(r.search),
                     r.agree ? std::string("yes") : std::string("NO")});
  size_t width[6];
  for (int c = 0; c < 6; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (int c = 0; c < 6; ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  };
  emit({headers[0], headers[1], headers[2], headers[3], headers[4], headers[5]});
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string render_mn_csv(const std::vector<MnResult>& rows) {
  std::ostringstream out;
  out << "n,p,q,formula,search,agree\n";
  for (const MnResult& r : rows) {
    out << r.n << ',' << opt_int_cell(r.p) << ',' << opt_int_cell(r.q) << ','
        << opt_int_cell(r.formula) << ',' << opt_int_cell(r.search) << ','
        << (r.agree ? "yes" : "NO") << "\n";
  }
  return out.str();
}

std::vector<MnResult> read_mn_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("cannot parse results file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("results file must hold a JSON array: " + path);
  std::vector<MnResult> rows;
  for (const Json& row : j) rows.push_back(mn_row_from_json(row));
  return rows;
}

void write_mn_rows(const std::string& path, const std::vector<MnResult>& rows) {
  Json j = Json::array();
  for (const MnResult& r : rows) j.push_back(mn_row_json(r));
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write results file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace rainbow
