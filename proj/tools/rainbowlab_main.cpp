#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/io.hpp"

namespace {

using namespace rainbow;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_scan_rainbow(const std::string& path) {
  ThreeColoring c = read_coloring_file(path);
  const FiniteAbelianGroup& g = c.group();
  if (auto t = find_rainbow_ap3(c)) {
    std::cout << "rainbow " << g.index_of(t->x) << "," << g.index_of(t->y) << ","
              << g.index_of(t->z) << "\n";
  } else {
    std::cout << "rainbow-free\n";
  }
  return 0;
}

int cmd_classify(int p) {
  print_json(classification_json(classify_prime(p)));
  return 0;
}

int cmd_mvalue(int n, bool run_formula, bool run_search, const EnumerationOptions& opt) {
  MnResult r = compute_mn(n, run_formula, run_search, opt);
  print_json(mvalue_json(r, run_formula, run_search));
  return r.agree ? 0 : 1;
}

int emit_generated(const ThreeColoring& c, const RegularityWitness* w, const std::string& out_path,
                   bool text) {
  if (!out_path.empty()) write_coloring_file(out_path, c);
  if (text) {
    std::cout << format_coloring(c);
    return 0;
  }
  Json j;
  j["group"] = format_group_spec(c.group());
  j["coloring"] = labels_string(c);
  j["min_class"] = c.min_class_size();
  if (w) j["witness"] = witness_json(*w);
  print_json(j);
  return 0;
}

int cmd_verify_main(const std::string& spec, const EnumerationOptions& opt) {
  FiniteAbelianGroup g = parse_group_spec(spec);
  CompletenessSweep s = sweep_odd_regularity(g, opt);
  print_json(sweep_json(g, s));
  return s.failures.empty() ? 0 : 1;
}

int cmd_verify_even(const std::string& spec, const EnumerationOptions& opt) {
  FiniteAbelianGroup g = parse_group_spec(spec);
  CompletenessSweep s = sweep_even_regularity(g, opt);
  print_json(sweep_json(g, s));
  return s.failures.empty() ? 0 : 1;
}

int cmd_verify_sumsets(std::uint64_t seed, long long trials, int max_group) {
  SumsetTrialTally t = run_sumset_trials(seed, trials, max_group);
  print_json(sumset_tally_json(seed, t));
  return t.violations() == 0 ? 0 : 1;
}

int cmd_table(int odd_max, int even_max, const std::string& out_path, bool text, bool csv,
              const EnumerationOptions& opt) {
  std::vector<MnResult> rows = read_mn_rows(out_path);
  auto have = [&](int n) {
    for (const MnResult& r : rows)
      if (r.n == n) return true;
    return false;
  };
  std::vector<int> wanted;
  for (int n = 3; n <= odd_max; n += 2) wanted.push_back(n);
  for (int n = 4; n <= even_max; n += 2) wanted.push_back(n);
  for (int n : wanted) {
    if (have(n)) continue;
    MnResult r = compute_mn(n, true, n <= opt.max_order, opt);
    rows.push_back(r);
    std::sort(rows.begin(), rows.end(), [](const MnResult& a, const MnResult& b) { return a.n < b.n; });
    write_mn_rows(out_path, rows);
  }
  std::sort(rows.begin(), rows.end(), [](const MnResult& a, const MnResult& b) { return a.n < b.n; });
  if (text) {
    std::cout << render_mn_table(rows);
  } else if (csv) {
    std::cout << render_mn_csv(rows);
  } else {
    Json j = Json::array();
    for (const MnResult& r : rows) j.push_back(mn_row_json(r));
    print_json(j);
  }
  for (const MnResult& r : rows)
    if (!r.agree) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow-free 3-coloring laboratory for finite abelian groups"};
  app.require_subcommand(1);

  std::string coloring_path;
  CLI::App* scan = app.add_subcommand("scan-rainbow", "scan a coloring file for a rainbow triple");
  scan->add_option("file", coloring_path, "coloring file")->required();

  int prime = 0;
  CLI::App* classify = app.add_subcommand("classify", "classify an odd prime as P0 or P1");
  classify->add_option("p", prime, "odd prime")->required();

  int mvalue_n = 0;
  bool flag_formula = false, flag_search = false, flag_both = false;
  int max_order = kDefaultEnumerationBound;
  int jobs = 1;
  CLI::App* mvalue = app.add_subcommand("mvalue", "largest min class size over rainbow-free colorings");
  mvalue->add_option("n", mvalue_n, "group order")->required();
  mvalue->add_flag("--formula", flag_formula, "closed-form value only");
  mvalue->add_flag("--search", flag_search, "exhaustive search value only");
  mvalue->add_flag("--both", flag_both, "both sides plus agreement (default)");
  mvalue->add_option("--max-order", max_order, "exhaustive search bound")
      ->envname("RAINBOWLAB_MAX_ORDER");
  mvalue->add_option("--jobs", jobs, "worker count for the search");

  std::string gen_spec, gen_out;
  bool gen_text = false;
  int gen_prime_p = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate the explicit colorings");
  gen->require_subcommand(1);
  CLI::App* gen_extremal = gen->add_subcommand("extremal", "extremal coloring of an odd group");
  gen_extremal->add_option("group", gen_spec, "group spec, e.g. \"9\" or \"3,3\"")->required();
  CLI::App* gen_prime = gen->add_subcommand("prime", "orbit coloring of Z/p for a P1 prime");
  gen_prime->add_option("p", gen_prime_p, "P1 prime")->required();
  CLI::App* gen_counter = gen->add_subcommand("counterexample",
                                              "min-class counterexample over H + Z/2 + Z/2");
  gen_counter->add_option("H", gen_spec, "base group spec, order not a power of two")->required();
  for (CLI::App* sub : {gen_extremal, gen_prime, gen_counter}) {
    sub->add_option("--out", gen_out, "also write the coloring file here");
    sub->add_flag("--text", gen_text, "print the coloring file format instead of JSON");
  }

  std::string verify_spec;
  CLI::App* vmain = app.add_subcommand("verify-main",
                                       "odd-order completeness sweep: every rainbow-free "
                                       "coloring with nonempty classes has a witness");
  vmain->add_option("--group", verify_spec, "group spec")->required();
  vmain->add_option("--max-order", max_order, "exhaustive sweep bound")
      ->envname("RAINBOWLAB_MAX_ORDER");
  vmain->add_option("--jobs", jobs, "worker count");

  CLI::App* veven = app.add_subcommand("verify-even", "even cyclic completeness sweep");
  veven->add_option("--group", verify_spec, "group spec")->required();
  veven->add_option("--max-order", max_order, "exhaustive sweep bound")
      ->envname("RAINBOWLAB_MAX_ORDER");
  veven->add_option("--jobs", jobs, "worker count");

  std::uint64_t seed = 0;
  long long trials = 10000;
  int max_group = 49;
  CLI::App* vsum = app.add_subcommand("verify-sumsets",
                                      "randomized sumset theorem suite (Kneser bound, small-sumset "
                                      "cases, odd-order cases, fill lemma)");
  vsum->add_option("--seed", seed, "RNG seed")->required();
  vsum->add_option("--trials", trials, "random pair count");
  vsum->add_option("--max-group", max_group, "largest random group order");

  int odd_max = 0, even_max = 0;
  std::string table_out;
  bool table_text = false, table_csv = false;
  CLI::App* table = app.add_subcommand("table", "tabulate formula vs search per order, resumably");
  table->add_option("--odd-max", odd_max, "largest odd order");
  table->add_option("--even-max", even_max, "largest even order");
  table->add_option("--out", table_out, "results file (JSON array, resumed when present)")
      ->required();
  CLI::Option* tt = table->add_flag("--text", table_text, "aligned text table");
  table->add_flag("--csv", table_csv, "CSV rows")->excludes(tt);
  table->add_option("--max-order", max_order, "exhaustive search bound")
      ->envname("RAINBOWLAB_MAX_ORDER");
  table->add_option("--jobs", jobs, "worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  EnumerationOptions opt;
  opt.max_order = max_order;
  opt.jobs = jobs;

  try {
    if (app.got_subcommand(scan)) return cmd_scan_rainbow(coloring_path);
    if (app.got_subcommand(classify)) return cmd_classify(prime);
    if (app.got_subcommand(mvalue)) {
      bool both = flag_both || (!flag_formula && !flag_search);
      return cmd_mvalue(mvalue_n, both || flag_formula, both || flag_search, opt);
    }
    if (app.got_subcommand(gen)) {
      if (gen->got_subcommand(gen_extremal)) {
        GeneratedColoring g = gen_extremal_odd(parse_group_spec(gen_spec));
        return emit_generated(g.coloring, &g.witness, gen_out, gen_text);
      }
      if (gen->got_subcommand(gen_prime))
        return emit_generated(gen_prime_coloring(gen_prime_p), nullptr, gen_out, gen_text);
      ThreeColoring c = gen_counterexample_even(parse_group_spec(gen_spec));
      return emit_generated(c, nullptr, gen_out, gen_text);
    }
    if (app.got_subcommand(vmain)) return cmd_verify_main(verify_spec, opt);
    if (app.got_subcommand(veven)) return cmd_verify_even(verify_spec, opt);
    if (app.got_subcommand(vsum)) return cmd_verify_sumsets(seed, trials, max_group);
    if (app.got_subcommand(table))
      return cmd_table(odd_max, even_max, table_out, table_text, table_csv, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
