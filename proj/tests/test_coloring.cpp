#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rainbow/coloring.hpp"
#include "rainbow/group.hpp"

using namespace rainbow;

namespace {

ThreeColoring from_string(const FiniteAbelianGroup& g, const std::string& s) {
  std::vector<ColorLabel> labels;
  for (char ch : s) labels.push_back(*label_from_char(ch));
  return ThreeColoring(g, std::move(labels));
}

std::string to_string(const ThreeColoring& c) {
  std::string s;
  for (int i = 0; i < c.size(); ++i) s += label_char(c.label(i));
  return s;
}

// Reference: scan every ordered (x, y, z) with x + y = 2z.
bool slow_rainbow_free(const ThreeColoring& c) {
  const FiniteAbelianGroup& g = c.group();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int twice_z = g.add_index(x, y);
      for (int z = 0; z < g.order(); ++z) {
        if (g.double_index(z) != twice_z) continue;
        ColorLabel a = c.label(x), b = c.label(y), d = c.label(z);
        if (a != b && b != d && a != d) return false;
      }
    }
  return true;
}

std::vector<std::string> collect(const FiniteAbelianGroup& g, const EnumerationOptions& opt,
                                 EnumerationStats* stats = nullptr) {
  std::vector<std::string> out;
  EnumerationStats st =
      enumerate_rainbow_free(g, opt, [&](const ThreeColoring& c) { out.push_back(to_string(c)); });
  if (stats) *stats = st;
  return out;
}

// Reference: all base-3 strings, filtered by the slow scanner.
std::vector<std::string> slow_enumerate(const FiniteAbelianGroup& g, bool require_nonempty) {
  const int n = g.order();
  std::vector<std::string> out;
  std::vector<ColorLabel> labels(n, ColorLabel::A);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    std::array<int, 3> counts{};
    for (int i = n - 1; i >= 0; --i) {
      labels[i] = static_cast<ColorLabel>(rest % 3);
      ++counts[static_cast<int>(labels[i])];
      rest /= 3;
    }
    if (require_nonempty && (counts[0] == 0 || counts[1] == 0 || counts[2] == 0)) continue;
    ThreeColoring c(g, labels);
    if (slow_rainbow_free(c)) out.push_back(to_string(c));
  }
  return out;
}

}  // namespace

TEST_CASE("labels map to characters and back") {
  CHECK(label_char(ColorLabel::A) == 'A');
  CHECK(label_char(ColorLabel::B) == 'B');
  CHECK(label_char(ColorLabel::C) == 'C');
  CHECK(label_from_char('B') == ColorLabel::B);
  CHECK_FALSE(label_from_char('D').has_value());
  CHECK_FALSE(label_from_char('a').has_value());
}

TEST_CASE("coloring construction and class queries") {
  FiniteAbelianGroup z9({9});
  ThreeColoring c = from_string(z9, "ACCBCCBCC");
  CHECK(c.size() == 9);
  CHECK(c.label(0) == ColorLabel::A);
  CHECK(c.class_set(ColorLabel::A).elements() == std::vector<int>{0});
  CHECK(c.class_set(ColorLabel::B).elements() == std::vector<int>{3, 6});
  CHECK(c.class_sizes() == std::array<int, 3>{1, 2, 6});
  CHECK(c.min_class_size() == 1);
  CHECK(has_nonempty_classes(c));
  CHECK_THROWS_AS(ThreeColoring(z9, std::vector<ColorLabel>(8, ColorLabel::A)),
                  std::invalid_argument);
}

TEST_CASE("rainbow detection follows the scan order on the three-element group") {
  FiniteAbelianGroup z3({3});
  auto t = find_rainbow_ap3(from_string(z3, "ABC"));
  REQUIRE(t.has_value());
  CHECK(z3.index_of(t->x) == 0);
  CHECK(z3.index_of(t->y) == 2);
  CHECK(z3.index_of(t->z) == 1);
}

TEST_CASE("rainbow detection goldens") {
  FiniteAbelianGroup z17({17});
  ThreeColoring squares = from_string(z17, "ABBCBCCCBBCCCBCBB");
  CHECK(is_rainbow_free(squares));
  CHECK(has_nonempty_classes(squares));

  FiniteAbelianGroup z9({9});
  CHECK(is_rainbow_free(from_string(z9, "AAAAAAAAA")));
  CHECK_FALSE(has_nonempty_classes(from_string(z9, "AAAAAAAAA")));
  CHECK_FALSE(is_rainbow_free(from_string(z9, "ABCABCABC")));
}

TEST_CASE("rainbow detection agrees with the full triple scan") {
  std::mt19937_64 rng(2718);
  std::vector<FiniteAbelianGroup> groups;
  for (int n = 4; n <= 12; ++n) groups.push_back(FiniteAbelianGroup({n}));
  groups.push_back(FiniteAbelianGroup({3, 3}));
  groups.push_back(FiniteAbelianGroup({3, 2, 2}));
  for (const FiniteAbelianGroup& g : groups) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ColorLabel> labels(g.order());
      for (auto& l : labels) l = static_cast<ColorLabel>(rng() % 3);
      ThreeColoring c(g, labels);
      auto found = find_rainbow_ap3(c);
      CHECK(found.has_value() == !slow_rainbow_free(c));
      if (found) {
        int x = g.index_of(found->x), y = g.index_of(found->y), z = g.index_of(found->z);
        CHECK(g.add_index(x, y) == g.double_index(z));
        CHECK(c.label(x) != c.label(y));
        CHECK(c.label(y) != c.label(z));
        CHECK(c.label(x) != c.label(z));
      }
    }
  }
}

TEST_CASE("translation and dilation preserve rainbow-freeness") {
  FiniteAbelianGroup z17({17});
  ThreeColoring squares = from_string(z17, "ABBCBCCCBBCCCBCBB");
  CHECK(translate_coloring(squares, 0) == squares);
  for (int t = 0; t < 17; ++t) {
    ThreeColoring moved = translate_coloring(squares, t);
    CHECK(is_rainbow_free(moved));
    for (int x = 0; x < 17; ++x) CHECK(moved.label(x) == squares.label(z17.add_index(x, t)));
  }
  // 3 is a non-square mod 17, so dilation by it swaps the square and
  // non-square classes.
  ThreeColoring dilated = dilate_coloring(squares, 3);
  CHECK(is_rainbow_free(dilated));
  CHECK(dilated.class_set(ColorLabel::A) == squares.class_set(ColorLabel::A));
  CHECK(dilated.class_set(ColorLabel::B) == squares.class_set(ColorLabel::C));
  CHECK(dilated.class_set(ColorLabel::C) == squares.class_set(ColorLabel::B));

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ColorLabel> labels(17);
    for (auto& l : labels) l = static_cast<ColorLabel>(rng() % 3);
    ThreeColoring c(z17, labels);
    bool free = is_rainbow_free(c);
    CHECK(is_rainbow_free(translate_coloring(c, static_cast<int>(rng() % 17))) == free);
    CHECK(is_rainbow_free(dilate_coloring(c, 1 + static_cast<int>(rng() % 16))) == free);
  }

  CHECK_THROWS_AS(dilate_coloring(squares, 0), std::invalid_argument);
  FiniteAbelianGroup z12({12});
  CHECK_THROWS_AS(dilate_coloring(from_string(z12, "AAAABBBBCCCC"), 2), std::invalid_argument);
  FiniteAbelianGroup g33({3, 3});
  CHECK_THROWS_AS(dilate_coloring(from_string(g33, "AAABBBCCC"), 2), std::invalid_argument);
}

TEST_CASE("enumeration matches the exhaustive reference") {
  FiniteAbelianGroup z9({9});
  EnumerationOptions opt;
  EnumerationStats stats;
  std::vector<std::string> fast = collect(z9, opt, &stats);
  CHECK(stats.complete == stats.emitted);
  CHECK(stats.emitted == 54);
  CHECK(std::is_sorted(fast.begin(), fast.end()));
  CHECK(fast == slow_enumerate(z9, true));

  for (int n : {3, 5, 7}) {
    CHECK(collect(FiniteAbelianGroup({n}), opt).empty());
  }
  FiniteAbelianGroup z6({6});
  std::vector<std::string> small = collect(z6, opt);
  CHECK(small.size() == 18);
  CHECK(small == slow_enumerate(z6, true));

  EnumerationOptions keep_empty = opt;
  keep_empty.require_nonempty_classes = false;
  std::vector<std::string> all6 = collect(z6, keep_empty);
  CHECK(all6 == slow_enumerate(z6, false));
}

TEST_CASE("canonical filter keeps exactly the least translate of each orbit") {
  FiniteAbelianGroup z9({9});
  EnumerationOptions opt;
  std::vector<std::string> full = collect(z9, opt);

  EnumerationOptions canon = opt;
  canon.canonical_translation_only = true;
  std::vector<std::string> reps = collect(z9, canon);

  std::set<std::string> full_set(full.begin(), full.end());
  std::set<std::string> expected_reps;
  for (const std::string& s : full) {
    ThreeColoring c = from_string(z9, s);
    std::string least = s;
    for (int t = 1; t < 9; ++t) least = std::min(least, to_string(translate_coloring(c, t)));
    expected_reps.insert(least);
  }
  CHECK(std::set<std::string>(reps.begin(), reps.end()) == expected_reps);

  std::set<std::string> regenerated;
  for (const std::string& s : reps) {
    ThreeColoring c = from_string(z9, s);
    for (int t = 0; t < 9; ++t) regenerated.insert(to_string(translate_coloring(c, t)));
  }
  CHECK(regenerated == full_set);
}

TEST_CASE("label-permutation quotient keeps one representative per relabeling orbit") {
  FiniteAbelianGroup z9({9});
  EnumerationOptions opt;
  std::vector<std::string> full = collect(z9, opt);

  EnumerationOptions canon = opt;
  canon.canonical_translation_only = true;
  canon.quotient_label_permutations = true;
  std::vector<std::string> reps = collect(z9, canon);

  auto relabel = [](const std::string& s, const std::array<char, 3>& image) {
    std::string out = s;
    for (size_t i = 0; i < out.size(); ++i) out[i] = image[s[i] - 'A'];
    return out;
  };
  const std::array<std::array<char, 3>, 6> perms{{{'A', 'B', 'C'},
                                                  {'A', 'C', 'B'},
                                                  {'B', 'A', 'C'},
                                                  {'B', 'C', 'A'},
                                                  {'C', 'A', 'B'},
                                                  {'C', 'B', 'A'}}};
  std::set<std::string> regenerated;
  for (const std::string& s : reps) {
    ThreeColoring c = from_string(z9, s);
    for (int t = 0; t < 9; ++t) {
      std::string moved = to_string(translate_coloring(c, t));
      for (const auto& p : perms) regenerated.insert(relabel(moved, p));
    }
  }
  CHECK(regenerated == std::set<std::string>(full.begin(), full.end()));

  // Each representative is minimal within its own orbit.
  for (const std::string& s : reps) {
    ThreeColoring c = from_string(z9, s);
    for (int t = 0; t < 9; ++t) {
      std::string moved = to_string(translate_coloring(c, t));
      for (const auto& p : perms) CHECK(s <= relabel(moved, p));
    }
  }
}

TEST_CASE("parallel enumeration reproduces the serial stream") {
  FiniteAbelianGroup z12({12});
  EnumerationOptions serial;
  EnumerationStats serial_stats;
  std::vector<std::string> one = collect(z12, serial, &serial_stats);
  CHECK(one.size() == 126);

  EnumerationOptions parallel = serial;
  parallel.jobs = 3;
  EnumerationStats parallel_stats;
  std::vector<std::string> three = collect(z12, parallel, &parallel_stats);
  CHECK(three == one);
  CHECK(parallel_stats.complete == serial_stats.complete);
  CHECK(parallel_stats.emitted == serial_stats.emitted);
}

TEST_CASE("enumeration enforces its capacity bound") {
  FiniteAbelianGroup z20({20});
  EnumerationOptions opt;
  CHECK_THROWS_AS(enumerate_rainbow_free(z20, opt, [](const ThreeColoring&) {}), capacity_error);
  EnumerationOptions raised;
  raised.max_order = 12;
  CHECK_FALSE(collect(FiniteAbelianGroup({12}), raised).empty());
  CHECK(kDefaultEnumerationBound == 18);
}
