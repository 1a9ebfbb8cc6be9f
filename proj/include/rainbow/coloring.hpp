#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/group.hpp"
#include "rainbow/subset.hpp"

namespace rainbow {

enum class ColorLabel : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<ColorLabel, 3> kAllLabels{ColorLabel::A, ColorLabel::B, ColorLabel::C};

char label_char(ColorLabel l);
std::optional<ColorLabel> label_from_char(char c);

// Total assignment of {A,B,C} to the elements of a group, indexed by
// element index.
class ThreeColoring {
public:
  ThreeColoring(FiniteAbelianGroup group, std::vector<ColorLabel> assignment);

  const FiniteAbelianGroup& group() const { return group_; }
  int size() const { return group_.order(); }
  ColorLabel label(int index) const { return assignment_[index]; }
  const std::vector<ColorLabel>& assignment() const { return assignment_; }

  GroupSubset class_set(ColorLabel l) const;
  std::array<int, 3> class_sizes() const;
  int min_class_size() const;

  friend bool operator==(const ThreeColoring& a, const ThreeColoring& b) {
    return a.group_ == b.group_ && a.assignment_ == b.assignment_;
  }

private:
  FiniteAbelianGroup group_;
  std::vector<ColorLabel> assignment_;
};

// Ordered triple with x + y = 2z and pairwise distinct labels.
struct RainbowTriple {
  GroupElement x, y, z;
};

// Scans ordered pairs (x, z) in lexicographic index order, takes
// y = 2z - x, and returns the first triple whose labels are pairwise
// distinct. No halving involved, so even orders work too.
std::optional<RainbowTriple> find_rainbow_ap3(const ThreeColoring& c);
bool is_rainbow_free(const ThreeColoring& c);
bool has_nonempty_classes(const ThreeColoring& c);

// c'(x) = c(x + g)
ThreeColoring translate_coloring(const ThreeColoring& c, int g_index);
// c'(x) = c(u * x); cyclic presentation with gcd(u, n) = 1 required
ThreeColoring dilate_coloring(const ThreeColoring& c, int unit);

inline constexpr int kDefaultEnumerationBound = 18;

struct EnumerationOptions {
  bool require_nonempty_classes = true;
  // keep only the lexicographically least assignment among all translates
  bool canonical_translation_only = false;
  // additionally quotient by the 6 label permutations
  bool quotient_label_permutations = false;
  int max_order = kDefaultEnumerationBound;
  int jobs = 1;
};

struct EnumerationStats {
  long long nodes = 0;     // label assignments attempted
  long long complete = 0;  // rainbow-free full assignments reached
  long long emitted = 0;   // survivors of the option filters
};

// Depth-first assignment in element-index order. After each assignment
// only the AP triples whose largest member is the fresh element are
// tested, and any rainbow one prunes the branch, so every complete leaf
// is rainbow-free by construction. Colorings reach the sink in
// lexicographic assignment order regardless of the worker count.
EnumerationStats enumerate_rainbow_free(const FiniteAbelianGroup& g, const EnumerationOptions& opt,
                                        const std::function<void(const ThreeColoring&)>& sink);

}  // namespace rainbow
