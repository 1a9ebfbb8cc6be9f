#include "rainbow/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace rainbow {

char label_char(ColorLabel l) { return "ABC"[static_cast<int>(l)]; }

std::optional<ColorLabel> label_from_char(char c) {
  switch (c) {
    case 'A': return ColorLabel::A;
    case 'B': return ColorLabel::B;
    case 'C': return ColorLabel::C;
    default: return std::nullopt;
  }
}

ThreeColoring::ThreeColoring(FiniteAbelianGroup group, std::vector<ColorLabel> assignment)
    : group_(std::move(group)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != group_.order())
    throw std::invalid_argument("assignment length differs from group order");
}

GroupSubset ThreeColoring::class_set(ColorLabel l) const {
  GroupSubset s(group_);
  for (int i = 0; i < size(); ++i)
    if (assignment_[i] == l) s.add(i);
  return s;
}

std::array<int, 3> ThreeColoring::class_sizes() const {
  std::array<int, 3> out{};
  for (ColorLabel l : assignment_) ++out[static_cast<int>(l)];
  return out;
}

int ThreeColoring::min_class_size() const {
  auto s = class_sizes();
  return *std::min_element(s.begin(), s.end());
}

std::optional<RainbowTriple> find_rainbow_ap3(const ThreeColoring& c) {
  const auto& g = c.group();
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      int y = g.sub_index(g.double_index(z), x);
      ColorLabel lx = c.label(x), ly = c.label(y), lz = c.label(z);
      if (lx != ly && lx != lz && ly != lz)
        return RainbowTriple{g.element_at(x), g.element_at(y), g.element_at(z)};
    }
  }
  return std::nullopt;
}

bool is_rainbow_free(const ThreeColoring& c) { return !find_rainbow_ap3(c).has_value(); }

bool has_nonempty_classes(const ThreeColoring& c) {
  auto s = c.class_sizes();
  return s[0] > 0 && s[1] > 0 && s[2] > 0;
}

ThreeColoring translate_coloring(const ThreeColoring& c, int g_index) {
  const auto& g = c.group();
  std::vector<ColorLabel> out(c.size());
  for (int i = 0; i < c.size(); ++i) out[i] = c.label(g.add_index(i, g_index));
  return ThreeColoring(g, std::move(out));
}

ThreeColoring dilate_coloring(const ThreeColoring& c, int unit) {
  const auto& g = c.group();
  if (!g.is_cyclic_presentation())
    throw std::invalid_argument("dilation needs a cyclic presentation");
  int n = g.order();
  int u = ((unit % n) + n) % n;
  if (std::gcd(u, n) != 1) throw std::invalid_argument("dilation unit must be coprime to the order");
  std::vector<ColorLabel> out(c.size());
  for (int i = 0; i < c.size(); ++i) out[i] = c.label(g.scalar_index(u, i));
  return ThreeColoring(g, std::move(out));
}

namespace {

struct Triple {
  int x, y, z;
};

constexpr std::uint8_t kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct SearchContext {
  FiniteAbelianGroup group;
  int n;
  EnumerationOptions opt;
  std::vector<int> add;                   // add[i*n + j]
  std::vector<std::vector<Triple>> by_max;  // AP triples keyed by largest member

  explicit SearchContext(const FiniteAbelianGroup& g, const EnumerationOptions& o)
      : group(g), n(g.order()), opt(o), add(static_cast<size_t>(n) * n), by_max(n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) add[static_cast<size_t>(i) * n + j] = g.add_index(i, j);
    for (int z = 0; z < n; ++z) {
      for (int x = 0; x < n; ++x) {
        int y = g.sub_index(g.double_index(z), x);
        if (x < y && x != z && y != z) by_max[std::max({x, y, z})].push_back({x, y, z});
      }
    }
  }

  int plus(int i, int j) const { return add[static_cast<size_t>(i) * n + j]; }

  // lexicographically least within its orbit under the enabled symmetries
  bool is_canonical(const std::vector<std::uint8_t>& l) const {
    int gmax = opt.canonical_translation_only ? n : 1;
    int pmax = opt.quotient_label_permutations ? 6 : 1;
    for (int g = 0; g < gmax; ++g) {
      for (int p = 0; p < pmax; ++p) {
        if (g == 0 && p == 0) continue;
        for (int i = 0; i < n; ++i) {
          std::uint8_t v = kPerms[p][l[plus(i, g)]];
          if (v != l[i]) {
            if (v < l[i]) return false;
            break;
          }
        }
      }
    }
    return true;
  }
};

struct DepthFirst {
  const SearchContext& ctx;
  std::vector<std::uint8_t> labels;
  std::array<int, 3> counts{};
  EnumerationStats stats;
  std::function<void(const std::vector<std::uint8_t>&)> leaf;

  DepthFirst(const SearchContext& c, std::function<void(const std::vector<std::uint8_t>&)> f)
      : ctx(c), labels(c.n, 0), leaf(std::move(f)) {}

  bool conflict(int pos) const {
    for (const Triple& t : ctx.by_max[pos]) {
      std::uint8_t a = labels[t.x], b = labels[t.y], c = labels[t.z];
      if (a != b && a != c && b != c) return true;
    }
    return false;
  }

  bool hopeless(int pos) const {
    if (!ctx.opt.require_nonempty_classes) return false;
    int missing = (counts[0] == 0) + (counts[1] == 0) + (counts[2] == 0);
    return missing > ctx.n - 1 - pos;
  }

  void handle_leaf() {
    ++stats.complete;
    if (ctx.opt.require_nonempty_classes && (counts[0] == 0 || counts[1] == 0 || counts[2] == 0))
      return;
    if ((ctx.opt.canonical_translation_only || ctx.opt.quotient_label_permutations) &&
        !ctx.is_canonical(labels))
      return;
    ++stats.emitted;
    leaf(labels);
  }

  void run(int pos) {
    if (pos == ctx.n) {
      handle_leaf();
      return;
    }
    for (std::uint8_t lab = 0; lab < 3; ++lab) {
      ++stats.nodes;
      labels[pos] = lab;
      ++counts[lab];
      if (!conflict(pos) && !hopeless(pos)) run(pos + 1);
      --counts[lab];
    }
  }

  // replays a fixed prefix, then continues the search below it
  bool load_prefix(const std::vector<std::uint8_t>& prefix) {
    for (size_t pos = 0; pos < prefix.size(); ++pos) {
      labels[pos] = prefix[pos];
      ++counts[prefix[pos]];
      if (conflict(static_cast<int>(pos)) || hopeless(static_cast<int>(pos))) return false;
    }
    return true;
  }
};

}  // namespace

EnumerationStats enumerate_rainbow_free(const FiniteAbelianGroup& g, const EnumerationOptions& opt,
                                        const std::function<void(const ThreeColoring&)>& sink) {
  if (g.order() > opt.max_order)
    throw capacity_error("enumeration: group order above the configured bound");
  SearchContext ctx(g, opt);
  const int n = ctx.n;
  int jobs = std::max(1, opt.jobs);

  if (jobs == 1 || n < 2) {
    DepthFirst dfs(ctx, [&](const std::vector<std::uint8_t>& l) {
      std::vector<ColorLabel> a(l.size());
      for (size_t i = 0; i < l.size(); ++i) a[i] = static_cast<ColorLabel>(l[i]);
      sink(ThreeColoring(g, std::move(a)));
    });
    dfs.run(0);
    return dfs.stats;
  }

  // split the tree at a fixed depth and hand subtrees to workers; results
  // are re-emitted in subtree order so the stream matches the serial one
  int depth = 1;
  long long width = 3;
  while (width < 4LL * jobs && depth < n) {
    ++depth;
    width *= 3;
  }

  struct Task {
    std::vector<std::uint8_t> prefix;
    EnumerationStats stats;
    std::vector<std::vector<std::uint8_t>> emitted;
  };
  std::vector<Task> tasks;
  EnumerationStats total;

  // enumerate viable prefixes with a depth-capped DFS so node accounting
  // matches the serial search exactly
  {
    DepthFirst probe(ctx, [](const std::vector<std::uint8_t>&) {});
    std::vector<std::uint8_t> prefix(depth, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (pos == depth) {
        tasks.push_back(Task{prefix, {}, {}});
        return;
      }
      for (std::uint8_t lab = 0; lab < 3; ++lab) {
        ++total.nodes;
        probe.labels[pos] = lab;
        ++probe.counts[lab];
        prefix[pos] = lab;
        if (!probe.conflict(pos) && !probe.hopeless(pos)) walk(pos + 1);
        --probe.counts[lab];
      }
    };
    walk(0);
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      Task& task = tasks[k];
      DepthFirst dfs(ctx, [&task](const std::vector<std::uint8_t>& l) { task.emitted.push_back(l); });
      if (!dfs.load_prefix(task.prefix)) continue;  // cannot happen: prefixes pre-filtered
      dfs.run(depth);
      task.stats = dfs.stats;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (const Task& task : tasks) {
    total.nodes += task.stats.nodes;
    total.complete += task.stats.complete;
    total.emitted += task.stats.emitted;
    for (const auto& l : task.emitted) {
      std::vector<ColorLabel> a(l.size());
      for (size_t i = 0; i < l.size(); ++i) a[i] = static_cast<ColorLabel>(l[i]);
      sink(ThreeColoring(g, std::move(a)));
    }
  }
  return total;
}

}  // namespace rainbow
