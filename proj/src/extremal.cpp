#include "rainbow/extremal.hpp"

#include <algorithm>

namespace rainbow {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> distinct_prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int multiplicative_order(long long a, int p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  long long r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw std::invalid_argument("base divisible by the modulus");
  long long cur = r;
  int ord = 1;
  while (cur != 1) {
    cur = cur * r % p;
    ++ord;
  }
  return ord;
}

PrimeClassification classify_prime(int p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("odd prime required");
  int ord = multiplicative_order(2, p);
  int half = (p - 1) / 2;
  bool p0 = ord == p - 1 || (ord == half && half % 2 == 1);
  return PrimeClassification{p, ord, p0 ? PrimeClass::P0 : PrimeClass::P1};
}

namespace {

bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

bool exists_rainbow_free(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (power_of_two(n)) return false;
  if (is_prime(n) && classify_prime(n).cls == PrimeClass::P0) return false;
  return true;
}

MFormulaParts m_formula_parts(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  MFormulaParts parts;
  for (int f : distinct_prime_factors(n)) {
    if (f == 2) continue;
    PrimeClass cls = classify_prime(f).cls;
    if (cls == PrimeClass::P0 && !parts.p) parts.p = f;
    if (cls == PrimeClass::P1 && !parts.q) parts.q = f;
  }
  return parts;
}

std::optional<int> m_formula(int n) {
  if (power_of_two(n)) return std::nullopt;
  MFormulaParts parts = m_formula_parts(n);
  int denom = 0;
  if (parts.p) denom = 2 * *parts.p;
  if (parts.q && (denom == 0 || *parts.q < denom)) denom = *parts.q;
  return n / denom;
}

int m_search(const FiniteAbelianGroup& g, const EnumerationOptions& opt) {
  EnumerationOptions o = opt;
  o.require_nonempty_classes = true;
  o.canonical_translation_only = true;  // min class size is translation-invariant
  int best = 0;
  enumerate_rainbow_free(g, o, [&](const ThreeColoring& c) {
    best = std::max(best, c.min_class_size());
  });
  return best;
}

MnResult compute_mn(int n, bool run_formula, bool run_search, const EnumerationOptions& opt) {
  MnResult r{n, std::nullopt, std::nullopt, std::nullopt, std::nullopt, true};
  MFormulaParts parts = m_formula_parts(n);
  r.p = parts.p;
  r.q = parts.q;
  if (run_formula) r.formula = m_formula(n);
  if (run_search) r.search = m_search(FiniteAbelianGroup({n}), opt);
  if (r.formula && r.search)
    r.agree = *r.formula == *r.search;
  else if (r.search && power_of_two(n))  // no colorings exist: the search must come back empty
    r.agree = *r.search == 0;
  return r;
}

bool bounds_check(int n, int m_value) {
  if (power_of_two(n)) throw std::invalid_argument("order must have an odd prime factor");
  auto factors = distinct_prime_factors(n);
  int q_hat = factors.front();
  int r = 0;
  for (int f : factors)
    if (f != 2) {
      r = f;
      break;
    }
  return n / (2 * r) <= m_value && 6 * m_value <= n && q_hat * m_value <= n;
}

ThreeColoring gen_prime_coloring(int p) {
  PrimeClassification cls = classify_prime(p);
  if (cls.cls == PrimeClass::P0)
    throw std::domain_error("no rainbow-free coloring with nonempty classes exists for this prime");
  FiniteAbelianGroup g({p});
  // orbit of 1 under multiplication by 2 and by -1
  std::vector<bool> in_orbit(p, false);
  std::vector<int> work{1};
  in_orbit[1] = true;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    int d = 2 * v % p;
    int m = p - v;
    if (!in_orbit[d]) {
      in_orbit[d] = true;
      work.push_back(d);
    }
    if (!in_orbit[m]) {
      in_orbit[m] = true;
      work.push_back(m);
    }
  }
  std::vector<ColorLabel> labels(p, ColorLabel::C);
  labels[0] = ColorLabel::A;
  for (int v = 1; v < p; ++v)
    if (in_orbit[v]) labels[v] = ColorLabel::B;
  return ThreeColoring(g, std::move(labels));
}

GeneratedColoring gen_extremal_odd(const FiniteAbelianGroup& g) {
  const int n = g.order();
  if (n % 2 == 0) throw std::invalid_argument("odd group order required");
  if (n == 1) throw std::invalid_argument("no odd prime factor");
  MFormulaParts parts = m_formula_parts(n);
  bool use_q = parts.q && (!parts.p || *parts.q < 2 * *parts.p);

  auto subgroup_of_size = [&](int size) -> Subgroup {
    for (const Subgroup& h : enumerate_subgroups(g))
      if (h.size() == size) return h;
    throw std::logic_error("expected subgroup size not found");
  };

  if (!use_q) {
    int p = *parts.p;
    Subgroup h = subgroup_of_size(n / p);
    int apex_size = n / (2 * p);
    std::vector<ColorLabel> labels(n, ColorLabel::C);
    for (int i = 0; i < h.size(); ++i)
      labels[h.members[i]] = i < apex_size ? ColorLabel::A : ColorLabel::B;
    ThreeColoring c(g, std::move(labels));
    return GeneratedColoring{std::move(c), RegularityWitness{0, std::move(h), ColorLabel::A}};
  }

  int q = *parts.q;
  Subgroup h = subgroup_of_size(n / q);
  CosetDecomposition quot = cosets(g, h);
  // quotient is cyclic of prime order q; index it by discrete log of the
  // coset of the least element outside H
  int gen_coset = -1;
  for (int e = 0; e < n; ++e)
    if (!h.contains(e)) {
      gen_coset = quot.project[e];
      break;
    }
  std::vector<int> dlog(quot.size(), -1);
  int cur = 0;  // identity coset
  for (int k = 0; k < quot.size(); ++k) {
    dlog[cur] = k;
    cur = quot.add(cur, gen_coset);
  }
  ThreeColoring prime = gen_prime_coloring(q);
  std::vector<ColorLabel> labels(n);
  for (int e = 0; e < n; ++e) labels[e] = prime.label(dlog[quot.project[e]]);
  ThreeColoring c(g, std::move(labels));
  return GeneratedColoring{std::move(c), RegularityWitness{0, std::move(h), ColorLabel::A}};
}

ThreeColoring gen_counterexample_even(const FiniteAbelianGroup& h) {
  if (power_of_two(h.order()))
    throw std::invalid_argument("base group order must not be a power of two");
  std::vector<int> factors = h.factors();
  factors.push_back(2);
  factors.push_back(2);
  FiniteAbelianGroup g(std::move(factors));
  const int n = g.order();
  std::vector<ColorLabel> labels(n);
  for (int i = 0; i < n; ++i) {
    // the two Z/2 coordinates are the two least significant digits
    int s = (i / 2) % 2, t = i % 2;
    labels[i] = (s == 0 && t == 0) ? ColorLabel::A : (s == 1 && t == 0) ? ColorLabel::B : ColorLabel::C;
  }
  return ThreeColoring(g, std::move(labels));
}

}  // namespace rainbow
