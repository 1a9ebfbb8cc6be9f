#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/group.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

enum class PrimeClass { P0, P1 };

// P0: 2 generates the full multiplicative group mod p, or half of it with
// (p-1)/2 odd. P1: every other odd prime.
struct PrimeClassification {
  int p;
  int ord2;
  PrimeClass cls;
};

bool is_prime(int n);
std::vector<int> distinct_prime_factors(int n);  // ascending

// least k >= 1 with a^k = 1 mod p; p must be prime and a nonzero mod p
int multiplicative_order(long long a, int p);

PrimeClassification classify_prime(int p);

// whether Z/n admits a rainbow-free 3-coloring with three nonempty classes
bool exists_rainbow_free(int n);

struct MFormulaParts {
  std::optional<int> p;  // smallest odd prime factor of class P0
  std::optional<int> q;  // smallest odd prime factor of class P1
};

MFormulaParts m_formula_parts(int n);

// floor(n / min{2p, q}) over the parts that exist; none when n is a power
// of two (no coloring to measure)
std::optional<int> m_formula(int n);

// exhaustive largest-min-class computation over translation-orbit
// representatives; 0 when no rainbow-free coloring with nonempty classes
// exists
int m_search(const FiniteAbelianGroup& g, const EnumerationOptions& opt = {});

struct MnResult {
  int n;
  std::optional<int> formula;
  std::optional<int> search;
  std::optional<int> p;
  std::optional<int> q;
  bool agree;  // no contradiction between the sides that are present
};

MnResult compute_mn(int n, bool run_formula, bool run_search, const EnumerationOptions& opt = {});

// floor(n/2r) <= m <= min(n/6, n/q_hat), r the smallest odd prime factor,
// q_hat the smallest prime factor
bool bounds_check(int n, int m_value);

struct GeneratedColoring {
  ThreeColoring coloring;
  RegularityWitness witness;
};

// Direct constructions. The odd extremal coloring hits min class size
// m_formula(|G|) exactly; the prime coloring covers class-P1 primes with
// A = {0} and B the orbit of 1 under doubling and negation.
GeneratedColoring gen_extremal_odd(const FiniteAbelianGroup& g);
ThreeColoring gen_prime_coloring(int p);

// G = H + Z/2 + Z/2 colored by coset of the even part: H itself -> A,
// (.,1,0) -> B, the other two cosets -> C. Rainbow-free with min class
// |H|, far above the cyclic-case value.
ThreeColoring gen_counterexample_even(const FiniteAbelianGroup& h);

}  // namespace rainbow
