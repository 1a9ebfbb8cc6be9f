#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "rainbow/group.hpp"

using namespace rainbow;

namespace {

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("mixed-radix indexing round-trips with the last coordinate least significant") {
  FiniteAbelianGroup g({3, 2, 2});
  CHECK(g.order() == 12);
  CHECK(g.factor_count() == 3);
  CHECK(g.index_of(GroupElement{{0, 0, 1}}) == 1);
  CHECK(g.index_of(GroupElement{{0, 1, 0}}) == 2);
  CHECK(g.index_of(GroupElement{{1, 0, 0}}) == 4);
  CHECK(g.element_at(7) == GroupElement{{1, 1, 1}});
  for (int i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("construction validates factors and caps the order") {
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({5, -3}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({2, 1 << 26}), capacity_error);
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK(FiniteAbelianGroup().is_cyclic_presentation());
  CHECK(FiniteAbelianGroup({6}).order() == 6);
  CHECK_FALSE(FiniteAbelianGroup({2, 3}) == FiniteAbelianGroup({6}));
}

TEST_CASE("element addition is componentwise modular") {
  FiniteAbelianGroup z5({5});
  CHECK(add(z5, GroupElement{{3}}, GroupElement{{4}}) == GroupElement{{2}});
  FiniteAbelianGroup g33({3, 3});
  CHECK(add(g33, GroupElement{{1, 2}}, GroupElement{{2, 2}}) == GroupElement{{0, 1}});
  for (int i = 0; i < g33.order(); ++i) CHECK(g33.add_index(i, 0) == i);
  CHECK_THROWS_AS(g33.index_of(GroupElement{{1}}), std::invalid_argument);
  CHECK_THROWS_AS(g33.index_of(GroupElement{{1, 3}}), std::invalid_argument);
}

TEST_CASE("index arithmetic is commutative and associative") {
  for (const FiniteAbelianGroup& g : {FiniteAbelianGroup({12}), FiniteAbelianGroup({3, 2, 2})}) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        CHECK(g.add_index(a, b) == g.add_index(b, a));
        for (int c = 0; c < g.order(); ++c)
          CHECK(g.add_index(g.add_index(a, b), c) == g.add_index(a, g.add_index(b, c)));
      }
  }
}

TEST_CASE("negation and subtraction invert addition") {
  FiniteAbelianGroup g({3, 4});
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.add_index(a, g.neg_index(a)) == 0);
    for (int b = 0; b < g.order(); ++b) CHECK(g.add_index(g.sub_index(a, b), b) == a);
  }
}

TEST_CASE("scalar multiples match repeated addition") {
  FiniteAbelianGroup z9({9});
  CHECK(z9.scalar_index(2, 5) == 1);
  FiniteAbelianGroup z7({7});
  CHECK(z7.scalar_index(-1, 3) == 4);
  CHECK(scalar_mul(z7, -1, GroupElement{{3}}) == GroupElement{{4}});
  FiniteAbelianGroup g({3, 2, 2});
  for (int x = 0; x < g.order(); ++x) {
    CHECK(g.scalar_index(0, x) == 0);
    int acc = 0;
    for (int k = 1; k <= 7; ++k) {
      acc = g.add_index(acc, x);
      CHECK(g.scalar_index(k, x) == acc);
      CHECK(g.scalar_index(-k, x) == g.neg_index(acc));
    }
  }
}

TEST_CASE("halving is the inverse of doubling on odd orders and rejected elsewhere") {
  FiniteAbelianGroup z9({9});
  CHECK(z9.halve_index(1) == 5);
  CHECK(halve(FiniteAbelianGroup({7}), GroupElement{{0}}) == GroupElement{{0}});
  CHECK_THROWS_AS(FiniteAbelianGroup({6}).halve_index(2), std::domain_error);
  for (const FiniteAbelianGroup& g : {FiniteAbelianGroup({9}), FiniteAbelianGroup({15}),
                                      FiniteAbelianGroup({3, 3}), FiniteAbelianGroup({3, 5})}) {
    for (int x = 0; x < g.order(); ++x) {
      CHECK(g.double_index(g.halve_index(x)) == x);
      CHECK(g.halve_index(g.double_index(x)) == x);
    }
  }
}

TEST_CASE("element orders divide the group order") {
  FiniteAbelianGroup z12({12});
  CHECK(z12.element_order(0) == 1);
  CHECK(z12.element_order(4) == 3);
  CHECK(z12.element_order(1) == 12);
  FiniteAbelianGroup g({3, 3});
  for (int x = 1; x < g.order(); ++x) CHECK(g.element_order(x) == 3);
}

TEST_CASE("subgroup construction enforces the closure invariants") {
  FiniteAbelianGroup z9({9});
  Subgroup h = make_subgroup(z9, {0, 3, 6});
  CHECK(h.size() == 3);
  CHECK(h.contains(6));
  CHECK_FALSE(h.contains(1));
  CHECK_THROWS_AS(make_subgroup(z9, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_subgroup(z9, {3, 6}), std::invalid_argument);
  CHECK_THROWS_AS(make_subgroup(z9, {}), std::invalid_argument);
  CHECK(trivial_subgroup(z9).is_trivial());
  CHECK(full_subgroup(z9).is_full());
}

TEST_CASE("generated subgroups close the generators") {
  FiniteAbelianGroup z9({9});
  CHECK(generated_subgroup(z9, {3}).members == std::vector<int>{0, 3, 6});
  CHECK(generated_subgroup(z9, {2}).is_full());
  CHECK(generated_subgroup(z9, {}).is_trivial());
  FiniteAbelianGroup g({3, 3});
  CHECK(generated_subgroup(g, {g.index_of(GroupElement{{1, 0}})}).members ==
        std::vector<int>{0, 3, 6});
}

TEST_CASE("subgroup enumeration is complete and canonically ordered") {
  CHECK(enumerate_subgroups(FiniteAbelianGroup({9})).size() == 3);
  CHECK(enumerate_subgroups(FiniteAbelianGroup({15})).size() == 4);
  CHECK(enumerate_subgroups(FiniteAbelianGroup({3, 3})).size() == 6);
  for (int n : {6, 9, 10, 12, 15, 16, 18})
    CHECK(enumerate_subgroups(FiniteAbelianGroup({n})).size() ==
          static_cast<size_t>(divisor_count(n)));

  FiniteAbelianGroup z9({9});
  auto subs = enumerate_subgroups(z9);
  CHECK(subs[0].is_trivial());
  CHECK(subs[1].members == std::vector<int>{0, 3, 6});
  CHECK(subs[2].is_full());

  for (const FiniteAbelianGroup& g : {FiniteAbelianGroup({12}), FiniteAbelianGroup({3, 3})}) {
    auto list = enumerate_subgroups(g);
    std::set<std::vector<int>> seen;
    for (size_t i = 0; i + 1 < list.size(); ++i)
      CHECK((list[i].size() < list[i + 1].size() ||
             (list[i].size() == list[i + 1].size() && list[i].members < list[i + 1].members)));
    for (const Subgroup& h : list) {
      CHECK(seen.insert(h.members).second);
      CHECK(g.order() % h.size() == 0);
      CHECK(h.contains(0));
      for (int a : h.members) {
        CHECK(h.contains(g.neg_index(a)));
        for (int b : h.members) CHECK(h.contains(g.add_index(a, b)));
      }
    }
  }
}

TEST_CASE("subgroup enumeration respects its capacity bound") {
  CHECK_THROWS_AS(enumerate_subgroups(FiniteAbelianGroup({210})), capacity_error);
  CHECK(enumerate_subgroups(FiniteAbelianGroup({210}), 210).size() == 16);
}

TEST_CASE("cosets partition the group with least-element representatives") {
  FiniteAbelianGroup z9({9});
  Subgroup h = make_subgroup(z9, {0, 3, 6});
  CosetDecomposition q = cosets(z9, h);
  REQUIRE(q.size() == 3);
  CHECK(q.cosets[0] == std::vector<int>{0, 3, 6});
  CHECK(q.cosets[1] == std::vector<int>{1, 4, 7});
  CHECK(q.cosets[2] == std::vector<int>{2, 5, 8});
  CHECK(q.rep == std::vector<int>{0, 1, 2});
  CHECK(quotient_project(q, 4) == quotient_project(q, 7));
  CHECK(quotient_project(z9, h, 4) == quotient_project(z9, h, 7));

  FiniteAbelianGroup z12({12});
  Subgroup k = make_subgroup(z12, {0, 4, 8});
  CosetDecomposition qq = cosets(z12, k);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y)
      CHECK(qq.add(qq.project[x], qq.project[y]) == qq.project[z12.add_index(x, y)]);
}

TEST_CASE("quotient by the full group is a single coset") {
  FiniteAbelianGroup g({3, 3});
  CosetDecomposition q = cosets(g, full_subgroup(g));
  CHECK(q.size() == 1);
  CHECK(q.rep[0] == 0);
  CosetDecomposition qt = cosets(g, trivial_subgroup(g));
  CHECK(qt.size() == g.order());
}
