#include <doctest.h>

#include <bit>
#include <random>

#include "abelmap/errors.hpp"
#include "abelmap/local_blowup.hpp"

using namespace abelmap;

namespace {

// 1-based helpers so that cases read like the usual notation.
IndexSet set(std::initializer_list<int> one_based) {
  IndexSet s;
  for (int i : one_based) s.insert(i - 1);
  return s;
}

SubsetCollection col(int n, std::initializer_list<IndexSet> sets) { return SubsetCollection{n, sets}; }

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

SubsetCollection random_smooth(std::mt19937& rng, int n) {
  if (n == 1) return SubsetCollection{1, {}};
  std::uniform_int_distribution<std::uint64_t> pick(1, (1ULL << n) - 2);
  while (true) {
    SubsetCollection c{n, {}};
    const int len = std::uniform_int_distribution<int>(1, 2 * n)(rng);
    for (int k = 0; k < len; ++k) c.sets.push_back(IndexSet{pick(rng)});
    if (is_smooth_collection(c)) return c;
  }
}

}  // namespace

TEST_CASE("normalize divisors") {
  CHECK(normalize_divisor({BlowupDivisor::Kind::x_side, set({1})}, 3) == set({1}));
  CHECK(normalize_divisor({BlowupDivisor::Kind::y_side, set({2, 3})}, 3) == set({1}));
  CHECK(normalize_divisor({BlowupDivisor::Kind::diagonal, set({1, 2})}, 3) == set({1, 2}));
}

TEST_CASE("smoothness") {
  CHECK(is_smooth_collection(col(3, {set({1}), set({2})})));
  CHECK(is_smooth_collection(col(1, {})));
  CHECK_FALSE(is_smooth_collection(col(3, {set({1, 2})})));
  CHECK_THROWS_AS(col(3, {set({1, 2, 3})}).validate(), InvalidInput);
  CHECK_THROWS_AS(col(3, {IndexSet{}}).validate(), InvalidInput);
  CHECK(SubsetCollection::dropping_trivial(3, {set({1, 2, 3}), IndexSet{}, set({2})}).sets ==
        std::vector<IndexSet>{set({2})});
}

TEST_CASE("orderings and node assignment") {
  CHECK(one_based(a_order(col(3, {set({1}), set({2})}))) == std::vector<int>{1, 2, 3});
  CHECK(one_based(a_order(col(2, {set({1})}))) == std::vector<int>{1, 2});
  CHECK(one_based(a_order(col(3, {set({2}), set({1})}))) == std::vector<int>{2, 1, 3});
  CHECK(one_based(node_sigma_assignment(col(3, {set({2}), set({1})}))) == std::vector<int>{2, 1, 3});
  CHECK(one_based(node_sigma_assignment(col(2, {set({1})}))) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(a_order(col(3, {set({1, 2})})), NotSmooth);
  CHECK(a_less(col(3, {set({2}), set({1})}), 1, 0));
  CHECK_FALSE(a_less(col(3, {set({1, 2})}), 0, 1));
}

TEST_CASE("strict transform incidence") {
  const auto c = col(3, {set({1}), set({2})});
  const auto n1 = strict_transform_incidence(c, 0);
  CHECK(n1.x_side == set({1}));
  CHECK(n1.y_side == set({1, 2, 3}));
  const auto n2 = strict_transform_incidence(c, 1);
  CHECK(n2.x_side == set({1, 2}));
  CHECK(n2.y_side == set({2, 3}));
  const auto n3 = strict_transform_incidence(c, 2);
  CHECK(n3.x_side == set({1, 2, 3}));
  CHECK(n3.y_side == set({3}));
  CHECK_THROWS_AS(strict_transform_incidence(c, 3), InvalidInput);
}

TEST_CASE("chart recursion") {
  const auto fig = chart_recursion_oracle(col(3, {set({1}), set({2})}));
  CHECK(one_based(fig.order) == std::vector<int>{1, 2, 3});
  CHECK(fig.exceptional_curves == 2);
  const auto single = chart_recursion_oracle(col(1, {}));
  CHECK(single.order == std::vector<int>{0});
  CHECK(single.exceptional_curves == 0);
  CHECK_THROWS_AS(chart_recursion_oracle(col(3, {set({1, 2})})), NotSmooth);
}

TEST_CASE("a-order is a strict total order on smooth collections") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const auto c = random_smooth(rng, n);
    for (int a = 0; a < n; ++a) {
      CHECK_FALSE(a_less(c, a, a));
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        CHECK(a_less(c, a, b) != a_less(c, b, a));
        for (int e = 0; e < n; ++e) {
          if (a_less(c, a, b) && a_less(c, b, e)) CHECK(a_less(c, a, e));
        }
      }
    }
  }
}

TEST_CASE("random smooth collections: recursion, incidence and localisation") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const auto c = random_smooth(rng, n);
    const auto chain = chart_recursion_oracle(c);
    const auto eta = a_order(c);
    CHECK(chain.order == eta);
    CHECK(chain.exceptional_curves == n - 1);

    std::vector<int> position(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) position[eta[k]] = k;
    for (int node = 0; node < n; ++node) {
      const auto inc = strict_transform_incidence(c, node);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (position[i] < position[j]) CHECK_FALSE((inc.x_side.contains(j) && inc.y_side.contains(i)));
        }
      }
    }

    // Inverting u_A leaves a chain of n - |A| - 1 curves.
    const std::uint64_t full = (1ULL << n) - 1;
    for (std::uint64_t a = 0; a < full; ++a) {
      CHECK(localized_chain_length(c, IndexSet{a}) == n - std::popcount(a) - 1);
    }
  }
}
