#include <doctest.h>

#include <algorithm>
#include <random>

#include "abelmap/chain_curves.hpp"
#include "abelmap/errors.hpp"
#include "oracles.hpp"

using namespace abelmap;

namespace {

DualGraph two_components(int q) {
  return DualGraph(2, std::vector<DualGraph::Node>(static_cast<std::size_t>(q), {0, 1}), 0);
}

ChainMarkedCurve single_node(int d, std::vector<Integer> chain, Integer a = 0, Integer b = 0) {
  return ChainMarkedCurve{two_components(1), d, {a, b}, {std::move(chain)}};
}

bool admissible_by_oracle(const std::vector<Integer>& chain) {
  const auto sums = oracle::subchain_sums(chain);
  return std::all_of(sums.begin(), sums.end(), [](auto s) { return s >= -1 && s <= 1; });
}

/// Minus the twister, as a twist vector on C(d); twisting by it reproduces
/// the semistabilized degrees.
TwistVector twister_vector(const ChainMarkedCurve& c, const TwisterZ& z) {
  TwistVector t{std::vector<Integer>(static_cast<std::size_t>(c.base.components()), 0)};
  for (const auto& chain : z.multiplicity) {
    for (auto m : chain) t.coeffs.push_back(-m);
  }
  return t;
}

}  // namespace

TEST_CASE("induced polarization") {
  const Polarization half({Rational(1, 2), Rational(1, 2)});
  CHECK(induced_polarization(half, two_components(1), 0).weights() == half.weights());
  const auto p2 = induced_polarization(half, two_components(1), 2);
  CHECK(p2.weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0});
  const auto p3 = induced_polarization(Polarization({0, 1}), two_components(2), 1);
  CHECK(p3.weights() == std::vector<Rational>{0, 1, 0, 0});
  CHECK(p3.total() == 1);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible_chain(std::vector<Integer>{0, 0, 0}));
  CHECK_FALSE(is_admissible_chain(std::vector<Integer>{1, 1}));
  CHECK(is_admissible_chain(std::vector<Integer>{1, -1, 1}));
  CHECK_FALSE(is_admissible_chain(std::vector<Integer>{1, 0, 1}));
  CHECK(is_admissible_chain(std::vector<Integer>{}));
  // Exhaustive agreement with the subchain enumeration.
  for (int len = 1; len <= 5; ++len) {
    std::vector<Integer> chain(static_cast<std::size_t>(len), -2);
    while (true) {
      CHECK(is_admissible_chain(chain) == admissible_by_oracle(chain));
      int i = 0;
      while (i < len && chain[i] == 2) chain[i++] = -2;
      if (i == len) break;
      ++chain[i];
    }
  }
}

TEST_CASE("maximal degree-one subchain") {
  CHECK_FALSE(maximal_degree_one_subchain(std::vector<Integer>{0, 0}));
  CHECK(maximal_degree_one_subchain(std::vector<Integer>{0, 1, 0}) == ChainWindow{0, 2});
  CHECK(maximal_degree_one_subchain(std::vector<Integer>{1, -1, 1}) == ChainWindow{0, 2});
  CHECK(maximal_degree_one_subchain(std::vector<Integer>{0, -1, 1, 0}) == ChainWindow{2, 3});
  CHECK_THROWS_AS(maximal_degree_one_subchain(std::vector<Integer>{1, -2, 1}), AmbiguousMaximalSubchain);
}

TEST_CASE("semistabilize examples") {
  const auto zero = semistabilize(single_node(3, {0, 0, 0}, 2, -1));
  CHECK(zero.windows.empty());
  CHECK(zero.curve.chain_degs[0] == std::vector<Integer>{0, 0, 0});
  CHECK(zero.curve.base_degs == std::vector<Integer>{2, -1});

  const auto mid = semistabilize(single_node(3, {0, 1, 0}, 2, -1));
  REQUIRE(mid.windows.size() == 2);
  CHECK(mid.windows[0][0] == ChainWindow{0, 2});
  CHECK(mid.windows[1][0] == ChainWindow{1, 1});
  CHECK(mid.curve.chain_degs[0] == std::vector<Integer>{0, -1, 0});
  CHECK(mid.curve.base_degs == std::vector<Integer>{3, 0});
  CHECK(mid.twister.multiplicity[0] == std::vector<Integer>{1, 2, 1});

  const auto one = semistabilize(single_node(1, {1}, 0, 0));
  CHECK(one.curve.chain_degs[0] == std::vector<Integer>{-1});
  CHECK(one.curve.base_degs == std::vector<Integer>{1, 1});

  CHECK_THROWS_AS(semistabilize(single_node(2, {1, 1})), NotAdmissible);
}

TEST_CASE("pushforward hypothesis examples") {
  const Polarization zero({0, 0});
  CHECK(pushforward_quasistable(single_node(1, {0}, 0, 0), zero));
  CHECK_FALSE(pushforward_quasistable(single_node(1, {0}, 2, -2), zero));
  CHECK_FALSE(check_pushforward(single_node(2, {1, 1}, -1, -1), zero).admissible);
  // d = 0 is plain quasistability on the base.
  for (Integer a = -3; a <= 3; ++a) {
    const ChainMarkedCurve c{two_components(2), 0, {a, -a}, {{}, {}}};
    CHECK(pushforward_quasistable(c, zero) == is_quasistable(c.base, zero, Multidegree{{a, -a}}).quasistable);
  }
}

TEST_CASE("semistabilize agrees with the intersection-number twist on C(d)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> unit(-1, 1);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int q = 1 + trial % 3;
    const int d = 1 + trial % 5;
    ChainMarkedCurve c{two_components(q), d, {unit(rng) * 2, unit(rng)}, {}};
    for (int n = 0; n < q; ++n) {
      std::vector<Integer> chain;
      do {
        chain.clear();
        for (int k = 0; k < d; ++k) chain.push_back(unit(rng));
      } while (!admissible_by_oracle(chain));
      c.chain_degs.push_back(chain);
    }
    const auto result = semistabilize(c);
    const auto expected =
        twist_action(expanded_graph(c), expanded_multidegree(c), twister_vector(c, result.twister));
    CHECK(expanded_multidegree(result.curve) == expected);
    ++checked;
  }
  CHECK(checked == 600);
}

TEST_CASE("semistabilized bundle is quasistable whenever the hypotheses hold") {
  // Exhaustive over two-component bases, q <= 3, d <= 3, |degs| <= 2, with
  // several polarizations per total degree.
  int hypotheses = 0;
  for (int q = 1; q <= 3; ++q) {
    for (int d = 1; d <= 3; ++d) {
      if (q * d > 6) continue;
      std::vector<std::vector<Integer>> chains;
      std::vector<Integer> chain(static_cast<std::size_t>(d), -1);
      while (true) {
        if (admissible_by_oracle(chain)) chains.push_back(chain);
        int i = 0;
        while (i < d && chain[i] == 1) chain[i++] = -1;
        if (i == d) break;
        ++chain[i];
      }
      std::vector<std::size_t> pick(static_cast<std::size_t>(q), 0);
      while (true) {
        ChainMarkedCurve c{two_components(q), d, {0, 0}, {}};
        for (auto k : pick) c.chain_degs.push_back(chains[k]);
        for (Integer a = -2; a <= 2; ++a) {
          for (Integer b = -2; b <= 2; ++b) {
            c.base_degs = {a, b};
            const Integer total = c.total_degree();
            for (const Rational& e1 : {Rational(0), Rational(1, 2), Rational(-1, 3)}) {
              const Polarization pol({e1, Rational(total) - e1});
              const auto check = check_pushforward(c, pol);
              if (!check.hypotheses) continue;
              ++hypotheses;
              const auto result = semistabilize(c);
              const auto g = expanded_graph(result.curve);
              oracle::Nodes nodes(g.nodes().begin(), g.nodes().end());
              const auto w = induced_polarization(pol, c.base, d).weights();
              CHECK(oracle::quasistable_all_subsets(g.components(), g.marked(), nodes, oracle::scale(w),
                                                    expanded_multidegree(result.curve).degs));
            }
          }
        }
        int i = 0;
        while (i < q && pick[i] == chains.size() - 1) pick[i++] = 0;
        if (i == q) break;
        ++pick[i];
      }
    }
  }
  CHECK(hypotheses > 0);
}
