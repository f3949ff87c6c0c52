#include "skewchain/gl_action.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_poly.hpp"

namespace skewchain::gl {
namespace {

EdgePolynomial edge(int N, int a, int b) { return EdgePolynomial(N, EdgeMonomial{Edge(a, b)}); }

using testing_support::random_poly;

std::vector<std::vector<int>> matrix_of(const GroupGenerator& g, int N) {
  auto M = oracle::identity_matrix(N);
  if (const auto* t = std::get_if<Transvection>(&g)) {
    M[t->add][t->src] = 1;  // e_src -> e_src + e_add
  } else {
    const auto& p = std::get<Transposition>(g);
    M[p.i][p.i] = M[p.j][p.j] = 0;
    M[p.i][p.j] = M[p.j][p.i] = 1;
  }
  return M;
}

TEST(GroupGenerators, Counts) {
  for (int N = 2; N <= 6; ++N) EXPECT_EQ(all_group_generators(N).size(), static_cast<std::size_t>(N * (N - 1) + N * (N - 1) / 2));
  EXPECT_EQ(to_string(GroupGenerator{Transvection{2, 5}}), "E(2+=5)");
  EXPECT_EQ(to_string(GroupGenerator{Transposition{1, 3}}), "swap(1,3)");
}

TEST(GroupGenerators, Validation) {
  auto f = edge(4, 1, 2);
  EXPECT_THROW(apply_generator(Transvection{1, 1}, f), std::invalid_argument);
  EXPECT_THROW(apply_generator(Transvection{1, 5}, f), std::out_of_range);
  EXPECT_THROW(apply_generator(Transposition{0, 2}, f), std::out_of_range);
}

TEST(Transvection, OnSingleVariables) {
  // e1 -> e1 + e3: x12 -> x12 + x32, x13 -> x13, x34 fixed.
  const Transvection t{1, 3};
  EXPECT_EQ(apply_generator(t, edge(4, 1, 2)), edge(4, 1, 2) + edge(4, 2, 3));
  EXPECT_EQ(apply_generator(t, edge(4, 1, 3)), edge(4, 1, 3));
  EXPECT_EQ(apply_generator(t, edge(4, 3, 4)), edge(4, 3, 4));
}

TEST(Transvection, FourTermExpansionAtAPathThroughIndexOne) {
  // m = m' x_{5,1} x_{1,3} with m' = x_{3,4}: E(e1 -> e1 + e2) has four distinct terms.
  auto mono = [](std::initializer_list<std::pair<int, int>> es) {
    std::vector<Edge> v;
    for (auto [a, b] : es) v.emplace_back(a, b);
    return EdgePolynomial(5, EdgeMonomial(v));
  };
  auto m = mono({{3, 4}, {5, 1}, {1, 3}});
  auto expected = mono({{3, 4}, {5, 1}, {1, 3}}) + mono({{3, 4}, {5, 2}, {2, 3}}) + mono({{3, 4}, {5, 2}, {1, 3}}) +
                  mono({{3, 4}, {5, 1}, {2, 3}});
  auto image = apply_generator(Transvection{1, 2}, m);
  EXPECT_EQ(image, expected);
  EXPECT_EQ(image.term_count(), 4u);
  EXPECT_TRUE(image.contains(EdgeMonomial{Edge(3, 4), Edge(1, 5), Edge(2, 3)}));
}

TEST(Transvection, IsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng, 5, 6, 4);
    for (const auto& g : all_group_generators(5)) EXPECT_EQ(apply_generator(g, apply_generator(g, f)), f);
  }
}

TEST(Action, MatchesMatrixMinorsOracle) {
  std::mt19937_64 rng(12);
  for (int N : {4, 5, 6}) {
    oracle::EdgeIndexer ix(N);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_poly(rng, N, 5, 4);
      for (const auto& g : all_group_generators(N)) {
        EXPECT_EQ(oracle::from_library(apply_generator(g, f), ix),
                  oracle::matrix_action(matrix_of(g, N), oracle::from_library(f, ix), ix))
            << to_string(g) << " on " << f.to_string();
      }
    }
  }
}

TEST(Action, IsARingMap) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = random_poly(rng, 6, 4, 3);
    auto h = random_poly(rng, 6, 4, 3);
    for (const auto& g : all_group_generators(6)) {
      EXPECT_EQ(apply_generator(g, f * h), apply_generator(g, f) * apply_generator(g, h));
      EXPECT_EQ(apply_generator(g, f + h), apply_generator(g, f) + apply_generator(g, h));
    }
  }
}

TEST(Action, PluckerIsInvariantUpToSpan) {
  // g(pl_{1234}) stays inside the span of Plucker elements.
  for (const auto& g : all_group_generators(5)) {
    auto image = apply_generator(g, plucker(1, 2, 3, 4, 5));
    EXPECT_EQ(image.terms().size() % 3, 0u) << to_string(g);
    for (const auto& [d, part] : homogeneous_components(image)) {
      auto support = d.support();
      ASSERT_EQ(support.size(), 4u);
      EXPECT_EQ(part, plucker(support[0], support[1], support[2], support[3], 5));
    }
  }
}

TEST(Derivation, ExampleOnTriangle) {
  // D = e_{from=3 -> to=4}: x13 x23 x12 -> x14 x23 x12 + x13 x24 x12.
  auto w3 = EdgePolynomial(4, standard_cycle(3));
  auto expected = EdgePolynomial(4, std::vector<EdgeMonomial>{EdgeMonomial{Edge(1, 4), Edge(2, 3), Edge(1, 2)},
                                                              EdgeMonomial{Edge(1, 3), Edge(2, 4), Edge(1, 2)}});
  EXPECT_EQ(apply_derivation({3, 4}, w3), expected);
}

TEST(Derivation, LoopsAndSquaresVanish) {
  EXPECT_TRUE(apply_derivation({1, 2}, edge(3, 1, 2)).is_zero());
  auto f = EdgePolynomial(4, EdgeMonomial{Edge(1, 3), Edge(2, 3)});
  EXPECT_EQ(apply_derivation({1, 2}, f), EdgePolynomial::zero(4));
  EXPECT_THROW(apply_derivation({2, 2}, f), std::invalid_argument);
  EXPECT_THROW(apply_derivation({1, 5}, f), std::out_of_range);
}

TEST(Derivation, IsTheFirstOrderPartOfTheTransvection) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = 6;
    auto f = random_poly(rng, N, 5, 4);
    const int from = 1 + static_cast<int>(rng() % N);
    int to = 1 + static_cast<int>(rng() % N);
    if (to == from) to = to % N + 1;
    // Filter the transvection image of each term by how far `from` dropped.
    EdgePolynomial expected(N);
    for (const auto& m : f.terms()) {
      const int base = multidegree(m)[from];
      const auto image = apply_generator(Transvection{from, to}, EdgePolynomial(N, m));
      for (const auto& t : image.terms()) {
        if (multidegree(t)[from] == base - 1) expected += EdgePolynomial(N, t);
      }
    }
    EXPECT_EQ(apply_derivation({from, to}, f), expected) << f.to_string();
  }
}

TEST(Derivation, LeibnizRule) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, 6, 3, 3);
    auto h = random_poly(rng, 6, 3, 3);
    const LieDerivation D{1 + static_cast<int>(rng() % 3), 4 + static_cast<int>(rng() % 3)};
    EXPECT_EQ(apply_derivation(D, f * h), apply_derivation(D, f) * h + f * apply_derivation(D, h));
  }
}

TEST(Phi, SingleVariable) {
  auto image = phi(edge(3, 1, 2));
  PairedPolynomial expected(3, std::vector<PairedMonomial>{PairedMonomial{PairedGenerator::x(1), PairedGenerator::y(2)},
                                                           PairedMonomial{PairedGenerator::x(2), PairedGenerator::y(1)}});
  EXPECT_EQ(image, expected);
}

TEST(Phi, MatchesOracle) {
  std::mt19937_64 rng(16);
  oracle::EdgeIndexer ix(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 5, 4, 4);
    EXPECT_EQ(oracle::phi_from_library(phi(f)), oracle::phi(oracle::from_library(f, ix), ix));
  }
}

TEST(Phi, KillsPluckerAndTriangle) {
  EXPECT_TRUE(phi(plucker(1, 2, 3, 4, 4)).is_zero());
  EXPECT_TRUE(phi(EdgePolynomial(3, standard_cycle(3))).is_zero());
  oracle::EdgeIndexer ix(4);
  EXPECT_TRUE(oracle::phi(oracle::plucker(1, 2, 3, 4, ix), ix).empty());
  EXPECT_TRUE(oracle::phi(oracle::Poly{oracle::cycle({1, 2, 3}, ix)}, ix).empty());
}

TEST(Phi, IsARingMapAndCommutesWithSwaps) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 5, 3, 3);
    auto h = random_poly(rng, 5, 3, 3);
    EXPECT_EQ(phi(f * h), phi(f) * phi(h));
    const Transposition p{1 + static_cast<int>(rng() % 2), 3 + static_cast<int>(rng() % 3)};
    EXPECT_EQ(phi(apply_generator(p, f)), apply_transposition(p, phi(f)));
  }
}

}  // namespace
}  // namespace skewchain::gl
