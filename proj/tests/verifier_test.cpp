#include "skewchain/verifier.hpp"

#include <gtest/gtest.h>

namespace skewchain::verify {
namespace {

TEST(SampleIndices, DistinctSortedInRange) {
  for (std::uint64_t seed : {1ull, 2ull, 20240601ull}) {
    auto s = detail::sample_indices(10000, 500, seed);
    ASSERT_EQ(s.size(), 500u);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    EXPECT_LT(s.back(), 10000u);
    EXPECT_EQ(s, detail::sample_indices(10000, 500, seed));
  }
  EXPECT_NE(detail::sample_indices(10000, 500, 1), detail::sample_indices(10000, 500, 2));
  auto whole = detail::sample_indices(40, 40, 9);
  for (std::uint64_t i = 0; i < 40; ++i) EXPECT_EQ(whole[i], i);
}

TEST(TrianglePair, EnumeratesUpperTriangle) {
  const std::size_t g = 7;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::uint64_t k = 0; k < g * (g + 1) / 2; ++k) {
    auto [i, j] = detail::triangle_pair(k, g);
    EXPECT_LE(i, j);
    EXPECT_LT(j, g);
    seen.insert({i, j});
  }
  EXPECT_EQ(seen.size(), g * (g + 1) / 2);
}

TEST(ParallelFor, CoversEveryIndexOnceAndRethrows) {
  for (int jobs : {1, 3, 8}) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
    EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
    EXPECT_THROW(parallel_for(50, jobs, [](std::size_t i) {
                   if (i == 17) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
  }
}

TEST(Suites, DkkSmall) {
  ideal::Engine engine;
  Context ctx{engine};
  for (int n = 2; n <= 4; ++n) {
    auto r = verify_dkk(ctx, n);
    EXPECT_TRUE(r.passed) << to_json(r).dump(2);
    EXPECT_GE(r.dims["dimension_gap"].get<long long>(), 1);
    EXPECT_EQ(r.dims["dim_R"].get<std::size_t>(), count_monomials(Multidegree::uniform(n + 1, 2)));
  }
  EXPECT_THROW(verify_dkk(ctx, 3, 3), std::invalid_argument);
}

TEST(Suites, DkkDimensionsForTriangle) {
  ideal::Engine engine;
  Context ctx{engine};
  auto r = verify_dkk(ctx, 2);
  EXPECT_EQ(r.dims["dim_R"], 1);
  EXPECT_EQ(r.dims["dim_I_n"], 0);
  EXPECT_EQ(r.dims["dim_I_n_plus_1"], 1);
}

TEST(Suites, StabilityAndTail) {
  ideal::Engine engine;
  Context ctx{engine};
  for (int n = 2; n <= 3; ++n) {
    auto s = verify_stability(ctx, n);
    EXPECT_TRUE(s.passed) << to_json(s).dump(2);
    EXPECT_EQ(s.dims["failures"], 0);
    auto t = verify_tail_containment(ctx, n);
    EXPECT_TRUE(t.passed) << to_json(t).dump(2);
    EXPECT_TRUE(t.witnesses.front().detail["certificate"]["sum_matches"].get<bool>());
  }
}

TEST(Suites, SquareSmallIsExhaustive) {
  ideal::Engine engine;
  Context ctx{engine};
  auto r = verify_square_containment(ctx, 2);
  EXPECT_TRUE(r.passed) << to_json(r).dump(2);
  EXPECT_FALSE(r.params["sampled"].get<bool>());
  EXPECT_EQ(r.dims["pairs_checked"], r.dims["pairs_total"]);
}

TEST(Suites, SquareSamplingIsSeeded) {
  ideal::Engine engine;
  Context ctx{engine, 1, 7, 40};
  auto a = verify_square_containment(ctx, 2);
  auto b = verify_square_containment(ctx, 2);
  EXPECT_TRUE(a.params["sampled"].get<bool>());
  EXPECT_EQ(a.dims["pairs_checked"], 40);
  EXPECT_EQ(strip_timing(to_json(a)), strip_timing(to_json(b)));
}

TEST(Suites, LemmaCofactors) {
  auto cofs = default_lemma_cofactors(24);
  ASSERT_EQ(cofs.size(), 24u);
  EXPECT_TRUE(cofs.front().is_one());
  std::set<EdgeMonomial> distinct(cofs.begin(), cofs.end());
  EXPECT_EQ(distinct.size(), cofs.size());
  for (const auto& m : cofs) {
    for (const auto& e : m.variables()) EXPECT_FALSE(e.touches(4) || e.touches(5));
  }
  ideal::Engine engine;
  Context ctx{engine};
  EXPECT_TRUE(verify_trivalent_lemma(ctx, cofs).passed);
  EXPECT_THROW(verify_trivalent_lemma(ctx, {EdgeMonomial{Edge(1, 4)}}), std::invalid_argument);
  EXPECT_FALSE(verify_trivalent_lemma(ctx, {}).passed);
}

TEST(Suites, Phi) {
  ideal::Engine engine;
  Context ctx{engine};
  auto r = verify_phi_kernel(ctx, 6, 6);
  EXPECT_TRUE(r.passed) << to_json(r).dump(2);
  EXPECT_EQ(r.dims["plucker_checked"], 15);
  EXPECT_THROW(verify_phi_kernel(ctx, 4, 6), std::invalid_argument);
}

TEST(Report, JsonRoundTripAndTimingStrip) {
  ideal::Engine engine;
  Context ctx{engine};
  AllOptions opt{2, 2, 20};
  auto r = verify_all(ctx, opt);
  EXPECT_TRUE(r.passed);
  auto j = to_json(r);
  EXPECT_EQ(j["verdict"], "pass");
  ASSERT_TRUE(j.contains("suites"));
  EXPECT_EQ(j["suites"].size(), 6u);
  auto back = report_from_json(j);
  EXPECT_EQ(strip_timing(to_json(back)), strip_timing(j));
  auto stripped = strip_timing(j);
  EXPECT_FALSE(stripped.contains("elapsed_ms"));
  EXPECT_FALSE(stripped["suites"][0].contains("elapsed_ms"));
}

TEST(Report, ThreadCountDoesNotChangeContent) {
  ideal::Engine e1, e4;
  Context c1{e1, 1}, c4{e4, 4};
  EXPECT_EQ(strip_timing(to_json(verify_stability(c1, 3))), strip_timing(to_json(verify_stability(c4, 3))));
  EXPECT_EQ(strip_timing(to_json(verify_square_containment(c1, 2))),
            strip_timing(to_json(verify_square_containment(c4, 2))));
}

TEST(Stats, CsvAndJson) {
  ideal::Engine engine;
  auto rows = dimension_stats(engine, {2, 3}, {Multidegree{2, 2, 2, 2}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(stats_csv(rows), "n,degree,dim_R,dim_I,dim_quotient\n2,2 2 2 2,3,2,1\n3,2 2 2 2,3,2,1\n");
  auto j = stats_json(rows);
  EXPECT_EQ(j[1]["dim_quotient"], 1);
  EXPECT_EQ(j[0]["degree"], json::array({2, 2, 2, 2}));
}

}  // namespace
}  // namespace skewchain::verify
