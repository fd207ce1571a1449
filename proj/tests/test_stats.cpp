#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "colnet/special.hpp"
#include "colnet/stats.hpp"
#include "oracles.hpp"

using colnet::StatsError;
using colnet::TestResult;
using Values = std::vector<double>;
using GroupList = std::vector<Values>;

namespace {

double ks_uniform_p(const Values& p_values) {
  const auto r = colnet::ks_one_sample(p_values, [](double x) { return std::clamp(x, 0.0, 1.0); });
  return *r.p_value;
}

GroupList normal_groups(std::mt19937_64& rng, std::initializer_list<std::size_t> sizes) {
  std::normal_distribution<double> z;
  GroupList out;
  for (auto s : sizes) {
    Values g(s);
    for (auto& x : g) x = z(rng);
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Midranks, Ties) {
  EXPECT_EQ(colnet::midranks(Values{10, 20, 10, 30, 20, 20}), (Values{1.5, 4, 1.5, 6, 4, 4}));
  EXPECT_TRUE(colnet::midranks(Values{}).empty());
}

TEST(Anova, IdenticalGroups) {
  const GroupList g = {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  const auto r = colnet::one_way_anova(g);
  EXPECT_EQ(r.test_name, "anova");
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(*r.p_value, 1.0);
  EXPECT_EQ(r.group_sizes, (std::vector<std::size_t>{3, 3, 3}));
}

TEST(Anova, HandFixture) {
  const GroupList g = {{1, 2}, {2, 3}, {3, 4}};
  const auto r = colnet::one_way_anova(g);
  EXPECT_NEAR(r.statistic, 4.0, 1e-9);
  EXPECT_NEAR(*r.p_value, colnet::special::f_sf(2, 3, 4.0), 1e-12);
}

TEST(Anova, Degenerate) {
  const GroupList g = {{1, 1}, {2, 2}};
  const auto r = colnet::one_way_anova(g);
  EXPECT_TRUE(std::isinf(r.statistic));
  EXPECT_DOUBLE_EQ(*r.p_value, 0.0);
  EXPECT_TRUE(r.flagged("zero within-group variance"));
  const GroupList same = {{5, 5}, {5, 5}};
  const auto s = colnet::one_way_anova(same);
  EXPECT_DOUBLE_EQ(s.statistic, 0.0);
  EXPECT_DOUBLE_EQ(*s.p_value, 1.0);
  const GroupList tiny = {{1}, {2, 3}};
  EXPECT_THROW(colnet::one_way_anova(tiny), StatsError);
  const GroupList one = {{1, 2, 3}};
  EXPECT_THROW(colnet::one_way_anova(one), StatsError);
}

TEST(KruskalWallis, HandFixture) {
  const GroupList g = {{1, 2, 3}, {4, 5, 6}};
  const auto r = colnet::kruskal_wallis(g);
  EXPECT_NEAR(r.statistic, 12.0 / 42.0 * (36.0 / 3.0 + 225.0 / 3.0) - 21.0, 1e-9);
  EXPECT_NEAR(r.statistic, 3.857, 1e-3);
  EXPECT_NEAR(r.statistic, oracle::kw_h(g), 1e-12);
  EXPECT_NEAR(*r.p_value, colnet::special::chi2_sf(1, r.statistic), 1e-12);
}

TEST(KruskalWallis, IdenticalValues) {
  const GroupList g = {{2, 2, 2}, {2, 2}};
  const auto r = colnet::kruskal_wallis(g);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(*r.p_value, 1.0);
  EXPECT_TRUE(r.flagged("all values identical"));
}

TEST(KruskalWallis, TieCorrection) {
  const GroupList g = {{1, 2, 2, 3}, {2, 3, 3, 4}, {4, 4, 5, 1}};
  Values pooled;
  for (const auto& x : g) pooled.insert(pooled.end(), x.begin(), x.end());
  double t = 0.0;
  std::map<double, int> counts;
  for (double x : pooled) ++counts[x];
  for (const auto& [v, c] : counts) t += static_cast<double>(c) * c * c - c;
  const double n = static_cast<double>(pooled.size());
  const auto r = colnet::kruskal_wallis(g);
  EXPECT_NEAR(r.statistic, oracle::kw_h(g) / (1.0 - t / (n * n * n - n)), 1e-12);
  EXPECT_TRUE(r.flagged("ties"));
}

TEST(KruskalWallis, AsymptoticVersusPermutationOnHandFixture) {
  // Chi-square p is 0.0495 where the exact permutation p is 0.1.
  const GroupList fixture = {{1, 2, 3}, {4, 5, 6}};
  const double exact = oracle::permutation_p({1, 2, 3, 4, 5, 6}, {3, 3}, oracle::kw_h);
  EXPECT_DOUBLE_EQ(exact, 0.1);
  EXPECT_NEAR(*colnet::kruskal_wallis(fixture).p_value, 0.0495, 5e-4);
}

TEST(TTest, IdenticalSamples) {
  const Values x = {1.5, 2.5, 9.0, 4.0};
  const auto r = colnet::t_test(x, x);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(*r.p_value, 1.0);
}

TEST(TTest, WelchHandComputation) {
  const Values a = {19.8, 20.4, 19.6, 17.8, 18.5, 18.9, 18.3, 18.9, 19.5, 22.0};
  const Values b = {28.2, 26.6, 20.1, 23.3, 25.2, 22.1, 17.7, 27.6, 20.6, 13.7, 23.2, 17.5, 20.6, 18.0, 23.9, 21.6,
                    24.3, 20.4, 24.0, 13.2};
  auto mv = [](const Values& x) {
    double m = 0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    double s = 0;
    for (double v : x) s += (v - m) * (v - m);
    return std::pair(m, s / static_cast<double>(x.size() - 1));
  };
  const auto [ma, va] = mv(a);
  const auto [mb, vb] = mv(b);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double se2 = va / na + vb / nb;
  const double t = (ma - mb) / std::sqrt(se2);
  const double df = se2 * se2 / ((va / na) * (va / na) / (na - 1) + (vb / nb) * (vb / nb) / (nb - 1));
  const auto r = colnet::t_test(a, b);
  EXPECT_NEAR(r.statistic, t, 1e-12);
  EXPECT_NEAR(*r.p_value, 2.0 * colnet::special::t_cdf(df, -std::abs(t)), 1e-12);
}

TEST(TTest, ZeroVarianceFlagged) {
  const auto r = colnet::t_test(Values{1, 1, 1}, Values{2, 2});
  EXPECT_TRUE(r.flagged("zero variance"));
  EXPECT_DOUBLE_EQ(*r.p_value, 0.0);
  EXPECT_THROW(colnet::t_test(Values{1}, Values{2, 3}), StatsError);
}

TEST(MannWhitney, HandFixture) {
  const Values a = {1, 2, 3}, b = {4, 5, 6};
  const auto r = colnet::mann_whitney_u(a, b);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  const double exact = oracle::permutation_p({1, 2, 3, 4, 5, 6}, {3, 3}, oracle::mwu_deviation);
  EXPECT_DOUBLE_EQ(exact, 0.1);
  EXPECT_NEAR(*r.p_value, exact, 0.02);
}

TEST(KsTwoSample, DisjointSupports) {
  const auto r = colnet::ks_two_sample(Values{1, 2}, Values{3, 4});
  EXPECT_DOUBLE_EQ(r.statistic, 1.0);
  EXPECT_THROW(colnet::ks_two_sample(Values{}, Values{1}), StatsError);
}

TEST(KsTwoSample, StephensCorrectedPvalue) {
  const Values a = {0.1, 0.4, 0.7, 1.2, 1.9, 2.2}, b = {0.3, 1.0, 1.1, 2.5, 2.8, 3.0, 3.3};
  const auto r = colnet::ks_two_sample(a, b);
  double d = 0.0;
  for (double x : {0.1, 0.3, 0.4, 0.7, 1.0, 1.1, 1.2, 1.9, 2.2, 2.5, 2.8, 3.0, 3.3}) {
    const double fa = static_cast<double>(std::count_if(a.begin(), a.end(), [&](double v) { return v <= x; })) / 6.0;
    const double fb = static_cast<double>(std::count_if(b.begin(), b.end(), [&](double v) { return v <= x; })) / 7.0;
    d = std::max(d, std::abs(fa - fb));
  }
  EXPECT_DOUBLE_EQ(r.statistic, d);
  const double ne = 42.0 / 13.0;
  EXPECT_NEAR(*r.p_value, colnet::special::kolmogorov_sf((std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d), 1e-12);
}

TEST(Symmetry, SwappingSamples) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = normal_groups(rng, {7, 11});
    const auto t1 = colnet::t_test(g[0], g[1]), t2 = colnet::t_test(g[1], g[0]);
    EXPECT_DOUBLE_EQ(t1.statistic, -t2.statistic);
    EXPECT_NEAR(*t1.p_value, *t2.p_value, 1e-15);
    const auto u1 = colnet::mann_whitney_u(g[0], g[1]), u2 = colnet::mann_whitney_u(g[1], g[0]);
    EXPECT_DOUBLE_EQ(u1.statistic + u2.statistic, 77.0);
    EXPECT_NEAR(*u1.p_value, *u2.p_value, 1e-15);
    const auto k1 = colnet::ks_two_sample(g[0], g[1]), k2 = colnet::ks_two_sample(g[1], g[0]);
    EXPECT_DOUBLE_EQ(k1.statistic, k2.statistic);
    EXPECT_DOUBLE_EQ(*k1.p_value, *k2.p_value);
  }
}

TEST(RankInvariance, CubeTransform) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = normal_groups(rng, {6, 9, 8});
    GroupList cubed = g;
    for (auto& grp : cubed) {
      for (auto& x : grp) x = x * x * x;
    }
    EXPECT_EQ(colnet::kruskal_wallis(g).statistic, colnet::kruskal_wallis(cubed).statistic);
    EXPECT_EQ(colnet::mann_whitney_u(g[0], g[1]).statistic, colnet::mann_whitney_u(cubed[0], cubed[1]).statistic);
    EXPECT_EQ(colnet::ks_two_sample(g[0], g[1]).statistic, colnet::ks_two_sample(cubed[0], cubed[1]).statistic);
    Values series = g[1];
    series.insert(series.end(), g[2].begin(), g[2].end());
    Values cubed_series = cubed[1];
    cubed_series.insert(cubed_series.end(), cubed[2].begin(), cubed[2].end());
    EXPECT_EQ(colnet::mann_kendall(series).statistic, colnet::mann_kendall(cubed_series).statistic);
    EXPECT_EQ(colnet::bartels_test(series).statistic, colnet::bartels_test(cubed_series).statistic);
    EXPECT_EQ(colnet::runs_test(series).statistic, colnet::runs_test(cubed_series).statistic);
  }
}

TEST(NullUniformity, TwoSampleAndOmnibus) {
  std::mt19937_64 rng(2718);
  Values anova, kw, t, u, ks;
  for (int run = 0; run < 200; ++run) {
    const auto g = normal_groups(rng, {25, 30, 20});
    anova.push_back(*colnet::one_way_anova(g).p_value);
    kw.push_back(*colnet::kruskal_wallis(g).p_value);
    t.push_back(*colnet::t_test(g[0], g[1]).p_value);
    u.push_back(*colnet::mann_whitney_u(g[0], g[1]).p_value);
    ks.push_back(*colnet::ks_two_sample(g[0], g[1]).p_value);
  }
  EXPECT_GT(ks_uniform_p(anova), 0.01);
  EXPECT_GT(ks_uniform_p(kw), 0.01);
  EXPECT_GT(ks_uniform_p(t), 0.01);
  EXPECT_GT(ks_uniform_p(u), 0.01);
  EXPECT_GT(ks_uniform_p(ks), 0.01);
}

TEST(Bonferroni, Definition) {
  const auto r = colnet::bonferroni(Values{0.01, 0.04, 0.5}, 3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 0.03, 1e-15);
  EXPECT_NEAR(r[1], 0.12, 1e-15);
  EXPECT_DOUBLE_EQ(r[2], 1.0);
  EXPECT_TRUE(colnet::bonferroni(Values{}, 0).empty());
  EXPECT_DOUBLE_EQ(colnet::bonferroni(Values{1.0}, 5)[0], 1.0);
  EXPECT_THROW(colnet::bonferroni(Values{0.1, 0.2}, 1), StatsError);
}

TEST(MannKendall, MonotoneSeries) {
  const auto up = colnet::mann_kendall(Values{1, 2, 3, 4, 5});
  EXPECT_DOUBLE_EQ(up.statistic, 10.0);
  EXPECT_DOUBLE_EQ(*up.kendall_tau, 1.0);
  EXPECT_TRUE(up.flagged("short series"));
  const auto down = colnet::mann_kendall(Values{5, 4, 3, 2, 1});
  EXPECT_DOUBLE_EQ(down.statistic, -10.0);
  EXPECT_DOUBLE_EQ(*down.kendall_tau, -1.0);
  Values ramp(30);
  std::iota(ramp.begin(), ramp.end(), 0.0);
  EXPECT_LT(*colnet::mann_kendall(ramp).p_value, 0.05);
}

TEST(MannKendall, TieCorrectedVariance) {
  const Values x = {1, 2, 2, 3, 3, 3, 4, 1, 5, 5, 6, 2};
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) s += (x[j] > x[i]) - (x[j] < x[i]);
  }
  const double n = static_cast<double>(x.size());
  // Tie groups: 1 x2, 2 x3, 3 x3, 5 x2.
  const double ties = 2 * 1 * 9 + 3 * 2 * 11 + 3 * 2 * 11 + 2 * 1 * 9;
  const double var = (n * (n - 1) * (2 * n + 5) - ties) / 18.0;
  const double z = (s - (s > 0 ? 1 : -1)) / std::sqrt(var);
  const auto r = colnet::mann_kendall(x);
  EXPECT_DOUBLE_EQ(r.statistic, s);
  EXPECT_NEAR(*r.p_value, 2.0 * colnet::special::normal_cdf(-std::abs(z)), 1e-12);
  EXPECT_TRUE(r.flagged("ties"));
}

TEST(RunsTest, Alternating) {
  const auto r = colnet::runs_test(Values{1, 2, 1, 2, 1, 2, 1, 2});
  // 8 runs against E[R] = 2*4*4/8 + 1 = 5.
  const double var = 2.0 * 16 * (32 - 8) / (64.0 * 7.0);
  EXPECT_NEAR(r.statistic, (8 - 5) / std::sqrt(var), 1e-12);
  EXPECT_GT(r.statistic, 0.0);
}

TEST(RunsTest, MedianValuesDropped) {
  // Median 3; the two 3s are dropped leaving below below above above above above below below -> 3 runs.
  const Values x = {1, 2, 3, 4, 5, 3, 5, 4, 2, 1};
  const auto r = colnet::runs_test(x);
  ASSERT_EQ(r.group_sizes, (std::vector<std::size_t>{4, 4}));
  const double mean = 5.0, var = 2.0 * 16 * 24 / (64.0 * 7.0);
  EXPECT_NEAR(r.statistic, (3 - mean) / std::sqrt(var), 1e-12);
}

TEST(Bartels, RankVonNeumannRatio) {
  const Values x = {4, 1, 7, 3, 9, 2, 8, 6, 5, 10, 12, 11};
  const auto ranks = colnet::midranks(x);
  double num = 0, den = 0;
  const double mean = (static_cast<double>(x.size()) + 1) / 2;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) num += (ranks[i] - ranks[i + 1]) * (ranks[i] - ranks[i + 1]);
  for (double r : ranks) den += (r - mean) * (r - mean);
  const auto r = colnet::bartels_test(x);
  EXPECT_NEAR(r.statistic, num / den, 1e-12);
  Values ramp(40);
  std::iota(ramp.begin(), ramp.end(), 0.0);
  const auto trend = colnet::bartels_test(ramp);
  EXPECT_LT(trend.statistic, 2.0);
  EXPECT_LT(*trend.p_value, 0.01);
}

TEST(TrendTests, ConstantSeriesFlagged) {
  const Values c(15, 4.0);
  for (const TestResult& r : {colnet::runs_test(c), colnet::bartels_test(c), colnet::mann_kendall(c)}) {
    EXPECT_TRUE(r.flagged("constant series")) << r.test_name;
    EXPECT_FALSE(r.p_value.has_value()) << r.test_name;
  }
}

TEST(TrendTests, NullNoiseRarelyRejects) {
  int runs_ok = 0, bartels_ok = 0, mk_ok = 0;
  std::normal_distribution<double> z;
  Values runs_p, bartels_p, mk_p;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    Values x(100);
    for (auto& v : x) v = z(rng);
    runs_ok += *colnet::runs_test(x).p_value >= 0.01;
    bartels_ok += *colnet::bartels_test(x).p_value >= 0.01;
    mk_ok += *colnet::mann_kendall(x).p_value >= 0.01;
  }
  EXPECT_GE(runs_ok, 95);
  EXPECT_GE(bartels_ok, 95);
  EXPECT_GE(mk_ok, 95);
}
