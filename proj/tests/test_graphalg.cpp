#include <gtest/gtest.h>

#include <cmath>

#include "colnet/graphalg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using colnet::ClusteringKind;
using colnet::ComponentMode;
using colnet::Edge;
using colnet::Graph;
using colnet::NetType;

namespace {

Graph undirected(std::size_t n, std::vector<Edge> edges) { return Graph(n, false, std::move(edges)); }

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (colnet::VertexId i = 0; i < n; ++i) {
    for (colnet::VertexId j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return undirected(n, e);
}

const Graph& fox_digraph() {
  static const Graph g = fixtures::net(fixtures::kFox, NetType::Digraph).graph();
  return g;
}

}  // namespace

TEST(Components, FoxDigraph) {
  const auto weak = colnet::components(fox_digraph(), ComponentMode::Weak);
  EXPECT_EQ(weak.count, 1u);
  EXPECT_EQ(weak.giant_size, 8u);
  const auto strong = colnet::components(fox_digraph(), ComponentMode::Strong);
  EXPECT_EQ(strong.count, 3u);
  EXPECT_EQ(strong.giant_size, 6u);
  const auto net = fixtures::net(fixtures::kFox, NetType::Digraph);
  const auto lazy = *net.find("lazy");
  const auto dog = *net.find("dog");
  EXPECT_NE(strong.labels[lazy], strong.labels[dog]);
  EXPECT_EQ(strong.sizes[strong.labels[lazy]], 1u);
}

TEST(Components, EdgelessAndEmpty) {
  const auto c = colnet::components(Graph(5, false, {}), ComponentMode::Weak);
  EXPECT_EQ(c.count, 5u);
  EXPECT_EQ(c.giant_size, 1u);
  EXPECT_EQ(colnet::components(Graph(), ComponentMode::Strong).count, 0u);
}

TEST(Components, StrongEqualsWeakWhenUndirected) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = fixtures::random_graph(25, 0.06, false, seed);
    const auto w = colnet::components(g, ComponentMode::Weak);
    const auto s = colnet::components(g, ComponentMode::Strong);
    EXPECT_EQ(w.labels, s.labels);
  }
}

TEST(Components, MatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const auto d = fixtures::random_graph(n, 1.5 / static_cast<double>(n), true, seed, seed % 3 == 0);
    const auto weak = colnet::components(d, ComponentMode::Weak);
    const auto strong = colnet::components(d, ComponentMode::Strong);
    EXPECT_EQ(std::pair(weak.count, weak.giant_size), oracle::components(d, false)) << seed;
    EXPECT_EQ(std::pair(strong.count, strong.giant_size), oracle::components(d, true)) << seed;
    std::size_t total = 0;
    for (auto s : strong.sizes) total += s;
    EXPECT_EQ(total, n);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 20 + seed % 31;
    const auto u = fixtures::random_graph(n, 1.2 / static_cast<double>(n), false, 1000 + seed);
    const auto weak = colnet::components(u, ComponentMode::Weak);
    EXPECT_EQ(std::pair(weak.count, weak.giant_size), oracle::components(u, false)) << seed;
  }
}

TEST(Components, LabelsNumberedBySmallestMember) {
  const auto g = Graph(5, true, {{3, 4}, {4, 3}, {0, 1}});
  const auto c = colnet::components(g, ComponentMode::Strong);
  EXPECT_EQ(c.labels, (std::vector<std::uint32_t>{0, 1, 2, 3, 3}));
}

TEST(Diameter, FoxDigraph) {
  EXPECT_EQ(colnet::diameter(fox_digraph(), true), 7u);
  EXPECT_EQ(colnet::diameter(fox_digraph(), false), 5u);
}

TEST(Diameter, Boundaries) {
  EXPECT_EQ(colnet::diameter(Graph(1, true, {}), true), 0u);
  EXPECT_EQ(colnet::diameter(Graph(1, false, {{0, 0}}), false), 0u);
  EXPECT_EQ(colnet::diameter(Graph(3, true, {}), true), 0u);
  EXPECT_THROW(colnet::diameter(Graph(), true), colnet::GraphError);
}

TEST(Diameter, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 40;
    const bool directed = seed % 2 == 0;
    const auto g = fixtures::random_graph(n, 2.0 / static_cast<double>(n), directed, 500 + seed, seed % 5 == 0);
    for (bool respect : {true, false}) {
      EXPECT_EQ(colnet::diameter(g, respect), oracle::diameter(g, respect)) << seed << ' ' << respect;
    }
  }
}

TEST(Diameter, ThreadCountDoesNotChangeResult) {
  const auto g = fixtures::random_graph(300, 0.01, true, 99);
  const auto one = colnet::path_summary(g, true, 1);
  const auto four = colnet::path_summary(g, true, 4);
  EXPECT_EQ(one.diameter, four.diameter);
  EXPECT_EQ(one.reachable_pairs, four.reachable_pairs);
  EXPECT_EQ(one.distance_sum, four.distance_sum);
}

TEST(AvgPathLength, SmallCases) {
  EXPECT_DOUBLE_EQ(colnet::avg_path_length(undirected(3, {{0, 1}, {1, 2}})), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(colnet::avg_path_length(complete(3)), 1.0);
  EXPECT_DOUBLE_EQ(colnet::avg_path_length(undirected(4, {{0, 1}, {2, 3}})), 1.0);
  try {
    colnet::avg_path_length(Graph(3, false, {{1, 1}}));
    FAIL();
  } catch (const colnet::GraphError& e) {
    EXPECT_STREQ(e.what(), "path length undefined");
  }
}

TEST(AvgPathLength, MatchesFloydWarshallIgnoringDirection) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + seed % 35;
    const auto g = fixtures::random_graph(n, 2.5 / static_cast<double>(n), seed % 2 == 1, 70 + seed);
    const double expected = oracle::avg_path_length(g);
    if (std::isnan(expected)) {
      EXPECT_THROW(colnet::avg_path_length(g), colnet::GraphError);
    } else {
      EXPECT_NEAR(colnet::avg_path_length(g), expected, 1e-12) << seed;
    }
  }
}

TEST(Clustering, Triangle) {
  EXPECT_DOUBLE_EQ(colnet::clustering(complete(3), ClusteringKind::Global), 1.0);
  EXPECT_DOUBLE_EQ(colnet::clustering(complete(3), ClusteringKind::AverageLocal), 1.0);
}

TEST(Clustering, FoxNetworks) {
  EXPECT_DOUBLE_EQ(colnet::clustering(fox_digraph(), ClusteringKind::Global), 0.0);
  const auto u2 = fixtures::net(fixtures::kFox, NetType::Undigraph2).graph();
  const auto census = colnet::triangle_census(u2);
  // the-brown-jumped closes via trigrams 1, 3 and 5, giving eight triangles.
  EXPECT_EQ(census.triangles, 8u);
  EXPECT_EQ(census.connected_triples, 46u);
  EXPECT_DOUBLE_EQ(colnet::clustering(u2, ClusteringKind::Global), 24.0 / 46.0);
}

TEST(Clustering, NoTriplesIsZero) {
  EXPECT_DOUBLE_EQ(colnet::clustering(undirected(2, {{0, 1}}), ClusteringKind::Global), 0.0);
  EXPECT_DOUBLE_EQ(colnet::clustering(undirected(2, {{0, 1}}), ClusteringKind::AverageLocal), 0.0);
}

TEST(Clustering, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 38;
    const auto g = fixtures::random_graph(n, 0.25, seed % 2 == 0, 3000 + seed, seed % 4 == 0);
    const double global = colnet::clustering(g, ClusteringKind::Global);
    EXPECT_NEAR(global, oracle::global_clustering(g), 1e-12) << seed;
    EXPECT_NEAR(colnet::clustering(g, ClusteringKind::AverageLocal), oracle::average_local_clustering(g), 1e-12);
    EXPECT_GE(global, 0.0);
    EXPECT_LE(global, 1.0);
  }
}

TEST(Gnm, CompleteAtCapacity) {
  EXPECT_EQ(colnet::gnm_random(5, 10, false, 1), complete(5));
  EXPECT_THROW(colnet::gnm_random(5, 11, false, 1), colnet::GraphError);
  EXPECT_EQ(colnet::gnm_random(4, 12, true, 3).edge_count(), 12u);
  EXPECT_THROW(colnet::gnm_random(4, 13, true, 3), colnet::GraphError);
}

TEST(Gnm, DeterministicAndSimple) {
  for (bool directed : {false, true}) {
    const auto a = colnet::gnm_random(50, 200, directed, 42);
    EXPECT_EQ(a, colnet::gnm_random(50, 200, directed, 42));
    EXPECT_NE(a, colnet::gnm_random(50, 200, directed, 43));
    EXPECT_EQ(a.edge_count(), 200u);
    EXPECT_EQ(a.self_loop_count(), 0u);
  }
}

TEST(Gnm, EdgeInclusionUniform) {
  // n=6, m=5: each of the 15 pairs is included with probability 1/3.
  const int draws = 10000;
  std::map<std::pair<colnet::VertexId, colnet::VertexId>, int> hits;
  for (int i = 0; i < draws; ++i) {
    const auto g = colnet::gnm_random(6, 5, false, static_cast<std::uint64_t>(i));
    for (const auto& e : g.edges()) {
      ++hits[{e.source, e.target}];
    }
  }
  ASSERT_EQ(hits.size(), 15u);
  const double p = 1.0 / 3.0;
  const double mean = draws * p;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [pair, count] : hits) EXPECT_NEAR(count, mean, 3 * sigma);
}
