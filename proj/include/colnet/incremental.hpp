#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colnet/corpus.hpp"
#include "colnet/metrics.hpp"
#include "colnet/network.hpp"
#include "colnet/stats.hpp"

namespace colnet {

enum class EdgeOrder {
  Occurrence,  ///< first appearance in the document-bounded corpus stream
  Frequency,   ///< descending raw n-gram count, ties by first appearance
};

std::string_view to_string(EdgeOrder o);
EdgeOrder parse_edge_order(std::string_view name);

/// Each distinct edge of the collection network exactly once.
struct EdgeStream {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> counts;  ///< raw occurrences, parallel to edges
  EdgeOrder order = EdgeOrder::Occurrence;
  NetType net_type = NetType::Digraph;

  std::size_t size() const { return edges.size(); }
};

EdgeStream order_edges(const Corpus& corpus, NetType type, EdgeOrder order);

/// ceil(k/100 * total).
std::size_t prefix_size(std::size_t total, int k);

/// Network of the first `count` stream edges; a vertex exists once one of
/// its edges has been added, numbered in order of arrival.
CollocationNetwork prefix_network(const EdgeStream& stream, std::size_t count);

struct Checkpoint {
  int k = 0;
  std::size_t edges_included = 0;
  GlobalProperties properties;
};

struct GrowthTrace {
  std::vector<Checkpoint> checkpoints;
  NetType net_type = NetType::Digraph;
  EdgeOrder order = EdgeOrder::Occurrence;
  std::uint64_t seed = 0;
};

/// 1, 2, ..., 100.
std::vector<int> default_checkpoints();

/// Properties recomputed from scratch on every checkpoint prefix. The
/// checkpoint list must be strictly increasing within 1..100. Checkpoints
/// run on up to `threads` workers; every one uses config.seed.
GrowthTrace growth_trace(const EdgeStream& stream, std::span<const int> checkpoints, const PropertyConfig& config,
                         unsigned threads = 1);

/// Runs, Bartels and Mann-Kendall on one property's trajectory. Undefined
/// checkpoints are dropped (noted as "dropped undefined checkpoints");
/// fewer than ten defined checkpoints throws StatsError.
std::array<TestResult, 3> trend_tests(const GrowthTrace& trace, std::string_view property);

}  // namespace colnet
