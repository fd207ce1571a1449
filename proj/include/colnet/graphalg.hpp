#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "colnet/network.hpp"

namespace colnet {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compressed adjacency. Self-loops and duplicate neighbours are removed, so
/// every list describes the simple graph underlying `g`.
class Adjacency {
 public:
  enum class View { Out, In, Undirected };
  Adjacency(const Graph& g, View view);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  /// Number of stored (vertex, neighbour) entries.
  std::size_t arc_count() const { return targets_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

enum class ComponentMode { Weak, Strong };

struct ComponentLabeling {
  ComponentMode mode = ComponentMode::Weak;
  /// Component ids are numbered by the smallest vertex they contain.
  std::vector<std::uint32_t> labels;
  std::vector<std::size_t> sizes;
  std::size_t count = 0;
  std::size_t giant_size = 0;
};

/// Weak components ignore direction; strong components use Tarjan's
/// algorithm (iterative). On undirected graphs both modes agree.
ComponentLabeling components(const Graph& g, ComponentMode mode);

/// Shortest-path totals over all ordered pairs (s, t), s != t, with t
/// reachable from s. Self-loops never shorten a path.
struct PathSummary {
  std::size_t diameter = 0;            ///< longest finite shortest path
  std::uint64_t reachable_pairs = 0;
  std::uint64_t distance_sum = 0;
};

/// All-pairs BFS, 64 sources per sweep packed into machine words.
PathSummary path_summary(const Graph& g, bool respect_direction, unsigned threads = 1);

/// Longest finite shortest path. Throws GraphError on a graph with no vertices.
std::size_t diameter(const Graph& g, bool respect_direction, unsigned threads = 1);

/// Mean shortest-path length over connected pairs, direction ignored.
/// Throws GraphError("path length undefined") when no pair is connected.
double avg_path_length(const Graph& g, unsigned threads = 1);

enum class ClusteringKind { Global, AverageLocal };

/// Per-vertex triangle counts and degrees of the simple undirected graph.
struct TriangleCensus {
  std::vector<std::uint64_t> triangles_at;
  std::vector<std::uint64_t> degree;
  std::uint64_t triangles = 0;
  std::uint64_t connected_triples = 0;  ///< sum of deg*(deg-1)/2
};
TriangleCensus triangle_census(const Graph& g);

/// Direction, self-loops and multiplicity are ignored. Global is
/// 3*triangles/connected triples (0 when there are none); AverageLocal is the
/// mean local coefficient with degree < 2 vertices contributing 0.
double clustering(const Graph& g, ClusteringKind kind);
double clustering(const TriangleCensus& census, ClusteringKind kind);

/// Uniform simple G(n, m) without loops; deterministic in `seed`.
Graph gnm_random(std::size_t n, std::size_t m, bool directed, std::uint64_t seed);

}  // namespace colnet
