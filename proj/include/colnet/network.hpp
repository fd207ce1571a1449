#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colnet/corpus.hpp"

namespace colnet {

using VertexId = std::uint32_t;

struct Edge {
  VertexId source;
  VertexId target;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unweighted simple-edge-set graph on vertices [0, n). Undirected edges are
/// stored with source <= target; edges are sorted and unique.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, bool directed, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t self_loop_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
};

enum class NetType {
  Digraph,
  Undigraph1,
  Undigraph2,
  SimplifiedDigraph,
  SimplifiedUndigraph1,
  SimplifiedUndigraph2,
};

inline constexpr std::array<NetType, 6> kAllNetTypes = {
    NetType::Digraph,           NetType::Undigraph1,           NetType::Undigraph2,
    NetType::SimplifiedDigraph, NetType::SimplifiedUndigraph1, NetType::SimplifiedUndigraph2};

constexpr bool is_directed(NetType t) {
  return t == NetType::Digraph || t == NetType::SimplifiedDigraph;
}
constexpr bool is_simplified(NetType t) {
  return t == NetType::SimplifiedDigraph || t == NetType::SimplifiedUndigraph1 ||
         t == NetType::SimplifiedUndigraph2;
}
constexpr bool uses_trigrams(NetType t) {
  return t == NetType::Undigraph2 || t == NetType::SimplifiedUndigraph2;
}
NetType simplified(NetType t);

/// CLI spelling: digraph, undigraph1, undigraph2, sdigraph, sundigraph1, sundigraph2.
std::string_view to_string(NetType t);
NetType parse_net_type(std::string_view name);

/// Calls emit(a, b) for every raw collocation pair in `tokens`, loops included:
/// one pair per bigram, or three pairs (A,B), (B,C), (A,C) per trigram.
template <typename T, typename Emit>
void for_each_collocation(std::span<const T> tokens, NetType type, Emit&& emit) {
  if (uses_trigrams(type)) {
    for (std::size_t i = 0; i + 3 <= tokens.size(); ++i) {
      emit(tokens[i], tokens[i + 1]);
      emit(tokens[i + 1], tokens[i + 2]);
      emit(tokens[i], tokens[i + 2]);
    }
  } else {
    for (std::size_t i = 0; i + 2 <= tokens.size(); ++i) emit(tokens[i], tokens[i + 1]);
  }
}

class CollocationNetwork {
 public:
  CollocationNetwork() = default;

  /// Words become vertex ids in the given order; edges name words that must
  /// be present in `words`. Loops are dropped for simplified types.
  CollocationNetwork(NetType type, std::vector<std::string> words,
                     std::span<const std::pair<std::string, std::string>> edges);
  CollocationNetwork(NetType type, std::vector<std::string> words, Graph graph);

  NetType type() const { return type_; }
  bool directed() const { return graph_.directed(); }
  bool allows_self_loops() const { return !is_simplified(type_); }
  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  std::span<const std::string> words() const { return words_; }
  const std::string& word(VertexId v) const { return words_.at(v); }
  std::optional<VertexId> find(std::string_view word) const;

  bool has_edge(std::string_view source, std::string_view target) const;

 private:
  NetType type_ = NetType::Digraph;
  std::vector<std::string> words_;
  std::unordered_map<std::string, VertexId> ids_;
  Graph graph_;
};

CollocationNetwork build_network(std::span<const std::string> tokens, NetType type);

/// One network over the union vocabulary; windows never cross documents.
CollocationNetwork build_collection_network(const Corpus& corpus, NetType type);

/// Same vertices, no (v, v) edges; the type becomes the simplified variant.
CollocationNetwork remove_self_loops(const CollocationNetwork& net);

/// Edge-list text format: header `directed=<bool> loops=<bool> n=<|V|>`, one
/// `source<TAB>target` line per edge in id order, then one line holding just
/// the word for every vertex without incident edges.
void write_edge_list(std::ostream& out, const CollocationNetwork& net);

/// Reads the format above. The header cannot tell the two undirected
/// variants apart; `type_hint` picks one, otherwise variant 1 is assumed.
CollocationNetwork read_edge_list(std::istream& in, std::optional<NetType> type_hint = std::nullopt);

}  // namespace colnet
