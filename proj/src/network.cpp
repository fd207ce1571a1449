#include "colnet/network.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace colnet {

Graph::Graph(std::size_t vertex_count, bool directed, std::vector<Edge> edges)
    : vertex_count_(vertex_count), directed_(directed), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
    if (!directed_ && e.source > e.target) std::swap(e.source, e.target);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::size_t Graph::self_loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.source == e.target; }));
}

NetType simplified(NetType t) {
  switch (t) {
    case NetType::Digraph: return NetType::SimplifiedDigraph;
    case NetType::Undigraph1: return NetType::SimplifiedUndigraph1;
    case NetType::Undigraph2: return NetType::SimplifiedUndigraph2;
    default: return t;
  }
}

std::string_view to_string(NetType t) {
  switch (t) {
    case NetType::Digraph: return "digraph";
    case NetType::Undigraph1: return "undigraph1";
    case NetType::Undigraph2: return "undigraph2";
    case NetType::SimplifiedDigraph: return "sdigraph";
    case NetType::SimplifiedUndigraph1: return "sundigraph1";
    case NetType::SimplifiedUndigraph2: return "sundigraph2";
  }
  return "unknown";
}

NetType parse_net_type(std::string_view name) {
  for (NetType t : kAllNetTypes) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown network type: " + std::string(name));
}

namespace {

std::vector<Edge> drop_loops(std::vector<Edge> edges) {
  std::erase_if(edges, [](const Edge& e) { return e.source == e.target; });
  return edges;
}

}  // namespace

CollocationNetwork::CollocationNetwork(NetType type, std::vector<std::string> words, Graph graph)
    : type_(type), words_(std::move(words)) {
  if (graph.vertex_count() != words_.size()) throw std::invalid_argument("vocabulary/graph size mismatch");
  if (graph.directed() != is_directed(type)) throw std::invalid_argument("graph directedness does not match type");
  ids_.reserve(words_.size());
  for (VertexId v = 0; v < words_.size(); ++v) {
    if (!ids_.emplace(words_[v], v).second) throw std::invalid_argument("duplicate word: " + words_[v]);
  }
  if (is_simplified(type) && graph.self_loop_count() > 0) {
    std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
    graph = Graph(graph.vertex_count(), graph.directed(), drop_loops(std::move(edges)));
  }
  graph_ = std::move(graph);
}

CollocationNetwork::CollocationNetwork(NetType type, std::vector<std::string> words,
                                       std::span<const std::pair<std::string, std::string>> edges)
    : type_(type), words_(std::move(words)) {
  ids_.reserve(words_.size());
  for (VertexId v = 0; v < words_.size(); ++v) {
    if (!ids_.emplace(words_[v], v).second) throw std::invalid_argument("duplicate word: " + words_[v]);
  }
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = ids_.find(a);
    const auto ib = ids_.find(b);
    if (ia == ids_.end() || ib == ids_.end()) throw std::invalid_argument("edge names unknown word");
    if (is_simplified(type) && ia->second == ib->second) continue;
    ids.push_back({ia->second, ib->second});
  }
  graph_ = Graph(words_.size(), is_directed(type), std::move(ids));
}

std::optional<VertexId> CollocationNetwork::find(std::string_view word) const {
  const auto it = ids_.find(std::string(word));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool CollocationNetwork::has_edge(std::string_view source, std::string_view target) const {
  auto a = find(source);
  auto b = find(target);
  if (!a || !b) return false;
  Edge e{*a, *b};
  if (!directed() && e.source > e.target) std::swap(e.source, e.target);
  return std::binary_search(graph_.edges().begin(), graph_.edges().end(), e);
}

namespace {

class NetworkAssembler {
 public:
  explicit NetworkAssembler(NetType type) : type_(type) {}

  void add_document(std::span<const std::string> tokens) {
    std::vector<VertexId> seq;
    seq.reserve(tokens.size());
    for (const auto& t : tokens) {
      auto [it, inserted] = ids_.try_emplace(t, static_cast<VertexId>(words_.size()));
      if (inserted) words_.push_back(t);
      seq.push_back(it->second);
    }
    for_each_collocation(std::span<const VertexId>(seq), type_, [&](VertexId a, VertexId b) {
      if (is_simplified(type_) && a == b) return;
      edges_.push_back({a, b});
    });
  }

  CollocationNetwork finish() && {
    Graph g(words_.size(), is_directed(type_), std::move(edges_));
    return CollocationNetwork(type_, std::move(words_), std::move(g));
  }

 private:
  NetType type_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> words_;
  std::vector<Edge> edges_;
};

}  // namespace

CollocationNetwork build_network(std::span<const std::string> tokens, NetType type) {
  NetworkAssembler assembler(type);
  assembler.add_document(tokens);
  return std::move(assembler).finish();
}

CollocationNetwork build_collection_network(const Corpus& corpus, NetType type) {
  if (corpus.empty()) throw CorpusError("cannot build a collection network from an empty corpus");
  NetworkAssembler assembler(type);
  for (const auto& doc : corpus.documents) assembler.add_document(doc.tokens);
  return std::move(assembler).finish();
}

CollocationNetwork remove_self_loops(const CollocationNetwork& net) {
  std::vector<Edge> edges(net.graph().edges().begin(), net.graph().edges().end());
  Graph g(net.vertex_count(), net.directed(), drop_loops(std::move(edges)));
  std::vector<std::string> words(net.words().begin(), net.words().end());
  return CollocationNetwork(simplified(net.type()), std::move(words), std::move(g));
}

void write_edge_list(std::ostream& out, const CollocationNetwork& net) {
  out << "directed=" << (net.directed() ? "true" : "false")
      << " loops=" << (net.allows_self_loops() ? "true" : "false") << " n=" << net.vertex_count()
      << '\n';
  std::vector<bool> touched(net.vertex_count(), false);
  for (const Edge& e : net.graph().edges()) {
    out << net.word(e.source) << '\t' << net.word(e.target) << '\n';
    touched[e.source] = touched[e.target] = true;
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (!touched[v]) out << net.word(v) << '\n';
  }
}

namespace {

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("edge list header: bad boolean");
}

}  // namespace

CollocationNetwork read_edge_list(std::istream& in, std::optional<NetType> type_hint) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("edge list: missing header");
  std::istringstream hs(header);
  std::string d, l, n;
  hs >> d >> l >> n;
  if (d.rfind("directed=", 0) != 0 || l.rfind("loops=", 0) != 0 || n.rfind("n=", 0) != 0) {
    throw std::invalid_argument("edge list: malformed header");
  }
  const bool directed = parse_bool(std::string_view(d).substr(9));
  const bool loops = parse_bool(std::string_view(l).substr(6));
  const std::size_t count = std::stoull(n.substr(2));

  NetType type = directed ? NetType::Digraph : NetType::Undigraph1;
  if (type_hint) {
    if (is_directed(*type_hint) != directed) throw std::invalid_argument("edge list: type hint disagrees with header");
    type = *type_hint;
  }
  if (!loops) type = simplified(type);
  if (loops && is_simplified(type)) throw std::invalid_argument("edge list: type hint disagrees with header");

  std::vector<std::string> words;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& w) {
    auto [it, inserted] = ids.try_emplace(w, static_cast<VertexId>(words.size()));
    if (inserted) words.push_back(w);
    return it->second;
  };
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      intern(line);
      continue;
    }
    const VertexId a = intern(line.substr(0, tab));
    const VertexId b = intern(line.substr(tab + 1));
    edges.push_back({a, b});
  }
  if (words.size() != count) throw std::invalid_argument("edge list: vertex count does not match header");
  Graph g(words.size(), directed, std::move(edges));
  return CollocationNetwork(type, std::move(words), std::move(g));
}

}  // namespace colnet
