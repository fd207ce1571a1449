#include "colnet/incremental.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "colnet/parallel.hpp"

namespace colnet {

std::string_view to_string(EdgeOrder o) { return o == EdgeOrder::Occurrence ? "occurrence" : "frequency"; }

EdgeOrder parse_edge_order(std::string_view name) {
  if (name == "occurrence") return EdgeOrder::Occurrence;
  if (name == "frequency") return EdgeOrder::Frequency;
  throw std::invalid_argument("unknown edge order: " + std::string(name));
}

EdgeStream order_edges(const Corpus& corpus, NetType type, EdgeOrder order) {
  if (corpus.empty()) throw CorpusError("cannot order edges of an empty corpus");
  const bool directed = is_directed(type);
  const bool loops = !is_simplified(type);

  std::unordered_map<std::string, VertexId> ids;
  std::vector<const std::string*> words;
  std::unordered_map<std::uint64_t, std::size_t> slot;  // packed pair -> index of first appearance
  std::vector<Edge> first_seen;
  std::vector<std::size_t> counts;
  std::vector<VertexId> seq;
  for (const auto& doc : corpus.documents) {
    seq.clear();
    for (const auto& t : doc.tokens) {
      auto [it, inserted] = ids.try_emplace(t, static_cast<VertexId>(words.size()));
      if (inserted) words.push_back(&it->first);
      seq.push_back(it->second);
    }
    for_each_collocation(std::span<const VertexId>(seq), type, [&](VertexId a, VertexId b) {
      if (!loops && a == b) return;
      VertexId lo = a, hi = b;
      if (!directed && lo > hi) std::swap(lo, hi);
      const std::uint64_t key = (std::uint64_t{lo} << 32) | hi;
      auto [it, inserted] = slot.try_emplace(key, first_seen.size());
      if (inserted) {
        first_seen.push_back({a, b});
        counts.push_back(0);
      }
      ++counts[it->second];
    });
  }
  if (first_seen.empty()) throw CorpusError("collection network has no edges");

  std::vector<std::size_t> rank(first_seen.size());
  std::iota(rank.begin(), rank.end(), 0);
  if (order == EdgeOrder::Frequency) {
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) { return counts[x] > counts[y]; });
  }
  EdgeStream stream;
  stream.order = order;
  stream.net_type = type;
  stream.edges.reserve(rank.size());
  stream.counts.reserve(rank.size());
  for (std::size_t i : rank) {
    stream.edges.emplace_back(*words[first_seen[i].source], *words[first_seen[i].target]);
    stream.counts.push_back(counts[i]);
  }
  return stream;
}

std::size_t prefix_size(std::size_t total, int k) {
  if (k < 1 || k > 100) throw std::invalid_argument("checkpoint outside 1..100");
  return (static_cast<std::size_t>(k) * total + 99) / 100;
}

CollocationNetwork prefix_network(const EdgeStream& stream, std::size_t count) {
  count = std::min(count, stream.size());
  std::unordered_map<std::string_view, VertexId> ids;
  std::vector<std::string> words;
  std::vector<Edge> edges;
  edges.reserve(count);
  auto intern = [&](const std::string& w) {
    auto [it, inserted] = ids.try_emplace(w, static_cast<VertexId>(words.size()));
    if (inserted) words.push_back(w);
    return it->second;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId a = intern(stream.edges[i].first);
    const VertexId b = intern(stream.edges[i].second);
    edges.push_back({a, b});
  }
  Graph g(words.size(), is_directed(stream.net_type), std::move(edges));
  return CollocationNetwork(stream.net_type, std::move(words), std::move(g));
}

std::vector<int> default_checkpoints() {
  std::vector<int> ks(100);
  std::iota(ks.begin(), ks.end(), 1);
  return ks;
}

GrowthTrace growth_trace(const EdgeStream& stream, std::span<const int> checkpoints, const PropertyConfig& config,
                         unsigned threads) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > 100) throw std::invalid_argument("checkpoint outside 1..100");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw std::invalid_argument("checkpoints must be strictly increasing");
    }
  }
  GrowthTrace trace;
  trace.net_type = stream.net_type;
  trace.order = stream.order;
  trace.seed = config.seed;
  trace.checkpoints.resize(checkpoints.size());
  PropertyConfig per_checkpoint = config;
  per_checkpoint.document_network = false;
  parallel_for(checkpoints.size(), threads, [&](std::size_t i) {
    Checkpoint& c = trace.checkpoints[i];
    c.k = checkpoints[i];
    c.edges_included = prefix_size(stream.size(), c.k);
    c.properties = compute_properties(prefix_network(stream, c.edges_included), per_checkpoint);
  });
  return trace;
}

std::array<TestResult, 3> trend_tests(const GrowthTrace& trace, std::string_view property) {
  std::vector<double> series;
  bool dropped = false;
  for (const auto& c : trace.checkpoints) {
    const auto v = property_value(c.properties, property);
    if (v.has_value()) {
      series.push_back(v.value());
    } else {
      dropped = true;
    }
  }
  if (series.size() < 10) {
    throw StatsError("property " + std::string(property) + " is defined at fewer than 10 checkpoints");
  }
  std::array<TestResult, 3> out = {runs_test(series), bartels_test(series), mann_kendall(series)};
  if (dropped) {
    for (auto& r : out) r.notes.push_back("dropped undefined checkpoints");
  }
  return out;
}

}  // namespace colnet
