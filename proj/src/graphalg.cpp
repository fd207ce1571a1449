#include "colnet/graphalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "colnet/parallel.hpp"
#include "colnet/random.hpp"

namespace colnet {

Adjacency::Adjacency(const Graph& g, View view) {
  const std::size_t n = g.vertex_count();
  const bool both = view == View::Undirected;
  offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    if (view == View::Out || both) ++offsets_[e.source + 1];
    if (view == View::In || both) ++offsets_[e.target + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    if (view == View::Out || both) targets_[cursor[e.source]++] = e.target;
    if (view == View::In || both) targets_[cursor[e.target]++] = e.source;
  }
  // A directed graph holding a->b and b->a yields b twice in a's undirected list.
  std::vector<std::size_t> compact(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) targets_[write++] = *it;
    compact[v + 1] = write;
  }
  targets_.resize(write);
  offsets_ = std::move(compact);
}

ComponentLabeling components(const Graph& g, ComponentMode mode) {
  const std::size_t n = g.vertex_count();
  ComponentLabeling out;
  out.mode = mode;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  out.labels.assign(n, kUnset);
  if (n == 0) return out;

  if (mode == ComponentMode::Weak || !g.directed()) {
    Adjacency adj(g, Adjacency::View::Undirected);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
      if (out.labels[s] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(out.sizes.size());
      out.labels[s] = id;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId u : adj.neighbors(queue[head])) {
          if (out.labels[u] == kUnset) {
            out.labels[u] = id;
            queue.push_back(u);
          }
        }
      }
      out.sizes.push_back(queue.size());
    }
  } else {
    // Iterative Tarjan.
    Adjacency adj(g, Adjacency::View::Out);
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> call;
    std::vector<std::uint32_t> raw(n, kUnset);
    std::uint32_t counter = 0, found = 0;
    for (VertexId root = 0; root < n; ++root) {
      if (index[root] != kUnset) continue;
      call.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty()) {
        auto& [v, next] = call.back();
        const auto nbrs = adj.neighbors(v);
        if (next < nbrs.size()) {
          const VertexId w = nbrs[next++];
          if (index[w] == kUnset) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        const VertexId done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        if (low[done] == index[done]) {
          VertexId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            raw[w] = found;
          } while (w != done);
          ++found;
        }
      }
    }
    // Renumber by smallest member.
    std::vector<std::uint32_t> remap(found, kUnset);
    for (VertexId v = 0; v < n; ++v) {
      if (remap[raw[v]] == kUnset) {
        remap[raw[v]] = static_cast<std::uint32_t>(out.sizes.size());
        out.sizes.push_back(0);
      }
      out.labels[v] = remap[raw[v]];
      ++out.sizes[out.labels[v]];
    }
  }
  out.count = out.sizes.size();
  out.giant_size = *std::max_element(out.sizes.begin(), out.sizes.end());
  return out;
}

PathSummary path_summary(const Graph& g, bool respect_direction, unsigned threads) {
  const std::size_t n = g.vertex_count();
  PathSummary total;
  if (n == 0) return total;
  // Distances grow along out-edges, so a vertex learns its distance from the
  // frontier of its in-neighbours.
  const bool directed = respect_direction && g.directed();
  const Adjacency pull(g, directed ? Adjacency::View::In : Adjacency::View::Undirected);

  const std::size_t batches = (n + 63) / 64;
  std::vector<PathSummary> partial(batches);
  parallel_for(batches, threads, [&](std::size_t b) {
    const std::size_t first = b * 64;
    const std::size_t width = std::min<std::size_t>(64, n - first);
    const std::uint64_t full = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    std::vector<std::uint64_t> visited(n, 0), frontier(n, 0), next(n, 0);
    for (std::size_t k = 0; k < width; ++k) {
      visited[first + k] = frontier[first + k] = std::uint64_t{1} << k;
    }
    PathSummary& acc = partial[b];
    for (std::size_t level = 1;; ++level) {
      std::uint64_t reached = 0;
      for (VertexId v = 0; v < n; ++v) {
        if (visited[v] == full) {
          next[v] = 0;
          continue;
        }
        std::uint64_t bits = 0;
        for (VertexId u : pull.neighbors(v)) bits |= frontier[u];
        bits &= ~visited[v];
        next[v] = bits;
        reached += static_cast<std::uint64_t>(std::popcount(bits));
      }
      if (reached == 0) break;
      acc.diameter = level;
      acc.reachable_pairs += reached;
      acc.distance_sum += reached * level;
      for (VertexId v = 0; v < n; ++v) visited[v] |= next[v];
      frontier.swap(next);
    }
  });
  for (const auto& p : partial) {
    total.diameter = std::max(total.diameter, p.diameter);
    total.reachable_pairs += p.reachable_pairs;
    total.distance_sum += p.distance_sum;
  }
  return total;
}

std::size_t diameter(const Graph& g, bool respect_direction, unsigned threads) {
  if (g.vertex_count() == 0) throw GraphError("diameter of a graph with no vertices");
  return path_summary(g, respect_direction, threads).diameter;
}

double avg_path_length(const Graph& g, unsigned threads) {
  const PathSummary s = path_summary(g, false, threads);
  if (s.reachable_pairs == 0) throw GraphError("path length undefined");
  return static_cast<double>(s.distance_sum) / static_cast<double>(s.reachable_pairs);
}

TriangleCensus triangle_census(const Graph& g) {
  const Adjacency adj(g, Adjacency::View::Undirected);
  const std::size_t n = adj.vertex_count();
  TriangleCensus c;
  c.triangles_at.assign(n, 0);
  c.degree.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    c.degree[v] = adj.degree(v);
    c.connected_triples += c.degree[v] * (c.degree[v] - (c.degree[v] > 0 ? 1 : 0)) / 2;
  }
  // Orient each edge towards the higher (degree, id) rank; every triangle is
  // then found exactly once from its lowest-ranked corner.
  auto ranks_below = [&](VertexId a, VertexId b) {
    return c.degree[a] < c.degree[b] || (c.degree[a] == c.degree[b] && a < b);
  };
  std::vector<std::vector<VertexId>> forward(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : adj.neighbors(v)) {
      if (ranks_below(v, u)) forward[v].push_back(u);
    }
  }
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  for (VertexId v = 0; v < n; ++v) {
    ++stamp;
    for (VertexId u : forward[v]) mark[u] = stamp;
    for (VertexId u : forward[v]) {
      for (VertexId w : forward[u]) {
        if (mark[w] == stamp) {
          ++c.triangles;
          ++c.triangles_at[v];
          ++c.triangles_at[u];
          ++c.triangles_at[w];
        }
      }
    }
  }
  return c;
}

double clustering(const TriangleCensus& c, ClusteringKind kind) {
  if (kind == ClusteringKind::Global) {
    if (c.connected_triples == 0) return 0.0;
    return 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.connected_triples);
  }
  const std::size_t n = c.degree.size();
  if (n == 0) return 0.0;
  // Summed in ascending order so the result does not depend on labelling.
  std::vector<double> local;
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = c.degree[v];
    if (d < 2 || c.triangles_at[v] == 0) continue;
    local.push_back(static_cast<double>(c.triangles_at[v]) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0));
  }
  std::sort(local.begin(), local.end());
  double sum = 0.0;
  for (double x : local) sum += x;
  return sum / static_cast<double>(n);
}

double clustering(const Graph& g, ClusteringKind kind) { return clustering(triangle_census(g), kind); }

namespace {

Edge decode_undirected(std::uint64_t k) {
  // k enumerates pairs (i, j), i < j, ordered by j then i.
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (j * (j - 1) / 2 > k) --j;
  while ((j + 1) * j / 2 <= k) ++j;
  const std::uint64_t i = k - j * (j - 1) / 2;
  return {static_cast<VertexId>(i), static_cast<VertexId>(j)};
}

Edge decode_directed(std::uint64_t k, std::uint64_t n) {
  const std::uint64_t i = k / (n - 1);
  std::uint64_t j = k % (n - 1);
  if (j >= i) ++j;
  return {static_cast<VertexId>(i), static_cast<VertexId>(j)};
}

}  // namespace

Graph gnm_random(std::size_t n, std::size_t m, bool directed, std::uint64_t seed) {
  const std::uint64_t nn = n;
  const std::uint64_t capacity = n < 2 ? 0 : (directed ? nn * (nn - 1) : nn * (nn - 1) / 2);
  if (m > capacity) throw GraphError("edge count exceeds simple-graph capacity");

  // Floyd's subset sampling: a uniform m-subset of the pair indices.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  for (std::uint64_t j = capacity - m; j < capacity; ++j) {
    const std::uint64_t t = uniform_index(rng, j + 1);
    const std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    picked.push_back(pick);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t k : picked) edges.push_back(directed ? decode_directed(k, nn) : decode_undirected(k));
  return Graph(n, directed, std::move(edges));
}

}  // namespace colnet
