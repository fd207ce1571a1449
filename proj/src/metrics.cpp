#include "colnet/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace colnet {

std::string_view to_string(Baseline b) { return b == Baseline::Analytic ? "analytic" : "sampled"; }

Baseline parse_baseline(std::string_view name) {
  if (name == "analytic") return Baseline::Analytic;
  if (name == "sampled") return Baseline::Sampled;
  throw std::invalid_argument("unknown baseline: " + std::string(name));
}

namespace {

template <typename T>
Measured<double> widen(const Measured<T>& m) {
  return m.template cast<double>();
}

struct Accessor {
  std::string_view name;
  Measured<double> (*get)(const GlobalProperties&);
};

#define COLNET_FIELD(f) Accessor{#f, [](const GlobalProperties& p) { return widen(p.f); }}
constexpr std::array<Accessor, 20> kAccessors = {
    COLNET_FIELD(n_vertices),      COLNET_FIELD(n_edges),          COLNET_FIELD(shrinkage),
    COLNET_FIELD(global_clustering), COLNET_FIELD(small_worldliness), COLNET_FIELD(diameter_directed),
    COLNET_FIELD(diameter_undirected), COLNET_FIELD(alpha),         COLNET_FIELD(alpha_in),
    COLNET_FIELD(alpha_out),       COLNET_FIELD(pvalue_alpha),     COLNET_FIELD(pvalue_alpha_in),
    COLNET_FIELD(pvalue_alpha_out), COLNET_FIELD(n_cc),            COLNET_FIELD(giant_cc),
    COLNET_FIELD(n_scc),           COLNET_FIELD(giant_scc),        COLNET_FIELD(xmin_alpha),
    COLNET_FIELD(xmin_alpha_in),   COLNET_FIELD(xmin_alpha_out)};
#undef COLNET_FIELD

/// Number of distinct unordered non-loop pairs.
std::size_t simple_pair_count(const Adjacency& undirected) { return undirected.arc_count() / 2; }

struct Baselines {
  double clustering;
  double path_length;
};

std::optional<Baselines> analytic_baseline(std::size_t n, std::size_t m) {
  const auto nd = static_cast<double>(n);
  const double k = 2.0 * static_cast<double>(m) / nd;
  if (k <= 1.0) return std::nullopt;  // ln k <= 0
  return Baselines{k / nd, std::log(nd) / std::log(k)};
}

std::optional<Baselines> sampled_baseline(std::size_t n, std::size_t m, std::size_t samples, std::uint64_t seed,
                                          unsigned threads) {
  if (samples == 0) return std::nullopt;
  double c = 0.0, l = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Graph r = gnm_random(n, m, false, derive_seed(seed, i));
    const PathSummary paths = path_summary(r, false, threads);
    if (paths.reachable_pairs == 0) return std::nullopt;
    c += clustering(r, ClusteringKind::AverageLocal);
    l += static_cast<double>(paths.distance_sum) / static_cast<double>(paths.reachable_pairs);
  }
  const auto s = static_cast<double>(samples);
  return Baselines{c / s, l / s};
}

Measured<double> small_world_ratio(const Graph& g, double avg_clustering, const PathSummary& paths,
                                   std::size_t simple_pairs, Baseline baseline, std::size_t samples,
                                   std::uint64_t seed, unsigned threads) {
  if (g.vertex_count() == 0) return Measured<double>::undefined(reason::kEmptyNetwork);
  if (g.edge_count() == 0 || paths.reachable_pairs == 0) {
    return Measured<double>::undefined(reason::kBaselineDegenerate);
  }
  const double length = static_cast<double>(paths.distance_sum) / static_cast<double>(paths.reachable_pairs);
  const auto base = baseline == Baseline::Analytic
                        ? analytic_baseline(g.vertex_count(), simple_pairs)
                        : sampled_baseline(g.vertex_count(), simple_pairs, samples, seed, threads);
  if (!base || base->clustering <= 0.0 || !(base->path_length > 0.0)) {
    return Measured<double>::undefined(reason::kBaselineDegenerate);
  }
  return (avg_clustering / length) / (base->clustering / base->path_length);
}

struct ExponentFields {
  Measured<double> alpha;
  Measured<double> pvalue;
  Measured<std::uint64_t> xmin;
};

ExponentFields fit_exponent(const Graph& g, DegreeMode mode, const PropertyConfig& config, std::uint64_t seed) {
  ExponentFields out;
  auto fail = [&](const std::string& why) {
    out.alpha = Measured<double>::undefined(why);
    out.pvalue = Measured<double>::undefined(why);
    out.xmin = Measured<std::uint64_t>::undefined(why);
    return out;
  };
  if (mode != DegreeMode::All && !g.directed()) return fail(reason::kNotApplicable);
  // Isolated vertices carry no information about the tail.
  std::vector<std::uint64_t> degrees;
  for (std::uint64_t d : degree_sequence(g, mode).counts) {
    if (d > 0) degrees.push_back(d);
  }
  const FitOptions options{config.xmin_fixed, config.estimator};
  PowerLawFit fit;
  try {
    fit = fit_powerlaw(degrees, options);
  } catch (const FitError& e) {
    return fail(e.what());
  }
  out.alpha = fit.alpha;
  out.xmin = fit.xmin;
  if (!config.compute_pvalues) {
    out.pvalue = Measured<double>::undefined(reason::kDisabled);
    return out;
  }
  try {
    out.pvalue = gof_pvalue(degrees, fit, config.bootstrap_b, seed, options);
  } catch (const FitError& e) {
    out.pvalue = Measured<double>::undefined(e.what());
  }
  return out;
}

}  // namespace

bool is_property_name(std::string_view name) {
  for (const auto& a : kAccessors) {
    if (a.name == name) return true;
  }
  return false;
}

Measured<double> property_value(const GlobalProperties& p, std::string_view name) {
  for (const auto& a : kAccessors) {
    if (a.name == name) return a.get(p);
  }
  throw std::invalid_argument("unknown property: " + std::string(name));
}

Measured<double> shrinkage_exponent(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() == 0) return Measured<double>::undefined(reason::kDegenerateSize);
  return std::log(static_cast<double>(g.edge_count())) / std::log(static_cast<double>(g.vertex_count()));
}

Measured<double> small_worldliness(const Graph& g, Baseline baseline, std::size_t samples, std::uint64_t seed,
                                   unsigned threads) {
  const Adjacency undirected(g, Adjacency::View::Undirected);
  const PathSummary paths = path_summary(g, false, threads);
  return small_world_ratio(g, clustering(g, ClusteringKind::AverageLocal), paths, simple_pair_count(undirected),
                           baseline, samples, seed, threads);
}

GlobalProperties compute_properties(const Graph& g, const PropertyConfig& config) {
  GlobalProperties p;
  p.components_informational = config.document_network;
  if (g.vertex_count() == 0) {
    const auto empty = [](auto& field) { field = std::decay_t<decltype(field)>::undefined(reason::kEmptyNetwork); };
    empty(p.n_vertices), empty(p.n_edges), empty(p.shrinkage), empty(p.global_clustering);
    empty(p.small_worldliness), empty(p.diameter_directed), empty(p.diameter_undirected);
    empty(p.alpha), empty(p.alpha_in), empty(p.alpha_out);
    empty(p.pvalue_alpha), empty(p.pvalue_alpha_in), empty(p.pvalue_alpha_out);
    empty(p.n_cc), empty(p.giant_cc), empty(p.n_scc), empty(p.giant_scc);
    empty(p.xmin_alpha), empty(p.xmin_alpha_in), empty(p.xmin_alpha_out);
    return p;
  }
  const bool directed = g.directed();
  p.n_vertices = g.vertex_count();
  p.n_edges = g.edge_count();
  p.shrinkage = shrinkage_exponent(g);

  const TriangleCensus census = triangle_census(g);
  p.global_clustering = clustering(census, ClusteringKind::Global);

  const PathSummary undirected_paths = path_summary(g, false, config.threads);
  p.diameter_undirected = undirected_paths.diameter;
  if (directed) {
    p.diameter_directed = path_summary(g, true, config.threads).diameter;
  } else {
    p.diameter_directed = Measured<std::size_t>::undefined(reason::kNotApplicable);
  }

  std::size_t simple_pairs = 0;
  for (auto d : census.degree) simple_pairs += d;
  simple_pairs /= 2;
  p.small_worldliness = small_world_ratio(g, clustering(census, ClusteringKind::AverageLocal), undirected_paths,
                                          simple_pairs, config.baseline, config.baseline_samples,
                                          derive_seed(config.seed, 4), config.threads);

  const auto weak = components(g, ComponentMode::Weak);
  p.n_cc = weak.count;
  p.giant_cc = weak.giant_size;
  if (directed) {
    const auto strong = components(g, ComponentMode::Strong);
    p.n_scc = strong.count;
    p.giant_scc = strong.giant_size;
  } else {
    p.n_scc = Measured<std::size_t>::undefined(reason::kNotApplicable);
    p.giant_scc = Measured<std::size_t>::undefined(reason::kNotApplicable);
  }

  auto all = fit_exponent(g, DegreeMode::All, config, derive_seed(config.seed, 1));
  auto in = fit_exponent(g, DegreeMode::In, config, derive_seed(config.seed, 2));
  auto out = fit_exponent(g, DegreeMode::Out, config, derive_seed(config.seed, 3));
  p.alpha = all.alpha, p.pvalue_alpha = all.pvalue, p.xmin_alpha = all.xmin;
  p.alpha_in = in.alpha, p.pvalue_alpha_in = in.pvalue, p.xmin_alpha_in = in.xmin;
  p.alpha_out = out.alpha, p.pvalue_alpha_out = out.pvalue, p.xmin_alpha_out = out.xmin;
  return p;
}

}  // namespace colnet
