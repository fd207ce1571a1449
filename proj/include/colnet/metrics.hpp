#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "colnet/graphalg.hpp"
#include "colnet/measured.hpp"
#include "colnet/network.hpp"
#include "colnet/powerlaw.hpp"

namespace colnet {

enum class Baseline { Analytic, Sampled };

std::string_view to_string(Baseline b);
Baseline parse_baseline(std::string_view name);

struct PropertyConfig {
  Baseline baseline = Baseline::Analytic;
  std::size_t baseline_samples = 10;
  std::uint64_t seed = 0;
  std::size_t bootstrap_b = 100;
  bool compute_pvalues = true;
  std::optional<std::uint64_t> xmin_fixed;
  AlphaEstimator estimator = AlphaEstimator::Exact;
  /// Marks component fields as informational (always 1 / |V| for documents).
  bool document_network = false;
  unsigned threads = 1;
};

/// The seventeen global properties, plus the xmin chosen for each exponent.
struct GlobalProperties {
  Measured<std::size_t> n_vertices;
  Measured<std::size_t> n_edges;
  Measured<double> shrinkage;
  Measured<double> global_clustering;
  Measured<double> small_worldliness;
  Measured<std::size_t> diameter_directed;
  Measured<std::size_t> diameter_undirected;
  Measured<double> alpha;
  Measured<double> alpha_in;
  Measured<double> alpha_out;
  Measured<double> pvalue_alpha;
  Measured<double> pvalue_alpha_in;
  Measured<double> pvalue_alpha_out;
  Measured<std::size_t> n_cc;
  Measured<std::size_t> giant_cc;
  Measured<std::size_t> n_scc;
  Measured<std::size_t> giant_scc;

  Measured<std::uint64_t> xmin_alpha;
  Measured<std::uint64_t> xmin_alpha_in;
  Measured<std::uint64_t> xmin_alpha_out;

  bool components_informational = false;

  friend bool operator==(const GlobalProperties&, const GlobalProperties&) = default;
};

/// Property names in table order, as used in CSV headers and on the CLI.
inline constexpr std::array<std::string_view, 17> kPropertyNames = {
    "n_vertices",      "n_edges",          "shrinkage", "global_clustering", "small_worldliness",
    "diameter_directed", "diameter_undirected", "alpha", "alpha_in",        "alpha_out",
    "pvalue_alpha",    "pvalue_alpha_in",  "pvalue_alpha_out", "n_cc",      "giant_cc",
    "n_scc",           "giant_scc"};

/// Extra fit columns emitted after the seventeen properties.
inline constexpr std::array<std::string_view, 3> kXminNames = {"xmin_alpha", "xmin_alpha_in", "xmin_alpha_out"};

/// Any property (or xmin column) by name, widened to double. Throws
/// std::invalid_argument for unknown names.
Measured<double> property_value(const GlobalProperties& p, std::string_view name);
bool is_property_name(std::string_view name);

/// ln|E| / ln|V|.
Measured<double> shrinkage_exponent(const Graph& g);

/// (C/L) / (C_rand/L_rand) with C the average local clustering and L the
/// mean shortest path, both direction-ignored. Analytic: C_rand = k/n and
/// L_rand = ln n / ln k, k = 2m/n. Sampled: means over G(n, m) graphs.
/// Here m counts distinct non-loop vertex pairs.
Measured<double> small_worldliness(const Graph& g, Baseline baseline, std::size_t samples, std::uint64_t seed,
                                   unsigned threads = 1);

GlobalProperties compute_properties(const Graph& g, const PropertyConfig& config);
inline GlobalProperties compute_properties(const CollocationNetwork& net, const PropertyConfig& config) {
  return compute_properties(net.graph(), config);
}

}  // namespace colnet
