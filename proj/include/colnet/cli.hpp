#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colnet/incremental.hpp"
#include "colnet/metrics.hpp"
#include "colnet/network.hpp"

namespace colnet::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// The eight properties compared across genres and network types.
inline constexpr std::array<std::string_view, 8> kFigureProperties = {
    "n_edges",           "diameter_directed", "diameter_undirected", "small_worldliness",
    "global_clustering", "shrinkage",         "alpha",               "pvalue_alpha"};

enum class GroupBy { Genre, NetType };

struct RunConfig {
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> manifest;
  std::vector<NetType> net_types = {NetType::Digraph};
  std::vector<std::string> properties;  ///< empty: kFigureProperties
  std::uint64_t seed = 1;
  Baseline baseline = Baseline::Analytic;
  std::size_t baseline_samples = 10;
  std::size_t bootstrap_b = 100;
  bool pvalues = true;
  std::optional<std::uint64_t> xmin_fixed;
  AlphaEstimator estimator = AlphaEstimator::Exact;
  EdgeOrder order = EdgeOrder::Occurrence;
  std::size_t bins = 20;
  std::filesystem::path out = "colnet-out";
  GroupBy group_by = GroupBy::Genre;
  std::optional<std::string> genre;
  std::vector<int> checkpoints = default_checkpoints();
  bool growth_pvalues = false;
  std::optional<std::filesystem::path> props_input;
  std::optional<std::filesystem::path> fit_input;
  unsigned threads = 1;
};

/// Runs one of build, props, dist, compare, grow, fit. Data artifacts go
/// under config.out together with metadata.json. Returns the exit status;
/// errors are reported on stderr.
int run(std::string_view subcommand, const RunConfig& config);

/// Seed used for one (document, network type) cell.
std::uint64_t document_seed(std::uint64_t master, std::string_view doc_id, NetType type);

}  // namespace colnet::cli
