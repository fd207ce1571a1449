#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "colnet/cli.hpp"

namespace {

using colnet::cli::RunConfig;

std::vector<colnet::NetType> expand_net_types(const std::vector<std::string>& names) {
  std::vector<colnet::NetType> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(colnet::kAllNetTypes.begin(), colnet::kAllNetTypes.end());
      return out;
    }
    const auto t = colnet::parse_net_type(n);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word collocation networks: construction, global properties and growth analysis"};
  app.set_version_flag("--version", std::string(colnet::cli::kVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::string corpus;
  std::string manifest;
  std::vector<std::string> net_types = {"digraph"};
  std::string baseline = "analytic";
  std::string order = "occurrence";
  std::string xmin;
  std::string estimator = "exact";
  std::string group_by = "genre";
  std::string genre;
  std::string props_input;
  std::string fit_input;
  std::string out = config.out.string();
  bool no_pvalues = false;

  const std::map<std::string, std::string> descriptions = {
      {"build", "write per-document and collection edge lists"},
      {"props", "compute the global properties of every document network"},
      {"dist", "histograms of properties grouped by genre or network type"},
      {"compare", "omnibus and pairwise significance tests between groups"},
      {"grow", "incremental construction and trend tests"},
      {"fit", "discrete power-law fit of an integer sample"}};

  for (const auto& [name, description] : descriptions) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--out", out, "output directory")->envname("COLNET_OUT")->capture_default_str();
    sub->add_option("--seed", config.seed, "master seed")->envname("COLNET_SEED")->capture_default_str();
    sub->add_option("--threads", config.threads, "worker threads")->envname("COLNET_THREADS")->check(CLI::PositiveNumber);
    if (name == "fit") {
      sub->add_option("--input", fit_input, "file with one non-negative integer per line")->required();
    } else {
      sub->add_option("--corpus", corpus, "corpus root directory")->envname("COLNET_CORPUS");
      sub->add_option("--manifest", manifest, "tab-separated path/genre manifest")->envname("COLNET_MANIFEST");
      sub->add_option("--net-type", net_types, "network type(s) or 'all'")
          ->delimiter(',')
          ->check(CLI::IsMember({"digraph", "undigraph1", "undigraph2", "sdigraph", "sundigraph1", "sundigraph2", "all"}))
          ->capture_default_str();
      if (name == "dist" || name == "compare") {
        sub->add_option("--props", props_input, "reuse a properties.csv instead of the corpus");
        sub->add_option("--by", group_by, "grouping")->check(CLI::IsMember({"genre", "net-type"}))->capture_default_str();
        sub->add_option("--genre", genre, "restrict --by net-type to one genre");
        sub->add_option("--properties", config.properties, "properties to analyse")->delimiter(',');
        if (name == "dist") sub->add_option("--bins", config.bins, "histogram bins")->check(CLI::PositiveNumber);
      }
      if (name == "grow") {
        sub->add_option("--genre", genre, "restrict to one genre");
        sub->add_option("--order", order, "edge order")->check(CLI::IsMember({"occurrence", "frequency"}))->capture_default_str();
        sub->add_option("--checkpoints", config.checkpoints, "percentages of the edge stream (default 1..100)")->delimiter(',');
        sub->add_flag("--growth-pvalues", config.growth_pvalues, "compute bootstrap p-values at every checkpoint");
      }
    }
    sub->add_option("--baseline", baseline, "small-worldliness baseline")
        ->check(CLI::IsMember({"analytic", "sampled"}))
        ->envname("COLNET_BASELINE")
        ->capture_default_str();
    sub->add_option("--baseline-samples", config.baseline_samples, "random graphs for the sampled baseline")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bootstrap-b", config.bootstrap_b, "bootstrap replicates for p-values")
        ->envname("COLNET_BOOTSTRAP_B")
        ->check(CLI::Range(1, 2500));
    sub->add_flag("--no-pvalues", no_pvalues, "skip bootstrap p-values");
    sub->add_option("--xmin-fixed", xmin, "fix xmin instead of estimating it");
    sub->add_option("--alpha-estimator", estimator, "power-law exponent estimator")
        ->check(CLI::IsMember({"exact", "approximate"}))
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every parse failure is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    config.corpus = corpus;
    if (!manifest.empty()) config.manifest = manifest;
    config.net_types = expand_net_types(net_types);
    config.baseline = colnet::parse_baseline(baseline);
    config.order = colnet::parse_edge_order(order);
    config.estimator = estimator == "exact" ? colnet::AlphaEstimator::Exact : colnet::AlphaEstimator::Approximate;
    config.group_by = group_by == "genre" ? colnet::cli::GroupBy::Genre : colnet::cli::GroupBy::NetType;
    if (!genre.empty()) config.genre = genre;
    if (!props_input.empty()) config.props_input = props_input;
    if (!fit_input.empty()) config.fit_input = fit_input;
    config.out = out;
    config.pvalues = !no_pvalues;
    if (!xmin.empty()) {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(xmin, &used);
      if (used != xmin.size() || v == 0) throw std::invalid_argument("--xmin-fixed must be a positive integer");
      config.xmin_fixed = v;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  return colnet::cli::run(app.get_subcommands().front()->get_name(), config);
}
