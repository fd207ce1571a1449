#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colnet/incremental.hpp"
#include "colnet/metrics.hpp"
#include "colnet/stats.hpp"

namespace colnet {

/// Equal-width bins over the pooled finite values of every series; each
/// series is reported as the percentage of its finite values per bin.
struct Histogram {
  std::vector<double> bin_edges;  ///< bins + 1 edges
  std::vector<std::string> labels;
  std::vector<std::vector<double>> percentages;  ///< [series][bin]
  std::vector<std::size_t> finite_counts;        ///< per series
};

using Series = std::pair<std::string, std::vector<double>>;

/// Throws std::invalid_argument when no series has a finite value. A
/// zero-width range is widened by a relative epsilon.
Histogram histogram(std::span<const Series> series, std::size_t bins = 20);

void write_histogram_csv(std::ostream& out, const Histogram& h);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// RFC 4180 quoting when needed.
std::string csv_field(std::string_view s);

/// One properties row per network.
struct PropertiesRow {
  std::string doc_id;
  std::string genre;
  NetType net_type = NetType::Digraph;
  GlobalProperties properties;
};

/// Header `doc_id,genre,net_type,components_informational` then, for every
/// property and xmin column in table order, `<name>,<name>_reason`.
void write_properties_csv(std::ostream& out, std::span<const PropertiesRow> rows);
std::vector<PropertiesRow> read_properties_csv(std::istream& in);

/// Header `k,edges_included` followed by the property/reason column pairs.
void write_growth_csv(std::ostream& out, const GrowthTrace& trace);

struct TrendRow {
  std::string property;
  TestResult result;
};
/// `property,test,statistic,p,notes`.
void write_trend_csv(std::ostream& out, std::span<const TrendRow> rows);

struct ComparisonRow {
  std::string property;
  std::string test;
  std::string group_a;
  std::string group_b;  ///< "omnibus" for the k-group tests
  double statistic = 0.0;
  std::optional<double> p;
  std::optional<double> p_bonferroni;
  std::size_t family_size = 1;
};
/// `property,test,group_a,group_b,statistic,p,p_bonferroni,family_size`.
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

}  // namespace colnet
