#include "colnet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace colnet {

Histogram histogram(std::span<const Series> series, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [label, values] : series) {
    for (double v : values) {
      if (!std::isfinite(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) throw std::invalid_argument("histogram: no finite values");
  if (lo == hi) {
    const double pad = std::max(std::abs(lo), 1.0) * 1e-9;
    lo -= pad;
    hi += pad;
  }
  Histogram h;
  const double width = (hi - lo) / static_cast<double>(bins);
  h.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) h.bin_edges[i] = lo + width * static_cast<double>(i);
  h.bin_edges.back() = hi;
  for (const auto& [label, values] : series) {
    std::vector<double> counts(bins, 0.0);
    std::size_t finite = 0;
    for (double v : values) {
      if (!std::isfinite(v)) continue;
      auto bin = static_cast<std::size_t>((v - lo) / width);
      counts[std::min(bin, bins - 1)] += 1.0;
      ++finite;
    }
    if (finite > 0) {
      for (auto& c : counts) c = 100.0 * c / static_cast<double>(finite);
    }
    h.labels.push_back(label);
    h.percentages.push_back(std::move(counts));
    h.finite_counts.push_back(finite);
  }
  return h;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi";
  for (const auto& l : h.labels) out << ',' << csv_field(l);
  out << '\n';
  for (std::size_t b = 0; b + 1 < h.bin_edges.size(); ++b) {
    out << format_double(h.bin_edges[b]) << ',' << format_double(h.bin_edges[b + 1]);
    for (const auto& series : h.percentages) out << ',' << format_double(series[b]);
    out << '\n';
  }
}

namespace {

std::vector<std::string_view> value_columns() {
  std::vector<std::string_view> cols(kPropertyNames.begin(), kPropertyNames.end());
  cols.insert(cols.end(), kXminNames.begin(), kXminNames.end());
  return cols;
}

void write_value_header(std::ostream& out) {
  for (auto name : value_columns()) out << ',' << name << ',' << name << "_reason";
}

void write_values(std::ostream& out, const GlobalProperties& p) {
  for (auto name : value_columns()) {
    const auto v = property_value(p, name);
    if (v.has_value()) {
      out << ',' << format_double(v.value()) << ',';
    } else {
      out << ",," << csv_field(v.reason());
    }
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

template <typename T>
void assign(Measured<T>& field, const std::string& value, const std::string& why) {
  if (value.empty()) {
    field = Measured<T>::undefined(why);
  } else {
    field = static_cast<T>(parse_double(value));
  }
}

}  // namespace

void write_properties_csv(std::ostream& out, std::span<const PropertiesRow> rows) {
  out << "doc_id,genre,net_type,components_informational";
  write_value_header(out);
  out << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.doc_id) << ',' << csv_field(r.genre) << ',' << to_string(r.net_type) << ','
        << (r.properties.components_informational ? "true" : "false");
    write_values(out, r.properties);
    out << '\n';
  }
}

std::vector<PropertiesRow> read_properties_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("properties CSV: missing header");
  const auto header = split_csv_line(line);
  const auto cols = value_columns();
  if (header.size() != 4 + 2 * cols.size()) throw std::invalid_argument("properties CSV: unexpected header");
  std::vector<PropertiesRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) throw std::invalid_argument("properties CSV: ragged row");
    PropertiesRow r;
    r.doc_id = f[0];
    r.genre = f[1];
    r.net_type = parse_net_type(f[2]);
    auto& p = r.properties;
    p.components_informational = f[3] == "true";
    std::size_t i = 4;
    auto next = [&](auto& field) {
      assign(field, f[i], f[i + 1]);
      i += 2;
    };
    next(p.n_vertices), next(p.n_edges), next(p.shrinkage), next(p.global_clustering);
    next(p.small_worldliness), next(p.diameter_directed), next(p.diameter_undirected);
    next(p.alpha), next(p.alpha_in), next(p.alpha_out);
    next(p.pvalue_alpha), next(p.pvalue_alpha_in), next(p.pvalue_alpha_out);
    next(p.n_cc), next(p.giant_cc), next(p.n_scc), next(p.giant_scc);
    next(p.xmin_alpha), next(p.xmin_alpha_in), next(p.xmin_alpha_out);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_growth_csv(std::ostream& out, const GrowthTrace& trace) {
  out << "k,edges_included";
  write_value_header(out);
  out << '\n';
  for (const auto& c : trace.checkpoints) {
    out << c.k << ',' << c.edges_included;
    write_values(out, c.properties);
    out << '\n';
  }
}

namespace {

std::string join_notes(const std::vector<std::string>& notes) {
  std::string s;
  for (const auto& n : notes) {
    if (!s.empty()) s += ';';
    s += n;
  }
  return s;
}

std::string optional_double(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void write_trend_csv(std::ostream& out, std::span<const TrendRow> rows) {
  out << "property,test,statistic,p,notes\n";
  for (const auto& r : rows) {
    out << r.property << ',' << r.result.test_name << ',' << format_double(r.result.statistic) << ','
        << optional_double(r.result.p_value) << ',' << csv_field(join_notes(r.result.notes)) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "property,test,group_a,group_b,statistic,p,p_bonferroni,family_size\n";
  for (const auto& r : rows) {
    out << r.property << ',' << r.test << ',' << csv_field(r.group_a) << ',' << csv_field(r.group_b) << ','
        << format_double(r.statistic) << ',' << optional_double(r.p) << ',' << optional_double(r.p_bonferroni)
        << ',' << r.family_size << '\n';
  }
}

}  // namespace colnet
