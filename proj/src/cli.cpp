#include "colnet/cli.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "colnet/corpus.hpp"
#include "colnet/parallel.hpp"
#include "colnet/powerlaw.hpp"
#include "colnet/random.hpp"
#include "colnet/report.hpp"
#include "colnet/stats.hpp"

namespace colnet::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string safe_name(std::string_view s) {
  std::string out;
  for (char c : s) out += (c == '/' || c == '\\' || c == ' ') ? '_' : c;
  return out;
}

PropertyConfig property_config(const RunConfig& c) {
  PropertyConfig p;
  p.baseline = c.baseline;
  p.baseline_samples = c.baseline_samples;
  p.seed = c.seed;
  p.bootstrap_b = c.bootstrap_b;
  p.compute_pvalues = c.pvalues;
  p.xmin_fixed = c.xmin_fixed;
  p.estimator = c.estimator;
  return p;
}

std::vector<std::string> selected_properties(const RunConfig& c) {
  std::vector<std::string> out;
  if (c.properties.empty()) {
    for (auto p : kFigureProperties) out.emplace_back(p);
  } else {
    for (const auto& p : c.properties) {
      if (!is_property_name(p)) throw UsageError("unknown property: " + p);
      out.push_back(p);
    }
  }
  return out;
}

Corpus load(const RunConfig& c) {
  if (c.corpus.empty()) throw UsageError("--corpus is required");
  Corpus corpus = load_corpus(c.corpus, c.manifest);
  for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
  return corpus;
}

ordered_json config_echo(std::string_view subcommand, const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = subcommand;
  j["corpus"] = c.corpus.generic_string();
  if (c.manifest) j["manifest"] = c.manifest->generic_string();
  ordered_json types = ordered_json::array();
  for (auto t : c.net_types) types.push_back(to_string(t));
  j["net_types"] = types;
  j["properties"] = selected_properties(c);
  j["seed"] = c.seed;
  j["baseline"] = to_string(c.baseline);
  j["baseline_samples"] = c.baseline_samples;
  j["bootstrap_b"] = c.bootstrap_b;
  j["pvalues"] = c.pvalues;
  j["xmin"] = c.xmin_fixed ? ordered_json(*c.xmin_fixed) : ordered_json("estimated");
  j["alpha_estimator"] = c.estimator == AlphaEstimator::Exact ? "exact" : "approximate";
  j["order"] = to_string(c.order);
  j["bins"] = c.bins;
  j["group_by"] = c.group_by == GroupBy::Genre ? "genre" : "net-type";
  if (c.genre) j["genre"] = *c.genre;
  j["checkpoints"] = c.checkpoints;
  j["growth_pvalues"] = c.growth_pvalues;
  j["threads"] = c.threads;
  return j;
}

void write_metadata(std::string_view subcommand, const RunConfig& c, const ordered_json& extra) {
  ordered_json meta;
  meta["tool"] = "colnet";
  meta["version"] = kVersion;
  meta["rng"] = kRngName;
  meta["seed"] = c.seed;
  meta["config"] = config_echo(subcommand, c);
  for (const auto& [k, v] : extra.items()) meta[k] = v;
  const auto now = std::chrono::system_clock::now();
  meta["generated_at_unix"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  auto out = open_output(c.out / "metadata.json");
  out << meta.dump(2) << '\n';
}

std::vector<PropertiesRow> compute_rows(const Corpus& corpus, const RunConfig& c) {
  struct Cell {
    const Document* doc;
    NetType type;
  };
  std::vector<Cell> cells;
  for (const auto& d : corpus.documents) {
    for (auto t : c.net_types) cells.push_back({&d, t});
  }
  std::vector<PropertiesRow> rows(cells.size());
  const PropertyConfig base = property_config(c);
  parallel_for(cells.size(), c.threads, [&](std::size_t i) {
    const auto& [doc, type] = cells[i];
    PropertyConfig pc = base;
    pc.seed = document_seed(c.seed, doc->doc_id, type);
    pc.document_network = true;
    rows[i] = {doc->doc_id, doc->genre, type, compute_properties(build_network(doc->tokens, type), pc)};
    if (!rows[i].properties.n_vertices.has_value()) {
      std::cerr << "note: " << doc->doc_id << " (" << to_string(type)
                << "): " << rows[i].properties.n_vertices.reason() << '\n';
    }
  });
  return rows;
}

std::vector<PropertiesRow> obtain_rows(const RunConfig& c) {
  if (c.props_input) {
    std::ifstream in(*c.props_input);
    if (!in) throw UsageError("cannot read " + c.props_input->string());
    return read_properties_csv(in);
  }
  return compute_rows(load(c), c);
}

/// Groups of finite values keyed by series label, for one property.
struct Panel {
  std::string name;  ///< fixed net type or genre
  std::vector<std::string> labels;
  std::map<std::string, std::vector<const PropertiesRow*>> members;
};

std::vector<Panel> panels(const std::vector<PropertiesRow>& rows, const RunConfig& c) {
  std::vector<Panel> out;
  if (c.group_by == GroupBy::Genre) {
    for (auto t : c.net_types) {
      Panel p;
      p.name = std::string(to_string(t));
      for (const auto& r : rows) {
        if (r.net_type == t) p.members[r.genre].push_back(&r);
      }
      for (const auto& [g, m] : p.members) p.labels.push_back(g);
      if (!p.labels.empty()) out.push_back(std::move(p));
    }
  } else {
    std::set<std::string> genres;
    for (const auto& r : rows) genres.insert(r.genre);
    for (const auto& g : genres) {
      if (c.genre && *c.genre != g) continue;
      Panel p;
      p.name = g;
      for (auto t : c.net_types) {
        for (const auto& r : rows) {
          if (r.genre == g && r.net_type == t) p.members[std::string(to_string(t))].push_back(&r);
        }
        if (p.members.count(std::string(to_string(t)))) p.labels.emplace_back(to_string(t));
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<double> finite_values(const std::vector<const PropertiesRow*>& members, std::string_view property) {
  std::vector<double> v;
  for (const auto* r : members) {
    const auto m = property_value(r->properties, property);
    if (m.has_value() && std::isfinite(m.value())) v.push_back(m.value());
  }
  return v;
}

int run_build(const RunConfig& c) {
  const Corpus corpus = load(c);
  std::size_t written = 0;
  for (const auto& d : corpus.documents) {
    for (auto t : c.net_types) {
      auto out = open_output(c.out / "networks" / (d.doc_id + "." + std::string(to_string(t)) + ".edges"));
      write_edge_list(out, build_network(d.tokens, t));
      ++written;
    }
  }
  if (!corpus.empty()) {
    for (auto t : c.net_types) {
      auto out = open_output(c.out / "networks" / ("collection." + std::string(to_string(t)) + ".edges"));
      write_edge_list(out, build_collection_network(corpus, t));
      ++written;
    }
  }
  write_metadata("build", c, {{"networks_written", written}});
  return 0;
}

int run_props(const RunConfig& c) {
  const Corpus corpus = load(c);
  const auto rows = compute_rows(corpus, c);
  auto out = open_output(c.out / "properties.csv");
  write_properties_csv(out, rows);
  write_metadata("props", c, {{"rows", rows.size()}, {"documents", corpus.documents.size()}});
  return 0;
}

int run_dist(const RunConfig& c) {
  const auto rows = obtain_rows(c);
  const auto props = selected_properties(c);
  std::size_t files = 0;
  for (const auto& panel : panels(rows, c)) {
    for (const auto& prop : props) {
      std::vector<Series> series;
      for (const auto& label : panel.labels) series.emplace_back(label, finite_values(panel.members.at(label), prop));
      Histogram h;
      try {
        h = histogram(series, c.bins);
      } catch (const std::invalid_argument&) {
        std::cerr << "note: " << panel.name << '/' << prop << ": no finite values, histogram skipped\n";
        continue;
      }
      auto out = open_output(c.out / "dist" / safe_name(panel.name) / (prop + ".csv"));
      write_histogram_csv(out, h);
      ++files;
    }
  }
  write_metadata("dist", c, {{"histograms", files}});
  return 0;
}

ComparisonRow test_row(std::string_view property, std::string_view test, std::string_view a, std::string_view b,
                       auto&& fn) {
  ComparisonRow row;
  row.property = property;
  row.test = test;
  row.group_a = a;
  row.group_b = b;
  try {
    const TestResult r = fn();
    row.statistic = r.statistic;
    row.p = r.p_value;
  } catch (const StatsError& e) {
    row.statistic = std::numeric_limits<double>::quiet_NaN();
    std::cerr << "note: " << property << ' ' << test << ' ' << a << '/' << b << ": " << e.what() << '\n';
  }
  return row;
}

int run_compare(const RunConfig& c) {
  const auto rows = obtain_rows(c);
  const auto props = selected_properties(c);
  ordered_json families = ordered_json::object();
  for (const auto& panel : panels(rows, c)) {
    const std::size_t g = panel.labels.size();
    const std::size_t pairs = g * (g - 1) / 2;
    const std::size_t family = pairs * props.size();
    families[panel.name] = {{"groups", g}, {"pairs", pairs}, {"properties", props.size()}, {"family_size", family}};
    std::vector<ComparisonRow> out_rows;
    for (const auto& prop : props) {
      std::vector<std::vector<double>> groups;
      for (const auto& label : panel.labels) groups.push_back(finite_values(panel.members.at(label), prop));
      std::string all_labels;
      for (const auto& l : panel.labels) all_labels += (all_labels.empty() ? "" : "|") + l;
      for (auto [name, fn] : {std::pair{"anova", &one_way_anova}, std::pair{"kruskal_wallis", &kruskal_wallis}}) {
        auto row = test_row(prop, name, all_labels, "omnibus", [&] { return fn(groups); });
        row.p_bonferroni = row.p;
        out_rows.push_back(row);
      }
      using Pairwise = TestResult (*)(std::span<const double>, std::span<const double>);
      for (auto [name, fn] : {std::pair<const char*, Pairwise>{"welch_t", &t_test},
                              std::pair<const char*, Pairwise>{"mann_whitney_u", &mann_whitney_u},
                              std::pair<const char*, Pairwise>{"ks_two_sample", &ks_two_sample}}) {
        for (std::size_t i = 0; i < g; ++i) {
          for (std::size_t j = i + 1; j < g; ++j) {
            auto row = test_row(prop, name, panel.labels[i], panel.labels[j], [&] { return fn(groups[i], groups[j]); });
            if (row.p) row.p_bonferroni = std::min(1.0, static_cast<double>(family) * *row.p);
            row.family_size = family;
            out_rows.push_back(row);
          }
        }
      }
    }
    auto out = open_output(c.out / "compare" / (safe_name(panel.name) + ".csv"));
    write_comparison_csv(out, out_rows);
  }
  write_metadata("compare", c, {{"bonferroni_families", families}});
  return 0;
}

int run_grow(const RunConfig& c) {
  Corpus corpus = load(c);
  if (c.genre) {
    std::vector<Document> kept;
    for (auto& d : corpus.documents) {
      if (d.genre == *c.genre) kept.push_back(std::move(d));
    }
    corpus = make_corpus(std::move(kept));
    if (corpus.empty()) throw UsageError("no documents in genre " + *c.genre);
  }
  PropertyConfig pc = property_config(c);
  pc.compute_pvalues = c.growth_pvalues;
  ordered_json streams = ordered_json::object();
  for (auto t : c.net_types) {
    const EdgeStream stream = order_edges(corpus, t, c.order);
    const GrowthTrace trace = growth_trace(stream, c.checkpoints, pc, c.threads);
    const std::string name(to_string(t));
    streams[name] = stream.size();
    {
      auto out = open_output(c.out / "grow" / (name + ".csv"));
      write_growth_csv(out, trace);
    }
    std::vector<TrendRow> trends;
    for (auto prop : kPropertyNames) {
      try {
        for (auto& r : trend_tests(trace, prop)) trends.push_back({std::string(prop), std::move(r)});
      } catch (const StatsError& e) {
        std::cerr << "note: " << name << ' ' << prop << ": " << e.what() << '\n';
      }
    }
    auto out = open_output(c.out / "grow" / (name + "_trends.csv"));
    write_trend_csv(out, trends);
  }
  write_metadata("grow", c, {{"stream_edges", streams}});
  return 0;
}

int run_fit(const RunConfig& c) {
  if (!c.fit_input) throw UsageError("fit needs --input");
  std::ifstream in(*c.fit_input);
  if (!in) throw UsageError("cannot read " + c.fit_input->string());
  std::vector<std::uint64_t> samples;
  std::size_t zeros = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::uint64_t v = 0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    if (res.ec != std::errc() || res.ptr != line.data() + line.size()) {
      throw UsageError("line " + std::to_string(line_no) + ": not a non-negative integer");
    }
    if (v == 0) {
      ++zeros;
    } else {
      samples.push_back(v);
    }
  }
  const FitOptions options{c.xmin_fixed, c.estimator};
  const PowerLawFit fit = fit_powerlaw(samples, options);
  std::optional<GofResult> gof;
  if (c.pvalues) {
    try {
      gof = gof_test(samples, fit, c.bootstrap_b, c.seed, options);
    } catch (const FitError& e) {
      std::cerr << "note: p-value: " << e.what() << '\n';
    }
  }
  std::ostringstream csv;
  csv << "n,zeros_excluded,xmin,alpha,ks_distance,n_tail,degenerate,p_value,replicates\n"
      << fit.n << ',' << zeros << ',' << fit.xmin << ',' << format_double(fit.alpha) << ','
      << format_double(fit.ks_distance) << ',' << fit.n_tail << ',' << (fit.degenerate ? "true" : "false") << ','
      << (gof ? format_double(gof->p_value) : "") << ',' << (gof ? std::to_string(gof->replicates) : "") << '\n';
  std::cout << csv.str();
  auto out = open_output(c.out / "fit.csv");
  out << csv.str();
  write_metadata("fit", c, {});
  return 0;
}

}  // namespace

std::uint64_t document_seed(std::uint64_t master, std::string_view doc_id, NetType type) {
  return derive_seed(derive_seed(master, hash_string(doc_id)), static_cast<std::uint64_t>(type));
}

int run(std::string_view subcommand, const RunConfig& config) {
  try {
    if (subcommand == "build") return run_build(config);
    if (subcommand == "props") return run_props(config);
    if (subcommand == "dist") return run_dist(config);
    if (subcommand == "compare") return run_compare(config);
    if (subcommand == "grow") return run_grow(config);
    if (subcommand == "fit") return run_fit(config);
    std::cerr << "error: unknown subcommand '" << subcommand << "'\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace colnet::cli
