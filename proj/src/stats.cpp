#include "colnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "colnet/special.hpp"

namespace colnet {
namespace {

constexpr std::size_t kShortSeries = 10;

double mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

double two_sided_normal(double z) { return std::min(1.0, 2.0 * special::normal_cdf(-std::abs(z))); }

/// Sum over tie groups of t^3 - t.
double tie_term(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const auto t = static_cast<double>(j - i);
    sum += t * t * t - t;
    i = j;
  }
  return sum;
}

void require_groups(Groups groups) {
  if (groups.size() < 2) throw StatsError("at least two groups are required");
  for (const auto& g : groups) {
    if (g.size() < 2) throw StatsError("every group needs at least two values");
  }
}

std::vector<std::size_t> sizes_of(Groups groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.size());
  return out;
}

}  // namespace

bool TestResult::flagged(std::string_view note) const {
  return std::find(notes.begin(), notes.end(), note) != notes.end();
}

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

TestResult one_way_anova(Groups groups) {
  require_groups(groups);
  TestResult r;
  r.test_name = "anova";
  r.group_sizes = sizes_of(groups);
  std::size_t total = 0;
  double grand = 0.0;
  for (const auto& g : groups) {
    total += g.size();
    grand += std::accumulate(g.begin(), g.end(), 0.0);
  }
  const std::size_t k = groups.size();
  if (total < k + 1) throw StatsError("too few observations for the number of groups");
  grand /= static_cast<double>(total);
  double ssb = 0.0, ssw = 0.0;
  for (const auto& g : groups) {
    const double m = mean(g);
    ssb += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (double v : g) ssw += (v - m) * (v - m);
  }
  const double df1 = static_cast<double>(k - 1);
  const double df2 = static_cast<double>(total - k);
  if (ssw == 0.0) {
    r.notes.push_back("zero within-group variance");
    if (ssb == 0.0) {
      r.statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.statistic = std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
    return r;
  }
  r.statistic = (ssb / df1) / (ssw / df2);
  r.p_value = special::f_sf(df1, df2, r.statistic);
  return r;
}

TestResult kruskal_wallis(Groups groups) {
  require_groups(groups);
  TestResult r;
  r.test_name = "kruskal_wallis";
  r.group_sizes = sizes_of(groups);
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto n = static_cast<double>(pooled.size());
  const auto ranks = midranks(pooled);
  const double ties = tie_term(pooled);
  if (ties > 0.0) r.notes.push_back("ties");
  const double correction = 1.0 - ties / (n * n * n - n);
  if (correction <= 0.0) {
    r.notes.push_back("all values identical");
    r.statistic = 0.0;
    r.p_value = 1.0;
    return r;
  }
  double sum = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    const double rank_sum = std::accumulate(ranks.begin() + static_cast<std::ptrdiff_t>(offset),
                                            ranks.begin() + static_cast<std::ptrdiff_t>(offset + g.size()), 0.0);
    sum += rank_sum * rank_sum / static_cast<double>(g.size());
    offset += g.size();
  }
  const double h = 12.0 / (n * (n + 1.0)) * sum - 3.0 * (n + 1.0);
  r.statistic = std::max(0.0, h / correction);
  r.p_value = special::chi2_sf(static_cast<double>(groups.size() - 1), r.statistic);
  return r;
}

TestResult t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw StatsError("t-test needs at least two values per sample");
  TestResult r;
  r.test_name = "welch_t";
  r.group_sizes = {a.size(), b.size()};
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double va = sample_variance(a) / na;
  const double vb = sample_variance(b) / nb;
  const double diff = mean(a) - mean(b);
  if (va + vb == 0.0) {
    r.notes.push_back("zero variance");
    r.statistic = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    r.p_value = diff == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.statistic = diff / std::sqrt(va + vb);
  const double dof = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  r.p_value = std::min(1.0, 2.0 * special::t_cdf(dof, -std::abs(r.statistic)));
  return r;
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw StatsError("U-test needs at least two values per sample");
  TestResult r;
  r.test_name = "mann_whitney_u";
  r.group_sizes = {a.size(), b.size()};
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = midranks(pooled);
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double n = na + nb;
  const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);
  r.statistic = rank_sum - na * (na + 1.0) / 2.0;
  const double ties = tie_term(pooled);
  if (ties > 0.0) r.notes.push_back("ties");
  const double variance = na * nb / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
  if (variance <= 0.0) {
    r.notes.push_back("all values identical");
    r.p_value = 1.0;
    return r;
  }
  const double z = std::max(0.0, std::abs(r.statistic - na * nb / 2.0) - 0.5) / std::sqrt(variance);
  r.p_value = two_sided_normal(z);
  return r;
}

namespace {

double ks_pvalue(double d, double effective_n) {
  const double root = std::sqrt(effective_n);
  return special::kolmogorov_sf((root + 0.12 + 0.11 / root) * d);
}

}  // namespace

TestResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw StatsError("KS test needs non-empty samples");
  TestResult r;
  r.test_name = "ks_two_sample";
  r.group_sizes = {a.size(), b.size()};
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto na = static_cast<double>(x.size());
  const auto nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  r.statistic = d;
  r.p_value = ks_pvalue(d, na * nb / (na + nb));
  return r;
}

TestResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw StatsError("KS test needs a non-empty sample");
  TestResult r;
  r.test_name = "ks_one_sample";
  r.group_sizes = {samples.size()};
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const auto n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  r.statistic = d;
  r.p_value = ks_pvalue(d, n);
  return r;
}

std::vector<double> bonferroni(std::span<const double> p_values, std::size_t m) {
  if (m < p_values.size()) throw StatsError("family size smaller than the number of p-values");
  std::vector<double> out;
  out.reserve(p_values.size());
  for (double p : p_values) out.push_back(std::min(1.0, static_cast<double>(m) * p));
  return out;
}

TestResult runs_test(std::span<const double> series) {
  TestResult r;
  r.test_name = "runs";
  r.group_sizes = {series.size()};
  if (series.size() < kShortSeries) r.notes.push_back("short series");
  if (series.empty()) {
    r.notes.push_back("constant series");
    return r;
  }
  std::vector<double> sorted(series.begin(), series.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  std::vector<bool> above;
  for (double v : series) {
    if (v != median) above.push_back(v > median);
  }
  const auto n1 = static_cast<double>(std::count(above.begin(), above.end(), true));
  const auto n2 = static_cast<double>(above.size()) - n1;
  r.group_sizes = {static_cast<std::size_t>(n1), static_cast<std::size_t>(n2)};
  if (n1 == 0.0 || n2 == 0.0) {
    r.notes.push_back("constant series");
    return r;
  }
  double runs = 1.0;
  for (std::size_t i = 1; i < above.size(); ++i) {
    if (above[i] != above[i - 1]) runs += 1.0;
  }
  const double m = n1 + n2;
  const double expected = 2.0 * n1 * n2 / m + 1.0;
  const double variance = 2.0 * n1 * n2 * (2.0 * n1 * n2 - m) / (m * m * (m - 1.0));
  if (variance <= 0.0) {
    r.notes.push_back("degenerate variance");
    return r;
  }
  const double z = (runs - expected) / std::sqrt(variance);
  r.statistic = z;
  r.p_value = two_sided_normal(z);
  return r;
}

TestResult bartels_test(std::span<const double> series) {
  TestResult r;
  r.test_name = "bartels";
  r.group_sizes = {series.size()};
  if (series.size() < kShortSeries) r.notes.push_back("short series");
  if (series.size() < 3) {
    r.notes.push_back("constant series");
    return r;
  }
  const auto ranks = midranks(series);
  const auto n = static_cast<double>(ranks.size());
  const double mean_rank = (n + 1.0) / 2.0;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    den += (ranks[i] - mean_rank) * (ranks[i] - mean_rank);
    if (i + 1 < ranks.size()) num += (ranks[i] - ranks[i + 1]) * (ranks[i] - ranks[i + 1]);
  }
  if (den == 0.0) {
    r.notes.push_back("constant series");
    return r;
  }
  r.statistic = num / den;
  const double variance = 4.0 * (n - 2.0) * (5.0 * n * n - 2.0 * n - 9.0) / (5.0 * n * (n + 1.0) * (n - 1.0) * (n - 1.0));
  r.p_value = two_sided_normal((r.statistic - 2.0) / std::sqrt(variance));
  return r;
}

TestResult mann_kendall(std::span<const double> series) {
  TestResult r;
  r.test_name = "mann_kendall";
  r.group_sizes = {series.size()};
  if (series.size() < kShortSeries) r.notes.push_back("short series");
  const std::size_t n = series.size();
  long long s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s += (series[j] > series[i]) - (series[j] < series[i]);
  }
  r.statistic = static_cast<double>(s);
  if (n >= 2) r.kendall_tau = static_cast<double>(s) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
  std::vector<double> values(series.begin(), series.end());
  const auto nd = static_cast<double>(n);
  // sum t(t-1)(2t+5) over tie groups
  std::sort(values.begin(), values.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const auto t = static_cast<double>(j - i);
    ties += t * (t - 1.0) * (2.0 * t + 5.0);
    i = j;
  }
  const double variance = (nd * (nd - 1.0) * (2.0 * nd + 5.0) - ties) / 18.0;
  if (variance <= 0.0) {
    r.notes.push_back("constant series");
    r.kendall_tau.reset();
    return r;
  }
  if (ties > 0.0) r.notes.push_back("ties");
  const double z = s > 0 ? (static_cast<double>(s) - 1.0) / std::sqrt(variance)
                 : s < 0 ? (static_cast<double>(s) + 1.0) / std::sqrt(variance)
                         : 0.0;
  r.p_value = two_sided_normal(z);
  return r;
}

}  // namespace colnet
