#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace colnet {

struct TestResult {
  std::string test_name;
  double statistic = 0.0;
  /// Missing when the data are degenerate (see notes).
  std::optional<double> p_value;
  std::vector<std::size_t> group_sizes;
  /// Flags such as "ties", "zero variance", "constant series", "short series".
  std::vector<std::string> notes;
  /// Mann-Kendall only.
  std::optional<double> kendall_tau;

  bool flagged(std::string_view note) const;
};

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Midranks (1-based) of `values`, ties sharing their average rank.
std::vector<double> midranks(std::span<const double> values);

using Groups = std::span<const std::vector<double>>;

/// F = (SSB/(k-1)) / (SSW/(N-k)).
TestResult one_way_anova(Groups groups);

/// H with midranks and tie correction, chi-square with k-1 dof.
TestResult kruskal_wallis(Groups groups);

/// Welch's unequal-variance t with Welch-Satterthwaite dof, two-sided.
TestResult t_test(std::span<const double> a, std::span<const double> b);

/// Statistic U_a = R_a - n_a(n_a+1)/2; normal approximation with continuity
/// and tie corrections, two-sided.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// D = max |F_a - F_b|; p from the Kolmogorov limit at
/// (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * D, ne = n_a n_b / (n_a + n_b).
TestResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Two-sided one-sample KS against a continuous CDF, same p approximation.
TestResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf);

/// min(1, m * p) for each p. Requires m >= p_values.size().
std::vector<double> bonferroni(std::span<const double> p_values, std::size_t m);

/// Wald-Wolfowitz runs above/below the median; values equal to the median
/// are dropped. statistic is Z; group_sizes is {above, below}.
TestResult runs_test(std::span<const double> series);

/// Rank von Neumann ratio, normal approximation, two-sided. RVN < 2 signals
/// positive serial correlation.
TestResult bartels_test(std::span<const double> series);

/// S, tie-corrected variance, continuity-corrected Z, two-sided; also tau.
TestResult mann_kendall(std::span<const double> series);

}  // namespace colnet
