#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "colnet/network.hpp"
#include "colnet/random.hpp"

namespace colnet {

/// A power-law quantity could not be computed. what() is a reason code.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DegreeMode { In, Out, All };

struct DegreeSequence {
  DegreeMode mode = DegreeMode::All;
  std::vector<std::uint64_t> counts;  ///< one entry per vertex, by id
};

/// A self-loop adds 1 to in- and out-degree, 2 to the undirected degree.
/// In/Out on an undirected graph throws FitError("not applicable").
DegreeSequence degree_sequence(const Graph& g, DegreeMode mode);

/// Hurwitz zeta sum_{k>=0} (k + q)^-s for s > 1, q > 0: direct terms up to
/// q + k >= 20 (or 20 + s when s is large), then an Euler-Maclaurin tail.
double hurwitz_zeta(double s, double q);

enum class AlphaEstimator {
  Exact,        ///< discrete MLE, golden-section over (1, 20]
  Approximate,  ///< 1 + n / sum ln(x / (xmin - 1/2))
};

inline constexpr double kAlphaUpper = 20.0;
inline constexpr double kAlphaTolerance = 1e-6;

/// Exponent of the discrete power law fitted to samples >= xmin.
double mle_alpha(std::span<const std::uint64_t> samples, std::uint64_t xmin,
                 AlphaEstimator estimator = AlphaEstimator::Exact);

struct PowerLawFit {
  std::uint64_t xmin = 1;
  double alpha = 0.0;
  double ks_distance = 0.0;  ///< over the tail only
  std::size_t n_tail = 0;
  std::size_t n = 0;
  bool degenerate = false;  ///< only one admissible xmin candidate existed
};

/// Largest |S_emp(x) - S_fit(x)| over integers x >= xmin, tail samples only.
double ks_distance(std::span<const std::uint64_t> samples, std::uint64_t xmin, double alpha);

PowerLawFit fit_at_xmin(std::span<const std::uint64_t> samples, std::uint64_t xmin,
                        AlphaEstimator estimator = AlphaEstimator::Exact);

/// Scans every distinct sample value as xmin and keeps the fit with the
/// smallest KS distance (ties go to the smaller xmin). Candidates whose tail
/// has a single distinct value are inadmissible.
PowerLawFit select_xmin(std::span<const std::uint64_t> samples,
                        AlphaEstimator estimator = AlphaEstimator::Exact);

struct FitOptions {
  std::optional<std::uint64_t> xmin_fixed;
  AlphaEstimator estimator = AlphaEstimator::Exact;
};

PowerLawFit fit_powerlaw(std::span<const std::uint64_t> samples, const FitOptions& options = {});

/// Fraction of replicate KS distances that are >= the observed one.
double bootstrap_pvalue(std::span<const double> replicate_ks, double observed_ks);

struct GofResult {
  double p_value = 0.0;
  std::size_t replicates = 0;  ///< replicates that produced a fit
  std::size_t failed = 0;      ///< replicates whose refit was impossible
};

/// Semi-parametric bootstrap goodness of fit. Replicate r draws n values
/// (from the fitted law with probability n_tail/n, otherwise uniformly from
/// the samples below xmin), refits with `options` and records its KS
/// distance. Replicate seeds derive from (seed, r).
GofResult gof_test(std::span<const std::uint64_t> samples, const PowerLawFit& fit, std::size_t replicates,
                   std::uint64_t seed, const FitOptions& options = {});
double gof_pvalue(std::span<const std::uint64_t> samples, const PowerLawFit& fit, std::size_t replicates,
                  std::uint64_t seed, const FitOptions& options = {});

/// Inverse-CDF sampler for P(x) = x^-alpha / zeta(alpha, xmin), x >= xmin.
class PowerLawSampler {
 public:
  PowerLawSampler(double alpha, std::uint64_t xmin);
  std::uint64_t operator()(Rng& rng) const;

 private:
  std::uint64_t search_beyond_table(double survival) const;

  double alpha_;
  std::uint64_t xmin_;
  double norm_;
  std::vector<double> survival_;  ///< P(X > xmin + i)
};

std::vector<std::uint64_t> sample_powerlaw(double alpha, std::uint64_t xmin, std::size_t n,
                                           std::uint64_t seed);

}  // namespace colnet
