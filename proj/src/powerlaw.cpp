#include "colnet/powerlaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "colnet/measured.hpp"

namespace colnet {

DegreeSequence degree_sequence(const Graph& g, DegreeMode mode) {
  if (mode != DegreeMode::All && !g.directed()) throw FitError(reason::kNotApplicable);
  DegreeSequence seq;
  seq.mode = mode;
  seq.counts.assign(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (mode != DegreeMode::In) ++seq.counts[e.source];
    if (mode != DegreeMode::Out) ++seq.counts[e.target];
  }
  return seq;
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::domain_error("hurwitz_zeta requires s > 1 and q > 0");
  // B_2j / (2j)!
  static constexpr std::array<double, 8> kBernoulli = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
  };
  const double start = 20.0 + (s > 20.0 ? s : 0.0);
  double sum = 0.0;
  double a = q;
  while (a < start) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;
  double power = std::pow(a, -s - 1.0);
  const double inv_a2 = 1.0 / (a * a);
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    sum += kBernoulli[j] * rising * power;
    const double k = 2.0 * static_cast<double>(j + 1);
    rising *= (s + k - 1.0) * (s + k);
    power *= inv_a2;
  }
  return sum;
}

namespace {

/// Sorted distinct values with counts plus suffix sums, shared by every
/// xmin candidate.
struct Tally {
  std::vector<std::uint64_t> values;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> tail_count;  ///< samples >= values[i]
  std::vector<double> tail_log_sum;     ///< sum of ln x over samples >= values[i]

  explicit Tally(std::span<const std::uint64_t> samples) {
    std::vector<std::uint64_t> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) throw FitError("non-positive sample");
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      values.push_back(sorted[i]);
      counts.push_back(j - i);
      i = j;
    }
    const std::size_t d = values.size();
    tail_count.assign(d + 1, 0);
    tail_log_sum.assign(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;) {
      tail_count[i] = tail_count[i + 1] + counts[i];
      tail_log_sum[i] = tail_log_sum[i + 1] + static_cast<double>(counts[i]) * std::log(static_cast<double>(values[i]));
    }
  }

  std::size_t distinct() const { return values.size(); }

  /// Index of the first value >= x.
  std::size_t first_at_least(std::uint64_t x) const {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
  }
};

double golden_section_max(auto&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

double estimate_alpha(std::size_t n_tail, double log_sum, std::uint64_t xmin, AlphaEstimator estimator) {
  const auto n = static_cast<double>(n_tail);
  if (estimator == AlphaEstimator::Approximate) {
    const double denom = log_sum - n * std::log(static_cast<double>(xmin) - 0.5);
    return 1.0 + n / denom;
  }
  const auto q = static_cast<double>(xmin);
  auto loglik = [&](double a) { return -n * std::log(hurwitz_zeta(a, q)) - a * log_sum; };
  return golden_section_max(loglik, 1.0 + 1e-9, kAlphaUpper, kAlphaTolerance);
}

double tail_ks(const Tally& t, std::size_t first, double alpha) {
  const auto n_tail = static_cast<double>(t.tail_count[first]);
  const double z0 = hurwitz_zeta(alpha, static_cast<double>(t.values[first]));
  double below = 0.0;
  double ks = 0.0;
  double z = z0;  // zeta(alpha, v) for the current value v
  for (std::size_t j = first; j < t.distinct(); ++j) {
    const std::uint64_t v = t.values[j];
    if (j > first) {
      const std::uint64_t prev = t.values[j - 1];
      if (v - prev <= 8) {
        for (std::uint64_t x = prev; x < v; ++x) z -= std::pow(static_cast<double>(x), -alpha);
      } else {
        z = hurwitz_zeta(alpha, static_cast<double>(v));
      }
      // At x = v - 1 the empirical survival still counts v.
      ks = std::max(ks, std::abs((n_tail - below) / n_tail - z / z0));
    }
    below += static_cast<double>(t.counts[j]);
    const double model_after = (z - std::pow(static_cast<double>(v), -alpha)) / z0;
    ks = std::max(ks, std::abs((n_tail - below) / n_tail - model_after));
  }
  return ks;
}

void check_tail(const Tally& t, std::size_t first) {
  if (first >= t.distinct() || t.tail_count[first] < 2) throw FitError("insufficient tail");
  if (first + 1 == t.distinct()) throw FitError("zero variance tail");
}

PowerLawFit fit_candidate(const Tally& t, std::size_t first, AlphaEstimator estimator) {
  check_tail(t, first);
  PowerLawFit fit;
  fit.xmin = t.values[first];
  fit.n_tail = t.tail_count[first];
  fit.n = t.tail_count[0];
  fit.alpha = estimate_alpha(fit.n_tail, t.tail_log_sum[first], fit.xmin, estimator);
  if (!std::isfinite(fit.alpha) || fit.alpha <= 1.0) throw FitError("alpha out of range");
  fit.ks_distance = tail_ks(t, first, fit.alpha);
  return fit;
}

void check_xmin(std::uint64_t xmin) {
  if (xmin < 1) throw FitError("xmin must be positive");
}

}  // namespace

double mle_alpha(std::span<const std::uint64_t> samples, std::uint64_t xmin, AlphaEstimator estimator) {
  check_xmin(xmin);
  const Tally t(samples);
  const std::size_t first = t.first_at_least(xmin);
  check_tail(t, first);
  return estimate_alpha(t.tail_count[first], t.tail_log_sum[first], xmin, estimator);
}

double ks_distance(std::span<const std::uint64_t> samples, std::uint64_t xmin, double alpha) {
  check_xmin(xmin);
  const Tally t(samples);
  const std::size_t first = t.first_at_least(xmin);
  if (first >= t.distinct()) throw FitError("insufficient tail");
  // The model is normalized at xmin, which need not be a sample value.
  if (t.values[first] == xmin) return tail_ks(t, first, alpha);
  Tally shifted = t;
  shifted.values.insert(shifted.values.begin() + static_cast<std::ptrdiff_t>(first), xmin);
  shifted.counts.insert(shifted.counts.begin() + static_cast<std::ptrdiff_t>(first), 0);
  shifted.tail_count.insert(shifted.tail_count.begin() + static_cast<std::ptrdiff_t>(first),
                            t.tail_count[first]);
  shifted.tail_log_sum.insert(shifted.tail_log_sum.begin() + static_cast<std::ptrdiff_t>(first),
                              t.tail_log_sum[first]);
  return tail_ks(shifted, first, alpha);
}

PowerLawFit fit_at_xmin(std::span<const std::uint64_t> samples, std::uint64_t xmin, AlphaEstimator estimator) {
  check_xmin(xmin);
  const Tally t(samples);
  const std::size_t first = t.first_at_least(xmin);
  check_tail(t, first);
  PowerLawFit fit;
  fit.xmin = xmin;
  fit.n_tail = t.tail_count[first];
  fit.n = t.tail_count[0];
  fit.alpha = estimate_alpha(fit.n_tail, t.tail_log_sum[first], xmin, estimator);
  if (!std::isfinite(fit.alpha) || fit.alpha <= 1.0) throw FitError("alpha out of range");
  fit.ks_distance = ks_distance(samples, xmin, fit.alpha);
  return fit;
}

PowerLawFit select_xmin(std::span<const std::uint64_t> samples, AlphaEstimator estimator) {
  const Tally t(samples);
  if (t.distinct() < 2) throw FitError("fewer than 2 distinct values");
  std::optional<PowerLawFit> best;
  std::size_t admissible = 0;
  for (std::size_t i = 0; i + 1 < t.distinct(); ++i) {
    if (t.tail_count[i] < 2) break;
    PowerLawFit candidate;
    try {
      candidate = fit_candidate(t, i, estimator);
    } catch (const FitError&) {
      continue;
    }
    ++admissible;
    if (!best || candidate.ks_distance < best->ks_distance) best = candidate;
  }
  if (!best) throw FitError("no admissible xmin");
  best->degenerate = admissible == 1;
  return *best;
}

PowerLawFit fit_powerlaw(std::span<const std::uint64_t> samples, const FitOptions& options) {
  if (options.xmin_fixed) return fit_at_xmin(samples, *options.xmin_fixed, options.estimator);
  return select_xmin(samples, options.estimator);
}

double bootstrap_pvalue(std::span<const double> replicate_ks, double observed_ks) {
  if (replicate_ks.empty()) throw FitError("bootstrap produced no fits");
  const auto worse = std::count_if(replicate_ks.begin(), replicate_ks.end(),
                                   [&](double ks) { return ks >= observed_ks; });
  return static_cast<double>(worse) / static_cast<double>(replicate_ks.size());
}

GofResult gof_test(std::span<const std::uint64_t> samples, const PowerLawFit& fit, std::size_t replicates,
                   std::uint64_t seed, const FitOptions& options) {
  if (replicates == 0) throw std::invalid_argument("bootstrap count must be positive");
  if (fit.degenerate || fit.n_tail < 2 || !std::isfinite(fit.alpha) || fit.alpha <= 1.0) {
    throw FitError("degenerate fit");
  }
  std::vector<std::uint64_t> body;
  for (std::uint64_t x : samples) {
    if (x < fit.xmin) body.push_back(x);
  }
  std::sort(body.begin(), body.end());
  const std::size_t n = samples.size();
  const double tail_share = static_cast<double>(n - body.size()) / static_cast<double>(n);
  const PowerLawSampler sampler(fit.alpha, fit.xmin);

  GofResult result;
  std::vector<double> ks;
  ks.reserve(replicates);
  std::vector<std::uint64_t> draw(n);
  for (std::size_t r = 0; r < replicates; ++r) {
    Rng rng(derive_seed(seed, r));
    for (auto& x : draw) {
      if (body.empty() || uniform01(rng) < tail_share) {
        x = sampler(rng);
      } else {
        x = body[uniform_index(rng, body.size())];
      }
    }
    try {
      ks.push_back(fit_powerlaw(draw, options).ks_distance);
    } catch (const FitError&) {
      ++result.failed;
    }
  }
  result.replicates = ks.size();
  result.p_value = bootstrap_pvalue(ks, fit.ks_distance);
  return result;
}

double gof_pvalue(std::span<const std::uint64_t> samples, const PowerLawFit& fit, std::size_t replicates,
                  std::uint64_t seed, const FitOptions& options) {
  return gof_test(samples, fit, replicates, seed, options).p_value;
}

namespace {
constexpr std::size_t kSamplerTable = 1024;
constexpr std::uint64_t kSamplerCap = std::uint64_t{1} << 62;
}  // namespace

PowerLawSampler::PowerLawSampler(double alpha, std::uint64_t xmin) : alpha_(alpha), xmin_(xmin) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must exceed 1");
  if (xmin < 1) throw std::invalid_argument("xmin must be positive");
  norm_ = hurwitz_zeta(alpha, static_cast<double>(xmin));
  survival_.resize(kSamplerTable);
  for (std::size_t i = 0; i < kSamplerTable; ++i) {
    survival_[i] = hurwitz_zeta(alpha, static_cast<double>(xmin + i + 1)) / norm_;
  }
}

std::uint64_t PowerLawSampler::operator()(Rng& rng) const {
  // Smallest x with P(X > x) <= 1 - u.
  const double r = 1.0 - uniform01(rng);
  const auto it = std::partition_point(survival_.begin(), survival_.end(), [r](double s) { return s > r; });
  if (it != survival_.end()) return xmin_ + static_cast<std::uint64_t>(it - survival_.begin());
  return search_beyond_table(r);
}

std::uint64_t PowerLawSampler::search_beyond_table(double r) const {
  auto survival = [&](std::uint64_t x) { return hurwitz_zeta(alpha_, static_cast<double>(x) + 1.0) / norm_; };
  std::uint64_t lo = xmin_ + kSamplerTable - 1;  // survival(lo) > r
  std::uint64_t hi = lo;
  do {
    lo = hi;
    if (hi >= kSamplerCap / 2) return kSamplerCap;
    hi *= 2;
  } while (survival(hi) > r);
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (survival(mid) > r ? lo : hi) = mid;
  }
  return hi;
}

std::vector<std::uint64_t> sample_powerlaw(double alpha, std::uint64_t xmin, std::size_t n, std::uint64_t seed) {
  const PowerLawSampler sampler(alpha, xmin);
  Rng rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) x = sampler(rng);
  return out;
}

}  // namespace colnet
