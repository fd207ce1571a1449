#include "colnet/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace colnet::special {
namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

double gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  require(a > 0.0 && x >= 0.0, "regularized_gamma_p: a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return x < a + 1.0 ? gamma_series(a, x) : 1.0 - gamma_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  require(a > 0.0 && x >= 0.0, "regularized_gamma_q: a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return x < a + 1.0 ? 1.0 - gamma_series(a, x) : gamma_continued_fraction(a, x);
}

double regularized_beta(double a, double b, double x) {
  require(a > 0.0 && b > 0.0 && x >= 0.0 && x <= 1.0, "regularized_beta: a, b > 0, 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double normal_cdf(double x, double mean, double sd) {
  require(sd > 0.0, "normal_cdf: sd > 0");
  return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

double chi2_cdf(double dof, double x) {
  require(dof > 0.0, "chi2_cdf: dof > 0");
  return x <= 0.0 ? 0.0 : regularized_gamma_p(dof / 2.0, x / 2.0);
}

double chi2_sf(double dof, double x) {
  require(dof > 0.0, "chi2_sf: dof > 0");
  return x <= 0.0 ? 1.0 : regularized_gamma_q(dof / 2.0, x / 2.0);
}

double f_cdf(double d1, double d2, double x) {
  require(d1 > 0.0 && d2 > 0.0, "f_cdf: d1, d2 > 0");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return regularized_beta(d1 / 2.0, d2 / 2.0, d1 * x / (d1 * x + d2));
}

double f_sf(double d1, double d2, double x) {
  require(d1 > 0.0 && d2 > 0.0, "f_sf: d1, d2 > 0");
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return regularized_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * x));
}

double t_cdf(double dof, double x) {
  require(dof > 0.0, "t_cdf: dof > 0");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * regularized_beta(dof / 2.0, 0.5, dof / (dof + x * x));
  return x > 0.0 ? 1.0 - tail : tail;
}

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.0) {
    // Jacobi form converges quickly for small x.
    const double k = -std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int j = 1; j < 100; j += 2) {
      const double term = std::exp(k * j * j);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return 1.0 - std::sqrt(2.0 * std::numbers::pi) / x * sum;
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j < 100; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_cdf(double x) { return 1.0 - kolmogorov_sf(x); }

double special_cdf(CdfKind kind, std::span<const double> params, double x) {
  auto param = [&](std::size_t i) {
    require(i < params.size(), "special_cdf: missing parameter");
    return params[i];
  };
  switch (kind) {
    case CdfKind::Normal: return normal_cdf(x, param(0), param(1));
    case CdfKind::ChiSquared: return chi2_cdf(param(0), x);
    case CdfKind::F: return f_cdf(param(0), param(1), x);
    case CdfKind::StudentT: return t_cdf(param(0), x);
    case CdfKind::Kolmogorov: return kolmogorov_cdf(x);
  }
  throw std::domain_error("special_cdf: unknown kind");
}

}  // namespace colnet::special
