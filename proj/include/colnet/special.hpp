#pragma once

#include <span>

namespace colnet::special {

/// P(a, x): series for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

/// I_x(a, b) by continued fraction, using the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
double regularized_beta(double a, double b, double x);

double normal_cdf(double x, double mean = 0.0, double sd = 1.0);
double chi2_cdf(double dof, double x);
double chi2_sf(double dof, double x);
double f_cdf(double d1, double d2, double x);
double f_sf(double d1, double d2, double x);
double t_cdf(double dof, double x);

/// Limiting distribution of sqrt(n) * D_n.
double kolmogorov_cdf(double x);
double kolmogorov_sf(double x);

enum class CdfKind { Normal, ChiSquared, F, StudentT, Kolmogorov };

/// Dispatcher. Parameters: Normal {mean, sd}, ChiSquared {dof},
/// F {d1, d2}, StudentT {dof}, Kolmogorov {}.
double special_cdf(CdfKind kind, std::span<const double> params, double x);

}  // namespace colnet::special
