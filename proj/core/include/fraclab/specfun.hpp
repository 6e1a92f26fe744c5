#pragma once

#include <utility>

namespace fraclab::specfun {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

/// Gamma function for x > 0 (Lanczos, g = 7, 9 terms). Throws DomainError otherwise.
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma psi = Gamma'/Gamma for x > 0 (upward recurrence + asymptotic series).
double digamma(double x);

/// Regularized lower incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double incomplete_beta_regularized(double x, double a, double b);

/// Complete beta B(a, b).
double beta(double a, double b);

/// Surface area |S^{N-1}| of the unit sphere in R^N.
double sphere_area(int dim);

/// Volume |B_1| of the unit ball in R^N.
double ball_volume(int dim);

/// Normalization c_{N,s} of the fractional Laplacian, 0 < s < 1.
double frac_normalization(int dim, double s);

struct LogConstants {
  double c_N;    ///< pi^{-N/2} Gamma(N/2) = 2 / |S^{N-1}|
  double rho_N;  ///< 2 ln 2 + psi(N/2) - gamma
};

/// Constants of the logarithmic Laplacian.
LogConstants log_constants(int dim);

/// Coefficient kappa_{N,s} of the Riesz fundamental solution kappa |z|^{2s-N}; 0 < s < N/2.
double riesz_constant(int dim, double s);

/// tau_{N,s} = 2 / (Gamma(s) Gamma(1-s) |S^{N-1}|), coefficient of the ball Poisson kernel.
double ball_poisson_constant(int dim, double s);

/// Same constant through the reflection formula c_N sin(pi s) / pi.
double ball_poisson_constant_reflection(int dim, double s);

struct TorsionConstant {
  double value;         ///< d_{N,s}
  double s_derivative;  ///< d/ds d_{N,s}
};

/// Center value d_{N,s} = Gamma(N/2) / (4^s Gamma(N/2+s) Gamma(1+s)) of the torsion
/// function of the unit ball, and its analytic s-derivative. Valid for 0 < s < 2.
TorsionConstant ball_torsion_constant(int dim, double s);

}  // namespace fraclab::specfun
