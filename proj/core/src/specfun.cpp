#include "fraclab/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fraclab/errors.hpp"

namespace fraclab::specfun {
namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

void require_dim(int dim, const char* who) {
  if (dim < 2) {
    throw DomainError(std::string(who) + ": dimension must be >= 2, got " + std::to_string(dim));
  }
}

void require_open_unit(double s, const char* who) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError(std::string(who) + ": order must lie in (0,1), got " + std::to_string(s));
  }
}

// Lanczos series A_g(z) for z >= 0.5 (argument already shifted by -1).
double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) {
    // Reflection keeps full accuracy near the pole at 0.
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  if (x > 171.6) return std::numeric_limits<double>::infinity();
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double digamma(double x) {
  require_positive(x, "digamma");
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number tail: sum B_{2k} / (2k x^{2k}).
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return result + std::log(x) - 0.5 * inv - tail;
}

double beta(double a, double b) {
  require_positive(a, "beta");
  require_positive(b, "beta");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double incomplete_beta_regularized(double x, double a, double b) {
  require_positive(a, "incomplete_beta");
  require_positive(b, "incomplete_beta");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) +
                                b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(x, a, b) / a;
  return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

double sphere_area(int dim) {
  if (dim < 1) throw DomainError("sphere_area: dimension must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * dim) / gamma(0.5 * dim);
}

double ball_volume(int dim) {
  if (dim < 1) throw DomainError("ball_volume: dimension must be >= 1");
  return std::pow(kPi, 0.5 * dim) / gamma(0.5 * dim + 1.0);
}

double frac_normalization(int dim, double s) {
  require_dim(dim, "frac_normalization");
  require_open_unit(s, "frac_normalization");
  const double n2 = 0.5 * dim;
  return std::pow(4.0, s) * gamma(n2 + s) / (gamma(2.0 - s) * std::pow(kPi, n2)) * s * (1.0 - s);
}

LogConstants log_constants(int dim) {
  require_dim(dim, "log_constants");
  const double n2 = 0.5 * dim;
  return {std::pow(kPi, -n2) * gamma(n2), 2.0 * kLn2 + digamma(n2) - kEulerGamma};
}

double riesz_constant(int dim, double s) {
  require_dim(dim, "riesz_constant");
  const double n2 = 0.5 * dim;
  if (!(s > 0.0 && s < n2)) {
    throw DomainError("riesz_constant: order must lie in (0, N/2), got " + std::to_string(s));
  }
  return gamma(n2 - s) / (std::pow(4.0, s) * std::pow(kPi, n2) * gamma(s));
}

double ball_poisson_constant(int dim, double s) {
  require_dim(dim, "ball_poisson_constant");
  require_open_unit(s, "ball_poisson_constant");
  return 2.0 / (gamma(s) * gamma(1.0 - s) * sphere_area(dim));
}

double ball_poisson_constant_reflection(int dim, double s) {
  require_dim(dim, "ball_poisson_constant");
  require_open_unit(s, "ball_poisson_constant");
  return log_constants(dim).c_N * std::sin(kPi * s) / kPi;
}

TorsionConstant ball_torsion_constant(int dim, double s) {
  require_dim(dim, "ball_torsion_constant");
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("ball_torsion_constant: order must be positive, got " + std::to_string(s));
  }
  const double n2 = 0.5 * dim;
  const double value =
      std::exp(log_gamma(n2) - s * std::log(4.0) - log_gamma(n2 + s) - log_gamma(1.0 + s));
  const double dlog = -std::log(4.0) - digamma(n2 + s) - digamma(1.0 + s);
  return {value, value * dlog};
}

}  // namespace fraclab::specfun
