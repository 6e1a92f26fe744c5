#include "fraclab/closedform.hpp"

#include <cmath>

#include "fraclab/errors.hpp"
#include "fraclab/specfun.hpp"

namespace fraclab {

namespace {

double isotropic_scale(const SymMatrix& A) {
  if (!A.is_scalar_multiple_of_identity(1e-14 * std::fabs(A(0, 0)))) {
    throw CapabilityError("torsion constant for anisotropic A is not validated");
  }
  const double lambda = A(0, 0);
  if (!(lambda > 0.0)) throw DomainError("torsion: A must be positive definite");
  return lambda;
}

void check_order(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("torsion: s must be positive");
}

}  // namespace

double torsion_constant(const SymMatrix& A, double s) {
  check_order(s);
  const double lambda = isotropic_scale(A);
  return specfun::ball_torsion_constant(A.dim, s).value * std::pow(lambda, -s);
}

double torsion_constant_ds(const SymMatrix& A, double s) {
  check_order(s);
  const double lambda = isotropic_scale(A);
  const auto d = specfun::ball_torsion_constant(A.dim, s);
  return (d.s_derivative - d.value * std::log(lambda)) * std::pow(lambda, -s);
}

double torsion_value(const SymMatrix& A, double s, const Point& x) {
  const double c = torsion_constant(A, s);
  const double q = 1.0 - A.quadratic_form(x);
  return q > 0.0 ? c * std::pow(q, s) : 0.0;
}

TorsionDerivative torsion_s_derivative(const SymMatrix& A, double s, const Point& x) {
  const double c = torsion_constant(A, s);
  const double dc = torsion_constant_ds(A, s);
  const double q = 1.0 - A.quadratic_form(x);
  if (!(q > 0.0)) return {0.0, true};
  const double qs = std::pow(q, s);
  return {dc * qs + c * qs * std::log(q), false};
}

}  // namespace fraclab
