#pragma once

#include <cstdint>
#include <functional>

#include "fraclab/fields.hpp"
#include "fraclab/geometry.hpp"
#include "fraclab/integrate.hpp"

namespace fraclab {

/// Budgets and tolerances for every numerical integral in the library.
struct QuadConfig {
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  int max_subdiv = 2000;
  long mc_samples = 200000;
  std::uint64_t seed = 0x5eed5eedULL;
  /// Radius of the Taylor-stabilized inner ball of PV integrals, as a fraction of the
  /// distance from the evaluation point to the nearest non-smooth set.
  double pv_inner_radius = 0.25;

  /// Throws DomainError when a field is out of range.
  void validate() const;
  quad::Tol tol() const { return {abs_tol, rel_tol}; }
};

/// Integrand of a polar integral: value at y, with rho = |y - x| supplied separately
/// so singular kernels can be formed without cancellation.
using PolarIntegrand = std::function<double(const Point& y, double rho)>;

/// Integral of g over the domain, in polar coordinates centred at x (x anywhere in R^N).
IntegralResult integrate_polar_interior(const Domain& domain, const Point& x,
                                        const PolarIntegrand& g, const quad::Tol& tol,
                                        int max_subdiv = 2000);

/// Integral of g over the complement of the domain, in polar coordinates centred at x.
/// g must decay faster than |y|^{-N} at infinity.
IntegralResult integrate_polar_exterior(const Domain& domain, const Point& x,
                                        const PolarIntegrand& g, const quad::Tol& tol,
                                        int max_subdiv = 2000);

/// Integral of f over the domain. Deterministic radial-angular product rule in the
/// reference coordinates; tolerates boundary singularities of type delta^a, a > -1.
IntegralResult integrate_interior(const Domain& domain, const ScalarField& f,
                                  const QuadConfig& cfg);

/// Integral of f over R^N minus the domain: graded shell next to the boundary plus an
/// inverted-radius tail. Throws DivergenceError when a tail probe shows no decay.
IntegralResult integrate_exterior(const Domain& domain, const ScalarField& f,
                                  const QuadConfig& cfg);

/// Monte Carlo counterpart of integrate_interior (uniform sampling; seeded streams).
IntegralResult integrate_interior_mc(const Domain& domain, const ScalarField& f,
                                     const QuadConfig& cfg);

/// Monte Carlo counterpart of integrate_exterior. Radial importance density is a mixture
/// of (r-1)^{-1/2} on the first shell and a heavy Pareto tail ~ r^{-5/4}.
IntegralResult integrate_exterior_mc(const Domain& domain, const ScalarField& f,
                                     const QuadConfig& cfg);

/// PV integral  int (2u(x) - u(x+z) - u(x-z)) / (2|z|^{N+2s}) dz  without c_{N,s}.
/// The ball |z| < pv_inner_radius * dist(x, non-smooth set) uses a Taylor-stabilized rule
/// in t = rho^{2-2s}; the remainder is a ray integral split at support crossings.
IntegralResult integrate_pv_second_difference(const ScalarField& u, const Point& x, double s,
                                              const QuadConfig& cfg);

/// One-sided epsilon-cutoff form  int_{|z| > eps} (u(x) - u(x+z)) / |z|^{N+2s} dz.
/// Slowly convergent as eps -> 0; kept as an independent check of the PV rule.
IntegralResult integrate_pv_cutoff(const ScalarField& u, const Point& x, double s, double eps,
                                   const QuadConfig& cfg);

namespace quad {
/// Seed for the RNG stream of subtask `index` (splitmix64 of the pair).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);
}  // namespace quad

}  // namespace fraclab
