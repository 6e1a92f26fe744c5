#pragma once

#include "fraclab/fields.hpp"
#include "fraclab/geometry.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

/// (-Delta)^s u(x). For s < 1 the normalized PV integral; for s = 1 a fourth-order central
/// difference Laplacian with step 1e-4 * dist(x, non-smooth set).
IntegralResult frac_laplacian(const ScalarField& u, const Point& x, const Order& s,
                              const QuadConfig& cfg);

/// Logarithmic Laplacian L_Delta u(x) from the whole-space representation.
IntegralResult log_laplacian(const ScalarField& u, const Point& x, const QuadConfig& cfg);

/// L_Delta (E_Omega f)(x) from the compact-support representation with h_Omega.
IntegralResult log_laplacian_compact(const CompactField& f, const Domain& domain, const Point& x,
                                     const QuadConfig& cfg);

/// h_Omega(x) for x inside a convex domain, as -c_N int_S ln(exit distance) d omega.
/// Throws DivergenceError for x on or outside the boundary.
IntegralResult h_omega(const Domain& domain, const Point& x, const QuadConfig& cfg);

/// h_Omega(x) by Monte Carlo over the two set differences (indicator-masked samples).
IntegralResult h_omega_mc(const Domain& domain, const Point& x, const QuadConfig& cfg);

/// N_s v(z) = c_{N,s} int_Omega (v(z) - v(y)) / |z-y|^{N+2s} dy for z outside the closure.
IntegralResult nonlocal_normal_derivative(const ScalarField& v, const Domain& domain,
                                          const Point& z, const Order& s,
                                          const QuadConfig& cfg);

/// w_s(x) = -c_{N,s} 1_{Omega^c}(x) int_Omega u_s(y) |x-y|^{-N-2s} dy with u_s = G_s f.
IntegralResult restriction_ws(const CompactField& f, const Domain& domain, const Order& s,
                              const Point& x, const QuadConfig& cfg);

/// Same with u_s supplied directly (e.g. a closed form).
IntegralResult restriction_ws_from(const ScalarField& us, const Domain& domain, const Order& s,
                                   const Point& x, const QuadConfig& cfg);

struct InterchangeOptions {
  /// Add the complementary Poisson term for s = 1.
  bool include_boundary_term = true;
  /// Stencil step for the s = 1 Laplacian of L_Delta u, as a fraction of delta(x).
  double stencil_step = 0.05;
  /// Grading depth of the radial tables used for s < 1 (finest panel R 2^{-levels-1}).
  int table_levels = 24;
};

struct InterchangeResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  double residual() const { return lhs - rhs; }
};

/// Both sides of the commutation identity for (-Delta)^s and L_Delta at x in Omega, for u
/// vanishing outside Omega:
///   s = 1: -Delta(L_Delta u) = L_Delta(-Delta u) + P_1^c(-Delta u)
///   s < 1: (-Delta)^s(L_Delta u) = L_Delta((-Delta)^s u)
InterchangeResult interchange_residual(const ScalarField& u, const Domain& domain, const Point& x,
                                       const Order& s, const QuadConfig& cfg,
                                       const InterchangeOptions& opt = {});

/// Several points sharing one set of tabulated fields.
std::vector<InterchangeResult> interchange_residuals(const ScalarField& u, const Domain& domain,
                                                    const std::vector<Point>& xs,
                                                    const Order& s, const QuadConfig& cfg,
                                                    const InterchangeOptions& opt = {});

/// Fourth-order central-difference Laplacian of f at x with step h.
double fd_laplacian(const std::function<double(const Point&)>& f, const Point& x, double h);

}  // namespace fraclab
