#pragma once

#include "fraclab/geometry.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

struct BoundReport {
  double s = 0.0;
  /// ||G_s|| on L^infty, the centre value of the torsion function.
  double norm_numeric = 0.0;
  /// exp(-int_0^s m_tau d tau).
  double bound_integral = 0.0;
  /// exp(-s (min h + rho_N) - q_{N,s} |Omega| diam^{-N}).
  double bound_new = 0.0;
  /// exp(-s (min h + rho_N)).
  double bound_old = 0.0;
  double m_s = 0.0;
  double p_s_numeric = 0.0;
  double p_s_lower = 0.0;
  double q_Ns = 0.0;
  double min_h = 0.0;

  bool chain_holds() const {
    return norm_numeric <= bound_integral && bound_integral <= bound_new && bound_new <= bound_old;
  }
};

/// Integrand of q_{N,s}: c_N (3^t Gamma(N/2) / (2^N Gamma(t) Gamma(N/2+1-t)))^{N/(N-2t)}.
double q_integrand(int dim, double t);

/// q_{N,s} = int_0^s q_integrand(N, t) dt by adaptive Gauss-Kronrod.
double q_constant(int dim, double s, const QuadConfig& cfg = {});

/// The same integral by adaptive Simpson (independent cross-check).
double q_constant_simpson(int dim, double s, double tol = 1e-12);

/// Explicit lower bound for inf P_s^c 1; s = 1 gives c_N |Omega| diam^{-N}.
double p_s_lower(int dim, double s, const Domain& domain);

/// inf over the ball of P_s^c 1 (radial grid plus golden-section refinement).
double p_s_numeric(const Domain& ball, const Order& s, const QuadConfig& cfg);

/// min over the ball of h_Omega.
double min_h_omega(const Domain& ball, const QuadConfig& cfg);

/// m_s = rho_N + inf (h_Omega + P_s^c 1).
double m_s(const Domain& ball, const Order& s, const QuadConfig& cfg);

/// All bound quantities for one order. tau_nodes sets the Gauss-Legendre rule for the
/// integral of m_tau.
BoundReport green_norm_bound(const Domain& ball, const Order& s, const QuadConfig& cfg,
                             int tau_nodes = 8);

}  // namespace fraclab
