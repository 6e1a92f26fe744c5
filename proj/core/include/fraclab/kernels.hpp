#pragma once

#include "fraclab/fields.hpp"
#include "fraclab/geometry.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

/// kappa_{N,s} |z|^{2s-N}, 0 < s < N/2. Throws SingularityError at z = 0.
double fundamental_solution(int dim, double s, const Point& z);

/// Green function of (-Delta)^s on the ball |x| < R centred at the origin, 0 < s <= 1.
/// Zero when x or y is outside. Throws SingularityError when x == y.
double green_ball(const Order& s, const Point& x, const Point& y, double radius);

/// Green function of a ball domain (any centre).
double green_ball(const Domain& ball, const Order& s, const Point& x, const Point& y);

/// G_s f(x) = int_Omega G_s(x,y) f(y) dy on a ball. Radial data on a centred ball uses a
/// one-dimensional reduction; otherwise a polar patch around x.
IntegralResult green_apply(const Domain& ball, const CompactField& f, const Order& s,
                           const Point& x, const QuadConfig& cfg);

/// Fractional Poisson kernel of the ball |.| < R, |z| < R < |y|, 0 < s < 1.
double poisson_ball(const Order& s, const Point& z, const Point& y, double radius);

/// Classical Poisson kernel (R^2 - |z|^2) / (R |S^{N-1}| |z-y|^N), |y| = R.
double poisson_ball_classical(const Point& z, const Point& y, double radius);

/// s-harmonic extension of exterior data g (s < 1), harmonic extension of boundary data
/// g (s = 1). Outside the ball returns g(x).
IntegralResult poisson_extend(const Domain& ball, const ScalarField& g, const Order& s,
                              const Point& x, const QuadConfig& cfg);

/// c_{N,s} int_B G_s(z,w) |w - y|^{-N-2s} dw, the defining integral of P_s(z,y).
IntegralResult poisson_from_green(const Domain& ball, const Order& s, const Point& z,
                                  const Point& y, const QuadConfig& cfg);

/// Complementary Poisson kernel P_s^c(x, z), x, z inside the ball.
IntegralResult comp_poisson_kernel(const Domain& ball, const Order& s, const Point& x,
                                   const Point& z, const QuadConfig& cfg);

/// P_s^c f(x) = int_Omega P_s^c(x,z) f(z) dz, x inside the ball.
IntegralResult comp_poisson_apply(const Domain& ball, const CompactField& f, const Order& s,
                                  const Point& x, const QuadConfig& cfg);

/// Same, forcing the generic (non-radial) Fubini path. Slow; used as a cross-check.
IntegralResult comp_poisson_apply_generic(const Domain& ball, const CompactField& f,
                                          const Order& s, const Point& x,
                                          const QuadConfig& cfg);

}  // namespace fraclab
