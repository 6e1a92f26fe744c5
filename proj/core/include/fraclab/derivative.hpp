#pragma once

#include <vector>

#include "fraclab/fields.hpp"
#include "fraclab/geometry.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

/// Which sign the right-hand side L_s f carries in front of P_s^c f.
enum class SignConvention {
  kMinusComplement,  ///< L_s f = -L_Delta E f - P_s^c f
  kPlusComplement    ///< L_s f = -L_Delta E f + P_s^c f
};

/// Values on an interior point cloud.
struct GridField {
  std::vector<Point> points;
  std::vector<double> deltas;
  std::vector<double> values;
  std::vector<double> errors;
  std::vector<bool> converged;

  std::size_t size() const { return values.size(); }
  double sup() const;
  /// Root mean square over the points.
  double l2() const;
  /// (mean |v delta^a|^p)^{1/p}.
  double weighted_lp(double a, double p) const;
  bool all_converged() const;
};

/// Points on the ray from the centre along e_1 with delta geometric from R down to
/// min_delta * R (count >= 2; the first point is the centre).
std::vector<Point> radial_grid(const Domain& ball, int count, double min_delta = 1e-3);

/// L_s f(x) for x in the ball.
IntegralResult ell_s(const CompactField& f, const Domain& ball, const Order& s, const Point& x,
                     const QuadConfig& cfg, SignConvention sign = SignConvention::kMinusComplement);

/// G_s f on the grid.
GridField green_grid(const CompactField& f, const Domain& ball, const Order& s,
                     const std::vector<Point>& grid, const QuadConfig& cfg);

/// v_s = G_s(L_s f) on the grid. Radial data on a centred ball tabulates L_s f once on
/// panels graded toward the boundary.
GridField solve_vs(const CompactField& f, const Domain& ball, const Order& s,
                   const std::vector<Point>& grid, const QuadConfig& cfg,
                   SignConvention sign = SignConvention::kMinusComplement);

/// Difference quotient of G_s f in s: central when s + h <= 1, one-sided from below otherwise.
GridField finite_diff_ds(const CompactField& f, const Domain& ball, const Order& s, double h,
                         const std::vector<Point>& grid, const QuadConfig& cfg);

struct ExpansionReport {
  double s = 0.0;
  double residual = 0.0;
  double scaled() const { return residual / (1.0 - s); }
};

/// sup over the grid of |G_s f - G_1 f + (1-s) v_1|. Pass v1 to reuse a previous solve.
ExpansionReport expansion_residual(const CompactField& f, const Domain& ball, const Order& s,
                                   const std::vector<Point>& grid, const QuadConfig& cfg,
                                   const GridField* v1 = nullptr);

/// The same quantity for f == c from the torsion closed form.
ExpansionReport expansion_residual_closed_form(const Domain& ball, double s,
                                               const std::vector<Point>& grid, double c = 1.0);

struct TwoSidedRow {
  double h = 0.0;
  Point x;
  double below = 0.0;  ///< (u_1 - u_{1-h}) / h
  double above = 0.0;  ///< (u_{1+h} - u_1) / h
  double gap() const { return below > above ? below - above : above - below; }
};

struct TwoSidedReport {
  std::vector<TwoSidedRow> rows;
  /// Least-squares slope of log(gap) against log(h) at the first point.
  double order = 0.0;
};

/// One-sided s-difference quotients of the closed-form torsion across s = 1.
TwoSidedReport two_sided_check(const SymMatrix& A, const std::vector<double>& h_list,
                               const std::vector<Point>& points);

}  // namespace fraclab
