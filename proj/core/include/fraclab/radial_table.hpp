#pragma once

#include <functional>
#include <vector>

namespace fraclab {

/// Piecewise Chebyshev interpolant of a radial profile g(r), r >= 0, that may be singular
/// at r = R from either side. Panels are graded geometrically toward R (ratio 2, `levels`
/// panels per side) and, beyond 2R, in the inverted variable 2R/r. Points closer to R than
/// the finest panel are clamped onto it.
class RadialTable {
 public:
  /// With inner_only, only r < R is tabulated and larger r are clamped onto it.
  RadialTable(const std::function<double(double)>& g, double radius, int levels = 48,
              int order = 12, bool inner_only = false);

  double operator()(double r) const;
  long evaluations() const { return evaluations_; }

 private:
  struct Panel {
    double a;
    double b;
    std::vector<double> values;
  };
  static double interpolate(const Panel& p, double t);
  static const Panel* locate(const std::vector<Panel>& panels, double t);

  double radius_;
  int order_;
  std::vector<Panel> inner_;  // in r, increasing
  std::vector<Panel> outer_;  // in r, increasing, up to 2R
  std::vector<Panel> tail_;   // in v = 2R / r, increasing
  bool inner_only_ = false;
  long evaluations_ = 0;
};

}  // namespace fraclab
