#pragma once

#include "fraclab/geometry.hpp"

namespace fraclab {

/// c_{s,A} of the ellipsoid torsion c_{s,A}(1 - Ax.x)^s_+, any s > 0. Validated only for
/// A = lambda I (balls); anisotropic A throws CapabilityError.
double torsion_constant(const SymMatrix& A, double s);

/// d/ds c_{s,A}.
double torsion_constant_ds(const SymMatrix& A, double s);

/// c_{s,A} (1 - Ax.x)^s_+ with the ellipsoid centred at the origin.
double torsion_value(const SymMatrix& A, double s, const Point& x);

struct TorsionDerivative {
  double value = 0.0;
  /// True when x lies on or outside the boundary (value set to the limit 0).
  bool boundary = false;
};

/// d/ds of torsion_value: c' q^s + c q^s ln q with q = 1 - Ax.x.
TorsionDerivative torsion_s_derivative(const SymMatrix& A, double s, const Point& x);

}  // namespace fraclab
