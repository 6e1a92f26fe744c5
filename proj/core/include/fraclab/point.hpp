#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include "fraclab/errors.hpp"

namespace fraclab {

/// Largest spatial dimension supported by geometric code paths.
inline constexpr int kMaxDim = 3;

/// A point (or vector) of R^N with N <= kMaxDim, stored inline.
class Point {
 public:
  Point() = default;

  explicit Point(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) {
      throw CapabilityError("Point: dimension " + std::to_string(dim) + " not supported");
    }
  }

  Point(std::initializer_list<double> coords) : Point(static_cast<int>(coords.size())) {
    int i = 0;
    for (double c : coords) v_[i++] = c;
  }

  static Point zero(int dim) { return Point(dim); }

  static Point unit(int dim, int axis) {
    Point p(dim);
    p[axis] = 1.0;
    return p;
  }

  int dim() const { return dim_; }
  double& operator[](int i) { return v_[i]; }
  double operator[](int i) const { return v_[i]; }

  double dot(const Point& o) const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += v_[i] * o.v_[i];
    return s;
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  Point& operator+=(const Point& o) {
    for (int i = 0; i < dim_; ++i) v_[i] += o.v_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    for (int i = 0; i < dim_; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Point& operator*=(double a) {
    for (int i = 0; i < dim_; ++i) v_[i] *= a;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(double a, Point p) { return p *= a; }
  friend Point operator*(Point p, double a) { return p *= a; }
  friend Point operator-(Point p) { return p *= -1.0; }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i) {
      if (a.v_[i] != b.v_[i]) return false;
    }
    return true;
  }

  const double* data() const { return v_.data(); }

 private:
  std::array<double, kMaxDim> v_{};
  int dim_ = 0;
};

inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

}  // namespace fraclab
