#pragma once

#include <vector>

namespace fraclab::quad {

/// Nodes and weights of an interpolatory rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n; cached, thread-safe).
const Rule& gauss_legendre(int n);

}  // namespace fraclab::quad
