#pragma once

#include <iosfwd>
#include <string>

#include "fraclab/quadrature.hpp"
#include "fraclab_cli/report.hpp"

namespace fraclab::cli {

struct Options {
  QuadConfig cfg;
  int dim = 2;
  double order = 0.5;
  std::string orders;
  std::string domain = "ball:1";
  std::string op;
  std::string field = "one";
  double field_order = 0.0;  // 0: same as order
  std::string points;
  std::string which = "green";
  std::string x;
  std::string z;
  std::string at;
  std::string compare;
  std::string variant = "minus";
  double fd = 0.0;
  int grid = 20;
  double min_delta = 1e-3;
  int tau_nodes = 8;
};

Report run_constants(const Options& o);
Report run_eval(const Options& o, std::istream& in);
Report run_kernels(const Options& o);
Report run_torsion(const Options& o);
Report run_derivative(const Options& o);
Report run_transition(const Options& o);
Report run_bounds(const Options& o);

/// "a,b[,c]" -> Point.
Point parse_point(const std::string& text);

}  // namespace fraclab::cli
