#pragma once

#include <string>

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome torsion_oracle();
Outcome derivative_characterization();
Outcome v1_value();
Outcome expansion();
Outcome two_sided();
Outcome boundary_band();
Outcome interchange();
Outcome kernel_normalization();
Outcome comp_kernel_convergence();
Outcome l1_probe();
Outcome bounds_chain();
Outcome p_lower();
Outcome self_adjointness();
Outcome boundary_limit();
Outcome determinism();

/// printf-style formatting into a std::string.
std::string fmt(const char* f, ...);

}  // namespace acceptance
