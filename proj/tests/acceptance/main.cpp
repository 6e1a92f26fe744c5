#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>

#include "criteria.hpp"

using namespace acceptance;

int main(int argc, char** argv) {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry all[] = {
      {"torsion oracle", torsion_oracle},
      {"derivative characterization", derivative_characterization},
      {"v_1 value", v1_value},
      {"expansion at s=1", expansion},
      {"two-sided derivative", two_sided},
      {"boundary behaviour of v_1", boundary_band},
      {"interchange", interchange},
      {"kernel normalizations", kernel_normalization},
      {"complementary kernel convergence", comp_kernel_convergence},
      {"L1 probe", l1_probe},
      {"bounds chain", bounds_chain},
      {"p_s lower bound", p_lower},
      {"self-adjointness", self_adjointness},
      {"boundary limit", boundary_limit},
      {"determinism", determinism},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0;
  for (int k = 0; k < 15; ++k) {
    if (!pick.empty() && !pick.count(k + 1)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, all[k].name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
