#ifndef DYNRES_BUDGETS_HPP
#define DYNRES_BUDGETS_HPP

#include <cstdlib>
#include <string>

#include "dynres/errors.hpp"

namespace dynres {

// Explicit resource caps.  Exhaustion raises budget_error, never a wrong
// answer; the CLI maps it to its own exit code.
struct Budget {
  long long groebner_pair_cap = 2000000;
  long long groebner_basis_cap = 20000;
  int groebner_degree_cap = 64;
  int solve_degree_cap = 40;
  long long solve_cell_cap = 4000000;  // dense solver matrix cells

  static Budget profile(const std::string& name) {
    Budget b;
    if (name == "small") {
      b.groebner_pair_cap = 20000;
      b.groebner_basis_cap = 2000;
      b.groebner_degree_cap = 24;
      b.solve_degree_cap = 16;
      b.solve_cell_cap = 400000;
    } else if (name == "large") {
      b.groebner_pair_cap = 50000000;
      b.groebner_basis_cap = 200000;
      b.groebner_degree_cap = 128;
      b.solve_degree_cap = 80;
      b.solve_cell_cap = 400000000;
    } else if (name != "default") {
      throw math_error("unknown budget profile '" + name + "'");
    }
    return b;
  }

  static Budget from_env() {
    const char* p = std::getenv("DYNRES_BUDGET_PROFILE");
    return profile(p ? p : "default");
  }
};

}  // namespace dynres

#endif
