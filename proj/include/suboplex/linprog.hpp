#ifndef SUBOPLEX_LINPROG_HPP
#define SUBOPLEX_LINPROG_HPP

#include "suboplex/rational.hpp"

#include <optional>
#include <vector>

namespace suboplex {

enum class Rel { Eq, Ge, Le };

struct LinearConstraint {
    std::vector<Rat> coeffs;
    Rel rel;
    Rat rhs;
};

/// Exact feasibility for a system of rational linear constraints over free
/// variables.  Phase-one simplex with Bland's rule; returns a witness when
/// the system is feasible.  Strict inequalities are not represented here;
/// callers encode openness by homogeneity (">= 1" after scaling).
std::optional<std::vector<Rat>> solve_feasibility(const std::vector<LinearConstraint>& constraints,
                                                  int num_vars);

bool is_feasible(const std::vector<LinearConstraint>& constraints, int num_vars);

} // namespace suboplex

#endif
