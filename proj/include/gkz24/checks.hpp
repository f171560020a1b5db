#pragma once

#include "gkz24/bridge.hpp"
#include "gkz24/period.hpp"

namespace gkz24 {

/// Paper-data verification reports used by the command line driver and the
/// acceptance suite. Each check compares computed objects against the fixed
/// (2,4) reference data.

/// positive-path/cone/monomial table and the smooth refinement
Report check_fan_tables();
/// boundary map values, kernel relations, Cox gradings, irrelevant ideals,
/// and the roof divisors with their classes
Report check_cox_data();
/// Delta_L points, Delta vertices and point count, normality of Delta_L
Report check_polytopes();
/// the fourteen roots in canonical order, byte-exact
Report check_roots();
/// exactly the two diagonal roots move the exceptional fibers
Report check_missing_roots(const Bridge& br);
/// every torus, Euler, root and degree-2 box generator annihilates the
/// principal period series at the given truncation
Report check_periods(const Bridge& br, int k_max, int box_degree);
/// the (2,2) complete intersection: annihilation at k_max and the s=1
/// specialization agreeing with the extended GKZ generators
Report check_ci(const Bridge& br, int k_max);
/// vanishing of the non-polynomial deformation dimension
Report check_rigidity(const Bridge& br);
/// property suites: bracket anti-homomorphism, Jacobi, fiber constancy,
/// root well-definedness
Report check_properties(const Bridge& br);

}  // namespace gkz24
