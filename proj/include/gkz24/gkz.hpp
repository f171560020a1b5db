#pragma once

#include "gkz24/polytope.hpp"
#include "gkz24/weyl.hpp"

#include <string>
#include <vector>

namespace gkz24 {

/// Tagged generator of an operator system.
struct Generator {
    std::string tag;         // torus | euler | scaling | root | polynomial | binomial | symmetry
    std::string provenance;  // character / root / relation / basis label
    WeylOperator op;
};

struct OperatorSystem {
    std::string name;
    SpacePtr space;
    std::vector<Generator> generators;

    std::vector<const Generator*> with_tag(const std::string& tag) const;
};

/// Everything needed to write the extended GKZ generators on Y in
/// b-coordinates: the fan, the anticanonical polytope, its lattice points as
/// a variable space, and the fan roots. The Euler convention is beta=(0;id),
/// i.e. Euler = sum b d/db + 1.
struct GkzContext {
    Fan fan;
    LatticePolytope delta;
    std::vector<std::vector<Int>> points;  // lattice points of delta, lex order
    SpacePtr space;                        // one variable per point
    std::vector<Root> root_list;
    int origin_index = -1;                 // index of 0 in points (b_0)

    int point_index(const std::vector<Int>& m) const;
};

GkzContext make_gkz_context(const Fan& fan);

/// sum_mu <mu, e_j> b_mu d_mu  (sign fixed by the diagonal-action worked example)
WeylOperator torus_operator(const GkzContext& ctx, int j);
/// sum_mu <mu, n> b_mu d_mu for a general character n
WeylOperator torus_operator_char(const GkzContext& ctx, const std::vector<Int>& n);
/// sum_mu b_mu d_mu + 1
WeylOperator euler_operator(const GkzContext& ctx);
/// w_i-scaling with its beta constant: sum_mu (<mu, rho_i> + 1) b_mu d_mu + 1
WeylOperator scaling_operator(const GkzContext& ctx, int ray_index);
/// Z_alpha = sum_{mu, mu+alpha in Delta} <rho_alpha, mu - alpha> b_mu d_{mu+alpha}
WeylOperator root_operator(const GkzContext& ctx, const Root& alpha);
/// binomials d^{l+} - d^{l-} from lattice relations of degree <= max_degree
std::vector<WeylOperator> box_operators(const GkzContext& ctx, int max_degree);

/// torus (dim) + euler + roots + boxes, tagged
OperatorSystem extended_gkz_system(const GkzContext& ctx, int box_degree = 2);

/// Complete-intersection context on Y: -K = sum_i L_i with L_i ~ sum_j a_ij D_j,
/// column sums 1.
struct CiContext {
    GkzContext base;                       // carries fan and roots
    int s = 0;
    std::vector<int> degrees;              // n_i with sum = n
    std::vector<std::vector<Int>> a;       // s x |Sigma(1)| integer matrix
    std::vector<LatticePolytope> factor_polytopes;
    std::vector<std::vector<std::vector<Int>>> factor_points;
    SpacePtr space;                        // factor-tagged variables

    int var_index(int factor, const std::vector<Int>& m) const;
};

CiContext make_ci_context(const Fan& fan, const std::vector<int>& degrees,
                          const std::vector<std::vector<Int>>& a);

WeylOperator ci_torus_operator(const CiContext& ctx, int j);
WeylOperator ci_euler_operator(const CiContext& ctx, int factor);
WeylOperator ci_root_operator(const CiContext& ctx, const Root& alpha);
std::vector<WeylOperator> ci_box_operators(const CiContext& ctx);

OperatorSystem ci_system(const CiContext& ctx);

std::string system_to_json(const OperatorSystem& sys);

}  // namespace gkz24
