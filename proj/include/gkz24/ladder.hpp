#pragma once

#include "gkz24/lattice.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gkz24 {

/// One edge of the ladder diagram. Vertical edges are oriented downward,
/// horizontal edges rightward; (x,y) are grid coordinates with y increasing
/// upward. A vertical edge occupies column x, rows [y_lo, y_lo+1]; a
/// horizontal edge occupies row y, columns [x_lo, x_lo+1].
struct LadderEdge {
    int id = 0;  // 1-based, e1..e6
    bool vertical = false;
    int x = 0;     // column (vertical) / left column (horizontal)
    int y = 0;     // bottom row (vertical) / row (horizontal)
    std::string name() const { return "e" + std::to_string(id); }
};

struct LadderDiagram {
    std::vector<LadderEdge> edges;
    /// black dots in basis order; boundary values are taken in Z^dots
    std::vector<std::pair<std::string, std::array<int, 2>>> dots;
    std::vector<int> roof;                  // edge ids on the upper-right boundary
    std::array<int, 2> origin_O;            // start of positive paths (dotted grid)
    std::array<int, 2> origin_O0;           // end of positive paths
    int grid_w = 0, grid_h = 0;             // dotted grid dimensions
};

/// The fixed (2,4) diagram of the degeneration.
LadderDiagram build_ladder_24();

/// Boundary map: edge id -> N-vector over the black dots (head minus tail,
/// unlabeled endpoints contribute zero).
std::map<int, LatticeVector> boundary_delta(const LadderDiagram& d);

struct PositivePath {
    int i = 0, j = 0;                 // label pi_{ij}
    std::set<int> edges;              // crossed edge ids
    std::string name() const { return "pi_" + std::to_string(i) + std::to_string(j); }
};

/// All monotone O -> O_0 paths with the edges each one crosses.
std::vector<PositivePath> positive_paths(const LadderDiagram& d);

struct Fan {
    int dim = 0;
    std::vector<std::vector<Int>> rays;        // primitive N-vectors
    std::vector<std::vector<int>> max_cones;   // 0-based ray index sets, each sorted

    bool operator==(const Fan& o) const {
        return dim == o.dim && rays == o.rays && max_cones == o.max_cones;
    }
};

struct FanFromLadder {
    Fan fan;
    std::vector<PositivePath> paths;               // paths[c] indexes max_cones[c]
    std::vector<std::vector<int>> cone_monomials;  // w^sigma-hat: 0-based ray indices per cone
};

/// Fan of P(2,4): rays delta(e_i); the cone of a positive path pi is spanned
/// by { delta(e) : e not on pi }.
FanFromLadder fan_from_ladder(const LadderDiagram& d);

/// Replace the two non-simplicial 5-ray cones by the two pairs of smooth
/// 4-ray cones. Only defined for the (2,4) fan.
Fan small_resolution_24(const Fan& sigma);

/// Every maximal cone has |det| = 1 (full-dimensional simplicial cones only).
bool fan_is_smooth(const Fan& f);

/// Membership x in cone(rays of max_cones[c]) over the rationals.
bool cone_contains(const Fan& f, int cone_index, const std::vector<Rat>& x);

struct QuotientData {
    std::vector<std::array<Int, 2>> grading;        // deg(w_i) in Cl = Z^2
    std::vector<std::vector<int>> irrelevant_gens;  // monomial generators, ray indices

    /// the quotient torus H = Hom(Cl, C*) as its action weights, e.g.
    /// {(l m, l, m, l, m, l m)} for the (2,4) grading
    std::string h_description() const;
};

/// Cl-grading of the Cox variables (normalized so that the first pair of
/// variables whose degrees form a nonnegative basis maps to the standard
/// basis) and the irrelevant-ideal generators w^sigma-hat.
QuotientData quotient_data(const Fan& f);

/// Divisor coefficients of sum_{f in U(e)} H_f for a roof edge e.
/// U(e) is e together with the edges directly below (horizontal e) or
/// directly to the left (vertical e). Throws when e is not on the roof.
std::vector<Int> ample_divisor_from_roof(const LadderDiagram& d, int edge_id);

std::string fan_to_json(const Fan& f);
Fan fan_from_json(const std::string& text);

}  // namespace gkz24
