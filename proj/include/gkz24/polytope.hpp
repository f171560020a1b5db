#pragma once

#include "gkz24/ladder.hpp"
#include "gkz24/lattice.hpp"

#include <optional>
#include <set>
#include <vector>

namespace gkz24 {

/// Half space <m, ray> >= -a.
struct Inequality {
    std::vector<Int> ray;
    Int a;
};

/// Bounded H-representation polytope with exact rational vertices and
/// lexicographically ordered lattice-point enumeration.
class LatticePolytope {
  public:
    LatticePolytope() : dim_(0) {}
    LatticePolytope(int dim, std::vector<Inequality> ineqs);

    /// {m : <m, rho_i> >= -a_i} for the divisor sum a_i D_i. Throws when the
    /// result is unbounded.
    static LatticePolytope from_divisor(const Fan& fan, const std::vector<Int>& coeffs);

    int dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }

    bool contains(const std::vector<Int>& m) const;
    bool contains(const std::vector<Rat>& m) const;

    /// exact rational vertices, sorted
    const std::vector<std::vector<Rat>>& vertices() const;
    /// all integral points, lexicographically ordered
    const std::vector<std::vector<Int>>& lattice_points() const;

    /// indices of inequalities active at a point
    std::set<int> active_set(const std::vector<Rat>& x) const;
    std::set<int> active_set(const std::vector<Int>& x) const;

    bool origin_interior() const;

  private:
    int dim_;
    std::vector<Inequality> ineqs_;
    mutable std::optional<std::vector<std::vector<Rat>>> verts_;
    mutable std::optional<std::vector<std::vector<Int>>> points_;
};

struct Root {
    std::vector<Int> alpha;       // element of M
    int ray_index = -1;           // the unique ray with pairing -1
    std::vector<Int> wD;          // exponents over Sigma(1), zero at ray_index
};

/// All roots of a complete fan, searched over the lattice points of the
/// anticanonical polytope; lexicographic order in alpha.
std::vector<Root> roots(const Fan& fan);

/// true iff every point of r*P (2 <= r <= r_max) is a sum of r lattice points of P
bool is_normal(const LatticePolytope& P, int r_max);

/// polar dual {y : <x,y> >= -1 for all x in P}; requires 0 in the interior
LatticePolytope dual_polytope(const LatticePolytope& P);

/// P and dual(P) both lattice polytopes with 0 the unique interior lattice point
bool is_reflexive(const LatticePolytope& P);

struct Face {
    std::set<int> active;                    // inequalities containing the face
    std::vector<std::vector<Rat>> vertices;  // sorted
    int dim = 0;
};

/// The full face lattice, computed from active-inequality sets.
std::vector<Face> faces(const LatticePolytope& P);

/// count of lattice points in the relative interior of a face
long face_interior_points(const LatticePolytope& P, const Face& f);

/// sum over codimension-two faces Theta of l*(Theta) l*(Theta'), Theta' the
/// dual face; requires a reflexive polytope.
long nonpoly_h1_dimension(const LatticePolytope& P);

std::string polytope_to_json(const LatticePolytope& P, bool with_points);
LatticePolytope polytope_from_json(const std::string& text);

}  // namespace gkz24
