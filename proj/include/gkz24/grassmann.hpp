#pragma once

#include "gkz24/gkz.hpp"
#include "gkz24/weyl.hpp"

#include <array>
#include <string>
#include <vector>

namespace gkz24 {

/// 6x6 matrix over t-polynomials; used both for coordinate substitutions
/// z_a -> z_a + s * sum_b N[a][b] z_b and for symmetric quadric matrices.
using Mat6 = std::array<std::array<TPoly, 6>, 6>;

Mat6 mat6_zero();
Mat6 mat6_mul(const Mat6& A, const Mat6& B);
Mat6 mat6_sub(const Mat6& A, const Mat6& B);
Mat6 mat6_commutator(const Mat6& A, const Mat6& B);
bool mat6_is_zero(const Mat6& M);
Mat6 mat6_transpose(const Mat6& M);

/// Pluecker coordinate bookkeeping: z12, z13, z14, z23, z24, z34 in this
/// order, and the family quadric q_t = z14 z23 - z13 z24 + t z12 z34.
struct PlueckerSpace {
    static const std::array<std::pair<int, int>, 6>& index_pairs();
    static std::string coord_name(int a);
    /// symmetric matrix of q_t (entries are halves of the coefficients)
    static Mat6 quadric_matrix();
    /// w-exponent vector of z_a under z12=w1, z13=w2w3, z14=w2w5, z23=w4w3,
    /// z24=w4w5, z34=w6
    static std::array<int, 6> w_exponents(int a);
    /// index of the z-coordinate with the given w-exponents, or -1
    static int coord_with_w_exponents(const std::array<int, 6>& we);
};

/// The 126 quartic exponents on P^5 and their variable space.
struct QuarticIndexSet {
    std::vector<std::array<int, 6>> indices;  // lex ordered, |.| = 126
    SpacePtr space;                           // a-variables, has_t = true

    static const QuarticIndexSet& instance();
    int find(const std::array<int, 6>& I) const;
};

struct Sl4Element {
    std::array<std::array<Int, 4>, 4> m{};
    std::string label;

    static Sl4Element E(int p, int q);            // elementary unit, 1-based
    static Sl4Element H(int p, int q);            // E_pp - E_qq
    Sl4Element bracket(const Sl4Element& o) const;
    bool is_zero() const;
};

/// the 15 basis elements in the fixed order: H(1,2), H(1,3), H(1,4), then
/// E(p,q) upper rows, then lower
const std::vector<Sl4Element>& sl4_basis();

/// Coordinate substitution matrix of x on P^5 = P(wedge^2 C^4); conventions
/// fixed so the worked substitution rules hold (E12: z23 -> z23 + s z13,
/// z24 -> z24 + s z14).
Mat6 wedge2_action(const Sl4Element& x);

/// Conjugated family action D_t^{-1} N D_t with D_t scaling z12 by t, then
/// rescaled by the minimal power of t making all entries polynomial. Throws
/// when no single rescaling clears the denominators.
Mat6 family_action(const Sl4Element& x);

/// First-order operator on the 126 a-variables induced by family_action(x)
/// on quartic monomials; at t=1 this is the symmetry operator Z(x).
WeylOperator sl4_operator(const Sl4Element& x);
/// operator from an arbitrary substitution matrix
WeylOperator substitution_operator(const Mat6& N);

/// Infinitesimal quadric-ideal invariance: N^T A_t + A_t N == c(t) A_t.
/// Returns c(t) when it exists.
std::optional<TPoly> conformal_factor(const Mat6& N, const Mat6& A);

/// the 21 operators d_zeta for zeta = q_t * z^K, K over degree-2 monomials
std::vector<WeylOperator> q4_operators();                 // symbolic t
std::vector<WeylOperator> q4_operators_at(const Rat& t);  // specialized

/// d_u d_v - d_p d_q for u+v = p+q in the quartic index set, deduplicated
std::vector<WeylOperator> veronese_binomials();

/// Euler operator sum a_I d_I + 1 on the quartic space
WeylOperator quartic_euler();

/// symmetry operators at t=1, Euler, q4(1), Veronese binomials
OperatorSystem taut_system_X();

}  // namespace gkz24
