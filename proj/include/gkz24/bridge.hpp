#pragma once

#include "gkz24/grassmann.hpp"
#include "gkz24/gkz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz24 {

/// One verification outcome; a report is pass iff all entries pass.
struct ReportEntry {
    std::string check;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct Report {
    std::string name;
    std::vector<ReportEntry> entries;

    bool all_pass() const;
    void add(std::string check, std::string expected, std::string got, bool pass);
    std::string to_json() const;
    std::string summary() const;  // human-readable lines
};

/// The identification between the quartic index set E and the lattice points
/// of Delta: Phi(I) = sum i_k v_k + (3,2,2,1), together with its fibers.
struct Bridge {
    GkzContext y;                     // extended GKZ side on the resolution
    const QuarticIndexSet* x;         // quartic side
    std::vector<int> phi;             // index of Phi(I) in y.points, per quartic index
    std::vector<std::vector<int>> fiber;  // quartic indices per point

    std::vector<Int> phi_point(int quartic_index) const;
};

Bridge make_bridge();

/// Closed form of Phi on a single exponent vector.
std::array<int, 4> phi_closed_form(const std::array<int, 6>& I);

/// Pushforward of a first-order operator on the a-variables through Phi^t.
/// Requires a single common shift Phi(K)-Phi(I) and fiber-constant
/// coefficients; throws std::runtime_error naming a witness otherwise.
struct Pushforward {
    std::vector<Int> shift;
    WeylOperator op;  // over the Delta variable space
};
Pushforward pushforward(const Bridge& br, const WeylOperator& A);

/// Same, but terms grouped by their shift (used for t-specializations whose
/// raising and lowering parts shift differently).
std::vector<Pushforward> pushforward_groups(const Bridge& br, const WeylOperator& A);

/// The 15 rows of the symmetry correspondence table: sl4 basis label,
/// expected type and character/root vector.
struct TableRow {
    std::string sl4_label;
    bool is_torus = false;
    std::vector<Int> value;
};
const std::vector<TableRow>& correspondence_table();

/// Verify all 15 rows by pushforward operator equality (torus rows exactly,
/// root rows up to the expected unit), plus the three worked examples
/// coefficient-for-coefficient.
Report verify_correspondence_table(const Bridge& br);

/// Whether the one-parameter automorphism of alpha fails to preserve the
/// fiber loci V(w2,w4,w6) or V(w1,w2,w4).
bool moves_exceptional_fiber(const Bridge& br, const Root& alpha);

/// Root action on the z-coordinates through the w-z dictionary.
Mat6 root_z_matrix(const Bridge& br, const Root& alpha);

struct VariantSystem {
    OperatorSystem system;            // over the quartic space
    std::vector<WeylOperator> type1;  // 6 scaling + 12 root pullbacks
    std::vector<WeylOperator> type2;  // kernel of Phi on quartics
    std::vector<WeylOperator> type3;  // Veronese binomials
    Report checks;                    // kernel dimension and q0*Sym2 equality
};
VariantSystem variant_system_Y(const Bridge& br);

/// Degeneration of the symmetry operators: t->0 limits land on extended GKZ
/// generators, q4(0) spans the type-2 space, binomials agree, and the
/// H-scaling combination gives 4*Euler.
Report degenerate_check(const Bridge& br);

struct RootExtension {
    Root root;
    Mat6 family;      // N0 + t N1
    TPoly conformal;  // c(t) with N^T A_t + A_t N = c(t) A_t
    bool extended = false;  // true when N1 != 0 was needed
};
/// Extend a retained root action into the t-family, minimal support
/// (N1 = 0 when possible, else the lexicographically first single entry).
RootExtension extend_root_to_family(const Bridge& br, const Root& alpha);

/// Reconstruction from the toric side: drop moving roots, extend the rest, generate
/// the torus part by commutators, and match the t=1 spans against the
/// tautological system on the Grassmannian side.
Report reconstruct_X_system(const Bridge& br);

// exact linear algebra over operator coefficient vectors
int operator_span_rank(const std::vector<const WeylOperator*>& ops);
bool operator_spans_equal(const std::vector<const WeylOperator*>& a,
                          const std::vector<const WeylOperator*>& b);

}  // namespace gkz24
