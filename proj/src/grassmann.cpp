#include "gkz24/grassmann.hpp"

#include <algorithm>

namespace gkz24 {

Mat6 mat6_zero() { return Mat6{}; }

Mat6 mat6_mul(const Mat6& A, const Mat6& B) {
    Mat6 C = mat6_zero();
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            if (A[i][k].is_zero()) continue;
            for (int j = 0; j < 6; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

Mat6 mat6_sub(const Mat6& A, const Mat6& B) {
    Mat6 C = A;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) C[i][j] -= B[i][j];
    return C;
}

Mat6 mat6_commutator(const Mat6& A, const Mat6& B) { return mat6_sub(mat6_mul(A, B), mat6_mul(B, A)); }

bool mat6_is_zero(const Mat6& M) {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (!M[i][j].is_zero()) return false;
    return true;
}

Mat6 mat6_transpose(const Mat6& M) {
    Mat6 T;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) T[i][j] = M[j][i];
    return T;
}

const std::array<std::pair<int, int>, 6>& PlueckerSpace::index_pairs() {
    static const std::array<std::pair<int, int>, 6> p = {
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return p;
}

std::string PlueckerSpace::coord_name(int a) {
    auto [i, j] = index_pairs()[a];
    return "z" + std::to_string(i) + std::to_string(j);
}

Mat6 PlueckerSpace::quadric_matrix() {
    // q_t = z14 z23 - z13 z24 + t z12 z34
    Mat6 A = mat6_zero();
    Rat half(1, 2);
    A[2][3] = TPoly(half);
    A[3][2] = TPoly(half);
    A[1][4] = TPoly(-half);
    A[4][1] = TPoly(-half);
    A[0][5] = TPoly::t(1, half);
    A[5][0] = TPoly::t(1, half);
    return A;
}

std::array<int, 6> PlueckerSpace::w_exponents(int a) {
    static const std::array<std::array<int, 6>, 6> we = {{
        {1, 0, 0, 0, 0, 0},  // z12 = w1
        {0, 1, 1, 0, 0, 0},  // z13 = w2 w3
        {0, 1, 0, 0, 1, 0},  // z14 = w2 w5
        {0, 0, 1, 1, 0, 0},  // z23 = w4 w3
        {0, 0, 0, 1, 1, 0},  // z24 = w4 w5
        {0, 0, 0, 0, 0, 1},  // z34 = w6
    }};
    return we[a];
}

int PlueckerSpace::coord_with_w_exponents(const std::array<int, 6>& want) {
    for (int a = 0; a < 6; ++a)
        if (w_exponents(a) == want) return a;
    return -1;
}

const QuarticIndexSet& QuarticIndexSet::instance() {
    static const QuarticIndexSet qs = [] {
        QuarticIndexSet out;
        for (int i0 = 0; i0 <= 4; ++i0)
            for (int i1 = 0; i0 + i1 <= 4; ++i1)
                for (int i2 = 0; i0 + i1 + i2 <= 4; ++i2)
                    for (int i3 = 0; i0 + i1 + i2 + i3 <= 4; ++i3)
                        for (int i4 = 0; i0 + i1 + i2 + i3 + i4 <= 4; ++i4) {
                            int i5 = 4 - i0 - i1 - i2 - i3 - i4;
                            out.indices.push_back({i0, i1, i2, i3, i4, i5});
                        }
        std::sort(out.indices.begin(), out.indices.end());
        std::vector<std::vector<Int>> pts;
        for (const auto& I : out.indices) {
            std::vector<Int> p;
            for (int x : I) p.emplace_back(x);
            pts.push_back(std::move(p));
        }
        out.space = make_space("X", pts, /*has_t=*/true);
        return out;
    }();
    return qs;
}

int QuarticIndexSet::find(const std::array<int, 6>& I) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), I);
    if (it == indices.end() || *it != I) return -1;
    return static_cast<int>(it - indices.begin());
}

Sl4Element Sl4Element::E(int p, int q) {
    Sl4Element x;
    x.m[p - 1][q - 1] = 1;
    x.label = "E" + std::to_string(p) + std::to_string(q);
    return x;
}

Sl4Element Sl4Element::H(int p, int q) {
    Sl4Element x;
    x.m[p - 1][p - 1] = 1;
    x.m[q - 1][q - 1] = -1;
    x.label = "E" + std::to_string(p) + std::to_string(p) + "-E" + std::to_string(q) + std::to_string(q);
    return x;
}

Sl4Element Sl4Element::bracket(const Sl4Element& o) const {
    Sl4Element out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int s = 0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j] - o.m[i][k] * m[k][j];
            out.m[i][j] = s;
        }
    out.label = "[" + label + "," + o.label + "]";
    return out;
}

bool Sl4Element::is_zero() const {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

const std::vector<Sl4Element>& sl4_basis() {
    static const std::vector<Sl4Element> basis = [] {
        std::vector<Sl4Element> out;
        out.push_back(Sl4Element::H(1, 2));
        out.push_back(Sl4Element::H(1, 3));
        out.push_back(Sl4Element::H(1, 4));
        for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                            {2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {4, 3}})
            out.push_back(Sl4Element::E(p, q));
        return out;
    }();
    return basis;
}

Mat6 wedge2_action(const Sl4Element& x) {
    // action on points: W[(a,b)][(i,j)] from x.(e_i ^ e_j); the coordinate
    // substitution matrix is the transpose
    Mat6 W = mat6_zero();
    const auto& pairs = PlueckerSpace::index_pairs();
    auto zindex = [&](int a, int b) -> std::pair<int, int> {  // (index, sign)
        if (a == b) return {-1, 0};
        int s = 1;
        if (a > b) { std::swap(a, b); s = -1; }
        for (int k = 0; k < 6; ++k)
            if (pairs[k] == std::pair{a, b}) return {k, s};
        return {-1, 0};
    };
    for (int col = 0; col < 6; ++col) {
        auto [i, j] = pairs[col];
        for (int p = 1; p <= 4; ++p) {
            // (x e_i) ^ e_j
            if (x.m[p - 1][i - 1] != 0) {
                auto [row, s] = zindex(p, j);
                if (row >= 0) W[row][col] += TPoly(Rat(s * x.m[p - 1][i - 1]));
            }
            // e_i ^ (x e_j)
            if (x.m[p - 1][j - 1] != 0) {
                auto [row, s] = zindex(i, p);
                if (row >= 0) W[row][col] += TPoly(Rat(s * x.m[p - 1][j - 1]));
            }
        }
    }
    return mat6_transpose(W);
}

Mat6 family_action(const Sl4Element& x) {
    Mat6 N = wedge2_action(x);
    // conjugation by D_t = diag(t,1,...,1) multiplies entry [a][b] by
    // t^(chi(b)-chi(a)); collect the extremes to clear denominators
    int minpow = 0, maxpow = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (N[a][b].is_zero()) continue;
            int pw = (b == 0 ? 1 : 0) - (a == 0 ? 1 : 0);
            minpow = std::min(minpow, pw);
            maxpow = std::max(maxpow, pw);
        }
    if (minpow < 0 && maxpow > 0)
        throw std::runtime_error("family_action: element mixes t and 1/t entries");
    const int shift = -minpow;  // rescale the generator by t^shift
    Mat6 out = mat6_zero();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (N[a][b].is_zero()) continue;
            int pw = (b == 0 ? 1 : 0) - (a == 0 ? 1 : 0) + shift;
            out[a][b] = TPoly::t(pw) * N[a][b];
        }
    return out;
}

WeylOperator substitution_operator(const Mat6& N) {
    const auto& qs = QuarticIndexSet::instance();
    WeylOperator op(qs.space);
    for (int idx = 0; idx < static_cast<int>(qs.indices.size()); ++idx) {
        const auto& I = qs.indices[idx];
        for (int a = 0; a < 6; ++a) {
            if (I[a] == 0) continue;
            for (int b = 0; b < 6; ++b) {
                if (N[a][b].is_zero()) continue;
                auto K = I;
                K[a] -= 1;
                K[b] += 1;
                int kidx = qs.find(K);
                op.add_term(Monomial::var(idx), Monomial::var(kidx), N[a][b] * TPoly(Rat(I[a])));
            }
        }
    }
    return op;
}

WeylOperator sl4_operator(const Sl4Element& x) { return substitution_operator(family_action(x)); }

std::optional<TPoly> conformal_factor(const Mat6& N, const Mat6& A) {
    Mat6 S = mat6_mul(mat6_transpose(N), A);
    Mat6 S2 = mat6_mul(A, N);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) S[i][j] += S2[i][j];
    // S must equal c(t) A; try to divide entrywise. c(t) may have degree up
    // to 2 here; solve via the first nonzero entry of A with A constant or
    // t-linear monomial entries.
    std::optional<TPoly> c;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (A[i][j].is_zero()) {
                if (!S[i][j].is_zero()) return std::nullopt;
                continue;
            }
            // entries of the quadric matrix are c0 or c1*t; divide exactly
            TPoly cand;
            if (A[i][j].degree() == 0) {
                Rat a0 = A[i][j].coeff(0);
                TPoly q;
                for (int k = 0; k <= S[i][j].degree(); ++k) q += TPoly::t(k, S[i][j].coeff(k) / a0);
                cand = q;
            } else {
                // A entry = a1 * t : S must be divisible by t
                if (S[i][j].coeff(0) != 0) return std::nullopt;
                Rat a1 = A[i][j].coeff(1);
                TPoly q;
                for (int k = 1; k <= S[i][j].degree(); ++k) q += TPoly::t(k - 1, S[i][j].coeff(k) / a1);
                cand = q;
            }
            if (!c) c = cand;
            else if (!(*c == cand)) return std::nullopt;
        }
    if (!c) c = TPoly();
    return c;
}

static std::vector<std::array<int, 6>> degree2_monomials() {
    std::vector<std::array<int, 6>> out;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            std::array<int, 6> m{};
            m[a] += 1;
            m[b] += 1;
            out.push_back(m);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeylOperator> q4_operators() {
    const auto& qs = QuarticIndexSet::instance();
    std::vector<WeylOperator> out;
    // q_t = z14 z23 - z13 z24 + t z12 z34 as exponent vectors with coefficients
    struct QTerm { std::array<int, 6> mono; TPoly c; };
    std::vector<QTerm> q = {
        {{0, 0, 1, 1, 0, 0}, TPoly(1)},
        {{0, 1, 0, 0, 1, 0}, TPoly(Rat(-1))},
        {{1, 0, 0, 0, 0, 1}, TPoly::t(1)},
    };
    for (const auto& K : degree2_monomials()) {
        WeylOperator op(qs.space);
        for (const auto& term : q) {
            std::array<int, 6> I;
            for (int c = 0; c < 6; ++c) I[c] = K[c] + term.mono[c];
            op.add_term(Monomial::one(), Monomial::var(qs.find(I)), term.c);
        }
        out.push_back(std::move(op));
    }
    return out;
}

std::vector<WeylOperator> q4_operators_at(const Rat& t) {
    std::vector<WeylOperator> out;
    for (const auto& op : q4_operators()) out.push_back(op.specialize_t(t));
    return out;
}

std::vector<WeylOperator> veronese_binomials() {
    const auto& qs = QuarticIndexSet::instance();
    const int n = static_cast<int>(qs.indices.size());
    std::map<std::array<int, 6>, std::vector<std::pair<int, int>>> by_sum;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::array<int, 6> s;
            for (int c = 0; c < 6; ++c) s[c] = qs.indices[i][c] + qs.indices[j][c];
            by_sum[s].emplace_back(i, j);
        }
    std::vector<WeylOperator> out;
    for (const auto& [s, group] : by_sum)
        for (size_t u = 0; u < group.size(); ++u)
            for (size_t v = u + 1; v < group.size(); ++v) {
                WeylOperator op(qs.space);
                Monomial d1 = Monomial::var(group[u].first).times(group[u].second, 1);
                Monomial d2 = Monomial::var(group[v].first).times(group[v].second, 1);
                op.add_term(Monomial::one(), d1, TPoly(1));
                op.add_term(Monomial::one(), d2, TPoly(Rat(-1)));
                if (!op.is_zero()) out.push_back(std::move(op));
            }
    return out;
}

WeylOperator quartic_euler() {
    const auto& qs = QuarticIndexSet::instance();
    WeylOperator op(qs.space);
    for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i)
        op.add_term(Monomial::var(i), Monomial::var(i), TPoly(1));
    op.add_term(Monomial::one(), Monomial::one(), TPoly(1));
    return op;
}

OperatorSystem taut_system_X() {
    OperatorSystem sys;
    sys.name = "tautological_X";
    sys.space = QuarticIndexSet::instance().space;
    for (const auto& x : sl4_basis())
        sys.generators.push_back({"symmetry", x.label, sl4_operator(x).specialize_t(1)});
    sys.generators.push_back({"euler", "scaling", quartic_euler()});
    int k = 0;
    for (auto& op : q4_operators_at(1))
        sys.generators.push_back({"polynomial", "q4_" + std::to_string(k++), std::move(op)});
    k = 0;
    for (auto& op : veronese_binomials())
        sys.generators.push_back({"binomial", "veronese_" + std::to_string(k++), std::move(op)});
    return sys;
}

}  // namespace gkz24
