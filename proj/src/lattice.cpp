#include "gkz24/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace gkz24 {

bool LatticeVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Int& x) { return x == 0; });
}

bool LatticeVector::is_primitive() const {
    Int g = 0;
    for (const Int& x : entries) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g == 1;
}

std::string LatticeVector::to_string() const { return vec_to_string(entries); }

static void check_same_dim(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lattice vector dimension mismatch");
    if (a.space != b.space) throw std::invalid_argument("lattice vector space mismatch");
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    LatticeVector r = a;
    for (int i = 0; i < a.dim(); ++i) r.entries[i] += b.entries[i];
    return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    LatticeVector r = a;
    for (int i = 0; i < a.dim(); ++i) r.entries[i] -= b.entries[i];
    return r;
}

LatticeVector operator*(const Int& c, const LatticeVector& a) {
    LatticeVector r = a;
    for (Int& x : r.entries) x *= c;
    return r;
}

Int pairing(const LatticeVector& m, const LatticeVector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("pairing: dimension mismatch");
    if (m.space == v.space) throw std::invalid_argument("pairing: needs one M- and one N-vector");
    Int s = 0;
    for (int i = 0; i < m.dim(); ++i) s += m.entries[i] * v.entries[i];
    return s;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntegerMatrix A(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < A.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != A.cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < A.cols; ++j) A.at(i, j) = rows[i][j];
    }
    return A;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
    IntegerMatrix A(cols.empty() ? 0 : static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < A.cols; ++j) {
        if (static_cast<int>(cols[j].size()) != A.rows)
            throw std::invalid_argument("ragged matrix columns");
        for (int i = 0; i < A.rows; ++i) A.at(i, j) = cols[j][i];
    }
    return A;
}

// Row-style Hermite reduction of a list of integer vectors, in place.
// Result: echelon basis with positive pivots, entries above pivots reduced.
static void hermite_rows(std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return;
    const int n = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        // clear column c below row r with gcd steps
        while (true) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][c] != 0 && (piv < 0 || cmp(abs(rows[i][c]), abs(rows[piv][c])) < 0)) piv = i;
            if (piv < 0) break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];  // truncated division is fine for the loop
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        // reduce entries above the pivot
        for (int i = 0; i < r; ++i) {
            if (rows[i][c] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
}

std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& A) {
    const int n = A.cols;
    // column-style HNF with a unimodular transform: work on rows of [A^T | I].
    std::vector<std::vector<Int>> work(n, std::vector<Int>(A.rows + n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < A.rows; ++j) work[i][j] = A.at(j, i);
        work[i][A.rows + i] = 1;
    }
    const int m = A.rows;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        while (true) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (work[i][c] != 0 && (piv < 0 || cmp(abs(work[i][c]), abs(work[piv][c])) < 0)) piv = i;
            if (piv < 0) break;
            std::swap(work[r], work[piv]);
            bool done = true;
            for (int i = r + 1; i < n; ++i) {
                if (work[i][c] == 0) continue;
                Int q = work[i][c] / work[r][c];
                for (int j = 0; j < m + n; ++j) work[i][j] -= q * work[r][j];
                if (work[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (work[r][c] != 0) ++r;
    }
    std::vector<std::vector<Int>> ker;
    for (int i = r; i < n; ++i) {
        // rows whose A^T-part is zero give kernel vectors in the I-part
        bool zero = true;
        for (int j = 0; j < m; ++j)
            if (work[i][j] != 0) { zero = false; break; }
        if (!zero) continue;
        ker.emplace_back(work[i].begin() + m, work[i].end());
    }
    hermite_rows(ker);
    return ker;
}

Int abs_determinant(const std::vector<std::vector<Int>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("abs_determinant: non-square input");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    std::vector<std::vector<Int>> a = rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int d = a[n - 1][n - 1];
    (void)sign;
    return abs(d);
}

Int abs_determinant(const std::vector<LatticeVector>& rows) {
    std::vector<std::vector<Int>> r;
    r.reserve(rows.size());
    for (const auto& v : rows) r.push_back(v.entries);
    return abs_determinant(r);
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Int> vec_add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<Int> vec_sub(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

std::vector<Int> vec_neg(const std::vector<Int>& a) {
    std::vector<Int> r = a;
    for (Int& x : r) x = -x;
    return r;
}

std::string vec_to_string(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace gkz24
