#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkz24/lattice.hpp"

#include <random>

using namespace gkz24;

static LatticeVector mvec(std::initializer_list<long> e) { return LatticeVector(e, Space::M); }
static LatticeVector nvec(std::initializer_list<long> e) { return LatticeVector(e, Space::N); }

TEST_CASE("pairing on printed examples") {
    CHECK(pairing(mvec({0, 0, 1, 0}), nvec({0, 0, -1, 1})) == -1);
    CHECK(pairing(mvec({0, 1, 1, 1}), nvec({0, 0, 0, -1})) == -1);
    LatticeVector zero = mvec({0, 0, 0, 0});
    for (auto v : {nvec({1, 2, 3, 4}), nvec({0, 0, -1, 1}), nvec({-7, 0, 0, 5})})
        CHECK(pairing(zero, v) == 0);
}

TEST_CASE("pairing rejects mismatches") {
    CHECK_THROWS_AS(pairing(mvec({1, 0}), nvec({1, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(pairing(mvec({1, 0}), mvec({1, 0})), std::invalid_argument);
}

TEST_CASE("pairing is bilinear") {
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> m1(4), m2(4), v(4);
        for (int i = 0; i < 4; ++i) { m1[i] = d(rng); m2[i] = d(rng); v[i] = d(rng); }
        Int a = d(rng), b = d(rng);
        LatticeVector M1(m1, Space::M), M2(m2, Space::M), V(v, Space::N);
        CHECK(pairing(a * M1 + b * M2, V) == a * pairing(M1, V) + b * pairing(M2, V));
    }
}

static const std::vector<std::vector<Int>> kVl = {
    {0, 0, 0, 0}, {-1, 0, 0, 0}, {-1, -1, 0, 0}, {-1, 0, -1, 0}, {-1, -1, -1, 0}, {-1, -1, -1, -1}};

TEST_CASE("kernel of the v-columns is the single quadric relation") {
    // columns v1..v4 of the path table
    IntegerMatrix A = IntegerMatrix::from_columns({kVl[1], kVl[2], kVl[3], kVl[4]});
    auto ker = integer_kernel(A);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<Int>{1, -1, -1, 1});  // v1 - v2 - v3 + v4 = 0
}

TEST_CASE("kernel of identity is empty") {
    IntegerMatrix I(3, 3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
    CHECK(integer_kernel(I).empty());
}

TEST_CASE("kernel of the ray columns rho1 rho2 rho4 rho6") {
    IntegerMatrix A = IntegerMatrix::from_columns(
        {{1, 0, 0, 0}, {-1, 0, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    auto ker = integer_kernel(A);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<Int>{1, 1, 1, 1});  // rho1 + rho2 + rho4 + rho6 = 0
}

TEST_CASE("kernel vectors and their combinations are killed") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + trial % 3, cols = 3 + trial % 4;
        IntegerMatrix A(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) A.at(i, j) = d(rng);
        auto ker = integer_kernel(A);
        auto apply = [&](const std::vector<Int>& x) {
            for (int i = 0; i < rows; ++i) {
                Int s = 0;
                for (int j = 0; j < cols; ++j) s += A.at(i, j) * x[j];
                CHECK(s == 0);
            }
        };
        for (const auto& k : ker) apply(k);
        if (ker.size() >= 2) {
            std::vector<Int> combo(cols, 0);
            for (const auto& k : ker) {
                Int c = d(rng);
                for (int j = 0; j < cols; ++j) combo[j] += c * k[j];
            }
            apply(combo);
        }
    }
}

// independent rank oracle over the rationals
static int rational_rank(const IntegerMatrix& A) {
    std::vector<std::vector<Rat>> m(A.rows, std::vector<Rat>(A.cols));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) m[i][j] = Rat(A.at(i, j));
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int pr = -1;
        for (int i = r; i < A.rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int k = 0; k < A.cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

TEST_CASE("kernel rank complements matrix rank") {
    IntegerMatrix A = IntegerMatrix::from_rows({{2, 4, 6, 8}, {1, 2, 3, 4}, {0, 1, 0, 1}});
    auto ker = integer_kernel(A);
    CHECK(ker.size() == 2);  // rank A = 2
    // and on random matrices, against an independent rational-rank oracle
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + trial % 4, cols = 2 + trial % 5;
        IntegerMatrix B(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) B.at(i, j) = d(rng);
        CHECK(static_cast<int>(integer_kernel(B).size()) + rational_rank(B) == cols);
    }
}

// independent oracle: cofactor expansion
static Int det_expand(const std::vector<std::vector<Int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Int s = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> sub;
        for (int i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Int term = m[0][j] * det_expand(sub);
        if (j % 2) s -= term;
        else s += term;
    }
    return s;
}

TEST_CASE("abs determinant") {
    std::vector<std::vector<Int>> basis = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(abs_determinant(basis) == 1);

    std::vector<std::vector<Int>> d14 = {
        {1, 0, 0, 0}, {-1, 0, 1, 0}, {-1, 1, 0, 0}, {0, 0, -1, 1}};
    CHECK(abs_determinant(d14) == abs(det_expand(d14)));
    CHECK(abs_determinant(d14) == 1);

    std::vector<std::vector<Int>> five = d14;
    five.push_back({0, -1, 0, 1});
    CHECK_THROWS_AS(abs_determinant(five), std::invalid_argument);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        CHECK(abs_determinant(m) == abs(det_expand(m)));
    }
}

TEST_CASE("primitivity") {
    CHECK(nvec({0, 0, -1, 1}).is_primitive());
    CHECK_FALSE(nvec({2, 4, 0, 0}).is_primitive());
    CHECK_FALSE(nvec({0, 0, 0, 0}).is_primitive());
}
