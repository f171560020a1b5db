#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gkz24 {

using Int = mpz_class;
using Rat = mpq_class;

/// Character lattice M vs. cocharacter lattice N. The dual pairing is only
/// defined between vectors of opposite tags.
enum class Space { M, N };

struct LatticeVector {
    std::vector<Int> entries;
    Space space = Space::M;

    LatticeVector() = default;
    LatticeVector(std::vector<Int> e, Space s) : entries(std::move(e)), space(s) {}
    LatticeVector(std::initializer_list<long> e, Space s) : space(s) {
        for (long x : e) entries.emplace_back(x);
    }

    int dim() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;
    /// gcd of entries is 1 (fan ray generators must satisfy this)
    bool is_primitive() const;

    bool operator==(const LatticeVector& o) const {
        return space == o.space && entries == o.entries;
    }
    std::string to_string() const;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Int& c, const LatticeVector& a);

/// Dual pairing <m, v> between an M-vector and an N-vector of equal dimension.
/// Throws std::invalid_argument on dimension or tag mismatch.
Int pairing(const LatticeVector& m, const LatticeVector& v);

/// Plain row-major integer matrix.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntegerMatrix from_columns(const std::vector<std::vector<Int>>& cols);
};

/// Z-basis of {x : Ax = 0}, canonicalized: the basis is in row-style Hermite
/// normal form (positive pivots, entries above a pivot reduced), rows ordered
/// by pivot column. Deterministic for a given A.
std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& A);

/// |det| of the square matrix whose rows are the given vectors.
/// Throws std::invalid_argument when the collection is not square.
Int abs_determinant(const std::vector<std::vector<Int>>& rows);
Int abs_determinant(const std::vector<LatticeVector>& rows);

// small helpers shared by the geometry modules
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> vec_add(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> vec_sub(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> vec_neg(const std::vector<Int>& a);
std::string vec_to_string(const std::vector<Int>& v);

}  // namespace gkz24
