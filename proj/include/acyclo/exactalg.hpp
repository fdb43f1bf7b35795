#pragma once

// Exact integer and rational linear algebra: Smith normal form, rank,
// kernels and lattice saturation indices. Nothing in here rounds.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace acyclo {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    /// Submatrix keeping every row and the listed columns, in the listed order.
    IntMatrix select_columns(std::span<const std::size_t> cols) const;
    IntMatrix transpose() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const Integer> v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SnfResult {
    /// min(rows, cols) diagonal entries: positive factors forming a
    /// divisibility chain, followed by zeros.
    IntVector invariant_factors;
    IntMatrix left_transform;   ///< unimodular, rows x rows
    IntMatrix right_transform;  ///< unimodular, cols x cols
};

/// Smith normal form with witnesses: left * a * right == diag(invariant_factors).
SnfResult snf(const IntMatrix& a);

/// Same diagonal as snf(a) without accumulating the transforms.
IntVector invariant_factors(const IntMatrix& a);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& a);

/// Basis of the rational kernel of `a`, each vector primitive (content 1) with
/// its first nonzero entry positive. One vector per free column of the
/// reduced row echelon form, in column order.
std::vector<IntVector> nullspace(const IntMatrix& a);

/// Index of the column lattice of `a` inside its saturation
/// (span_R(columns) intersected with Z^rows); the product of the nonzero
/// invariant factors. 1 for the zero matrix.
Integer saturation_index(const IntMatrix& a);

/// Determinant of a square matrix (Bareiss).
Integer determinant(const IntMatrix& a);

/// Incrementally maintained echelon basis of a set of integer vectors.
/// Used to test independence one vector at a time during enumeration; copy
/// the object to branch.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }

    /// Adds `v` if it is independent of the vectors added so far.
    /// Returns false (and leaves the basis unchanged) otherwise.
    bool try_add(std::span<const Integer> v);
    bool is_independent(std::span<const Integer> v) const;
    /// Drops the most recently added vector.
    void pop_back() { rows_.pop_back(); }

private:
    IntVector reduce(std::span<const Integer> v) const;

    struct Row {
        std::size_t pivot;
        IntVector values;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

/// Divides a vector by the gcd of its entries (no-op on the zero vector).
void make_primitive(IntVector& v);

/// Clears denominators and returns the primitive integer vector on the same
/// ray.
IntVector primitive_integer_vector(std::span<const Rational> v);

std::string to_decimal(const Integer& x);
std::string to_string(const Rational& q);

}  // namespace acyclo
