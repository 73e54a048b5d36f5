#pragma once

// Exact integer linear algebra over arbitrary-precision integers (GMP).
// Monodromy powers grow exponentially for Anosov matrices, so nothing in this
// library uses fixed-width arithmetic for matrix entries.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mtori {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix power(unsigned exponent) const;
    IntVector apply(const IntVector& x) const;

    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);

    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& s, const IntMatrix& a);

/// Block-diagonal sum diag(a, b).
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination. Independent of the
/// Smith form path.
std::size_t rational_rank(const IntMatrix& m);

/// Nullity of m as a linear map Q^cols -> Q^rows.
std::size_t rational_kernel_rank(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    IntVector diagonal() const;
};

/// Elementary row/column reduction. The pivot is the nonzero entry of least
/// absolute value, ties broken by lowest (row, col); remainders are least
/// nonnegative. The output is a pure function of the input.
SmithForm smith_normal_form(const IntMatrix& m);

bool verify_smith_form(const IntMatrix& m, const SmithForm& snf);

/// Z^rows / M Z^cols.
struct CokernelStructure {
    std::size_t free_rank = 0;
    IntVector torsion;  // invariant factors > 1, divisibility chain

    friend bool operator==(const CokernelStructure&, const CokernelStructure&) = default;
};

CokernelStructure cokernel(const IntMatrix& m);

/// Columns form a Z-basis of {x in Z^cols : M x = 0}. Every column is
/// primitive. Returns a cols x 0 matrix when the kernel is trivial.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// Integer x with basis * x = w, if one exists. The columns of `basis` must
/// be linearly independent.
std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& w);

/// Inverse of a matrix with determinant +-1. Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

Integer content(const IntVector& v);
bool is_primitive(const IntVector& v);
IntVector primitive_part(const IntVector& v);

std::string to_string(const IntVector& v);

}  // namespace mtori
