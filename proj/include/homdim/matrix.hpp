#pragma once

#include "homdim/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace homdim {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix& operator+=(const Matrix& o);

    friend bool operator==(const Matrix& a, const Matrix& b);

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with first-nonzero pivoting.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, in increasing free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Kernel basis as the columns of a cols × nullity matrix.
Matrix kernel_matrix(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Indices of a maximal independent set of columns (greedy, left to right).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates relative to a subspace given by independent columns.
///
/// For a full-column-rank basis B (n × k) computes a k × n matrix L with
/// L B = I, so L x gives the coordinates of any x in the column span of B.
class SubspaceCoords {
public:
    SubspaceCoords() = default;
    explicit SubspaceCoords(const Matrix& basis);

    std::size_t dim() const { return left_inverse_.rows(); }
    const Matrix& left_inverse() const { return left_inverse_; }
    Matrix coords(const Matrix& x) const { return left_inverse_ * x; }

private:
    Matrix left_inverse_;
};

/// Complement to the column span of `sub` inside k^n, spanned by standard
/// basis vectors, together with the projection onto those coordinates whose
/// kernel is exactly span(sub).
struct QuotientSpace {
    std::vector<std::size_t> complement;  // standard basis indices kept in the quotient
    Matrix projection;                    // complement.size() × n
};

QuotientSpace quotient_space(const Matrix& sub, std::size_t n);

}  // namespace homdim
