#include "homdim/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace homdim {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero())
{
}

Matrix Matrix::identity(FieldSpec field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
    Matrix m(field, nrows, ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (long long v : row) m(r, c++) = field.from_int(v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns)
{
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        assert(columns[c].size() == rows);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const
{
    Matrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    }
    return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const
{
    Matrix m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const
{
    assert(r0 + nrows <= rows_ && c0 + ncols <= cols_);
    Matrix m(field_, nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    }
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
    }
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return false;
        }
    }
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    assert(cols_ == o.rows_);
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const
{
    assert(v.size() == cols_);
    Vector out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero() || v[k].is_zero()) continue;
            out[i] += a * v[k];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix out = *this;
    out += o;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    }
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-field_.one()); }

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_) {
        if (!x.is_zero()) x *= s;
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    assert(a.rows_ == b.rows_);
    Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(0, a.cols_, b);
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    assert(a.cols_ == b.cols_);
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, 0, b);
    return out;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> support;  // nonzero columns of the current pivot row
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        }
        const Scalar inv = m(r, c).inverse();
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (m(r, j).is_zero()) continue;
            m(r, j) *= inv;
            support.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j : support) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const RowEchelon ech = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols, m.field().zero());
        v[f] = m.field().one();
        for (std::size_t j = 0; j < ech.pivots.size(); ++j) v[ech.pivots[j]] = -ech.reduced(j, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix kernel_matrix(const Matrix& m)
{
    const auto basis = kernel_basis(m);
    return Matrix::from_columns(m.field(), m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    assert(b.size() == m.rows());
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
    const RowEchelon ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), m.field().zero());
    for (std::size_t j = 0; j < ech.pivots.size(); ++j) x[ech.pivots[j]] = ech.reduced(j, m.cols());
    return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    const RowEchelon ech = row_reduce(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    return ech.reduced.block(0, n, n, n);
}

SubspaceCoords::SubspaceCoords(const Matrix& basis)
{
    const std::size_t n = basis.rows();
    const std::size_t k = basis.cols();
    const auto rows = row_reduce(basis.transpose()).pivots;
    if (rows.size() != k) throw std::invalid_argument("subspace basis is not linearly independent");
    const auto inv = inverse(basis.select_rows(rows));
    assert(inv);
    left_inverse_ = Matrix(basis.field(), k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) left_inverse_(i, rows[j]) = (*inv)(i, j);
    }
}

QuotientSpace quotient_space(const Matrix& sub, std::size_t n)
{
    assert(sub.rows() == n);
    const FieldSpec f = sub.field();
    QuotientSpace q;
    std::vector<bool> is_pivot(n, false);
    RowEchelon ech;
    if (sub.cols() > 0) {
        ech = row_reduce(sub.transpose());
        for (std::size_t p : ech.pivots) is_pivot[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_pivot[i]) q.complement.push_back(i);
    }
    q.projection = Matrix(f, q.complement.size(), n);
    for (std::size_t c = 0; c < q.complement.size(); ++c) {
        q.projection(c, q.complement[c]) = f.one();
        for (std::size_t j = 0; j < ech.pivots.size(); ++j) {
            q.projection(c, ech.pivots[j]) = -ech.reduced(j, q.complement[c]);
        }
    }
    return q;
}

}  // namespace homdim
