#pragma once

#include "holotype/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace holotype {

template <typename T>
using BasicVector = std::vector<T>;

/// Dense row-major matrix over an exact field.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<BasicVector<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("row length does not match column count");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T& at(std::size_t r, std::size_t c)
    {
        if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
        return (*this)(r, c);
    }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    BasicVector<T> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

    BasicVector<T> column(std::size_t c) const
    {
        BasicVector<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        require_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        require_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a)
    {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = -a.data_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend BasicVector<T> operator*(const Matrix& a, std::span<const T> v)
    {
        if (a.cols_ != v.size()) throw Error("matrix-vector shape mismatch");
        BasicVector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (v[k] != T(0)) out[i] += a(i, k) * v[k];
        return out;
    }

    friend BasicVector<T> operator*(const Matrix& a, const BasicVector<T>& v)
    {
        return a * std::span<const T>(v);
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Mat = Matrix<Rat>;
using Vec = BasicVector<Rat>;

template <typename T>
BasicVector<T> unit_vector(std::size_t dim, std::size_t index)
{
    BasicVector<T> v(dim, T(0));
    v.at(index) = T(1);
    return v;
}

inline Vec unit(std::size_t dim, std::size_t index) { return unit_vector<Rat>(dim, index); }

template <typename T>
bool is_zero_vector(std::span<const T> v)
{
    return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
}

template <typename T>
bool is_zero_vector(const BasicVector<T>& v) { return is_zero_vector(std::span<const T>(v)); }

template <typename T>
BasicVector<T> add(const BasicVector<T>& a, const BasicVector<T>& b)
{
    if (a.size() != b.size()) throw Error("vector length mismatch");
    BasicVector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <typename T>
BasicVector<T> sub(const BasicVector<T>& a, const BasicVector<T>& b)
{
    if (a.size() != b.size()) throw Error("vector length mismatch");
    BasicVector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <typename T>
BasicVector<T> scale(const T& s, const BasicVector<T>& a)
{
    BasicVector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

template <typename T>
BasicVector<T> negate(const BasicVector<T>& a) { return scale(T(-1), a); }

template <typename T>
T dot(std::span<const T> a, std::span<const T> b)
{
    if (a.size() != b.size()) throw Error("vector length mismatch");
    T acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Reduced row echelon form with the pivot column of each nonzero row.
template <typename T>
struct Echelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Zero rows end up at the bottom.
template <typename T>
Echelon<T> echelon(Matrix<T> m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col) == T(0)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
        const T inv = T(1) / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == T(0)) continue;
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

template <typename T>
Matrix<T> rref(const Matrix<T>& m) { return echelon(m).reduced; }

template <typename T>
std::size_t rank(const Matrix<T>& m) { return echelon(m).rank(); }

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <typename T>
std::vector<BasicVector<T>> kernel(const Matrix<T>& m)
{
    const auto e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<BasicVector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BasicVector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
T determinant(Matrix<T> m)
{
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == T(0)) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const T inv = T(1) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == T(0)) continue;
            const T factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

/// Exact inverse, or nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m)
{
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = T(1);
    }
    const auto e = echelon(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

template <typename T>
bool is_antisymmetric(const Matrix<T>& m)
{
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

template <typename T>
bool is_symmetric(const Matrix<T>& m)
{
    return m.is_square() && m == m.transpose();
}

template <typename T>
Matrix<T> block(const Matrix<T>& m, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols)
{
    if (row0 + rows > m.rows() || col0 + cols > m.cols()) throw Error("block out of range");
    Matrix<T> out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(row0 + r, col0 + c);
    return out;
}

/// Q = (I - S)(I + S)^-1 for antisymmetric S. I + S is invertible because
/// S has no real eigenvalue other than 0, and Q^T Q = I follows from S^T = -S.
template <typename T>
Matrix<T> cayley_orthogonal(const Matrix<T>& s)
{
    if (!is_antisymmetric(s)) throw Error("cayley_orthogonal: input is not antisymmetric");
    const auto id = Matrix<T>::identity(s.rows());
    const auto inv = inverse(id + s);
    if (!inv) throw Error("cayley_orthogonal: I + S singular");
    return (id - s) * *inv;
}

} // namespace holotype
