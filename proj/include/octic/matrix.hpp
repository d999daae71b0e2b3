#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace octic {

using i64 = std::int64_t;
using IVec = std::vector<i64>;

/// Dense row-major matrix. Used with mpz_class, mpq_class and i64 entries.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void set_row(std::size_t r, const std::vector<T>& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: width mismatch");
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }
    void append_row(const std::vector<T>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ZMat = Matrix<mpz_class>;
using QMat = Matrix<mpq_class>;
using IMat = Matrix<i64>;
using ZVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
    Matrix<To> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
    return r;
}

/// Narrowing conversions that throw if a value does not fit.
i64 to_i64(const mpz_class& z);
i64 to_i64(const mpq_class& q);
IMat to_imat(const ZMat& m);
IMat to_imat(const QMat& m);
ZMat to_zmat(const IMat& m);
QMat to_qmat(const IMat& m);

/// Row vector times matrix.
QVec mul(const QVec& v, const QMat& m);
IVec mul(const IVec& v, const IMat& m);
i64 dot(const IVec& a, const IVec& b);
/// v^T G w for a symmetric integer matrix.
i64 bilinear(const IVec& v, const IMat& g, const IVec& w);
mpq_class bilinear(const QVec& v, const IMat& g, const QVec& w);

std::string to_string(const IMat& m);

}  // namespace octic
