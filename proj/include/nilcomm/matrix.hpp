#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilcomm/field.hpp"

namespace nilcomm {

/// Dense matrix over an exact field F (RationalField or PrimeField).
/// Entries are stored row-major; all arithmetic is exact.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    /// Matrix unit E_{i,j} (zero-based indices).
    static Matrix unit(F field, std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(field, n, n);
        m.at(i, j) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const Elem& x : e_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.add(e_[k], o.e_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.sub(e_[k], o.e_[k]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_same_field(o);
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& a = at(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
            }
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.mul(e_[k], c);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    void check_same_field(const Matrix& o) const {
        if (!(field_ == o.field_)) throw std::invalid_argument("matrix op: field mismatch");
    }

    void check_same_shape(const Matrix& o) const {
        check_same_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix op: shape mismatch");
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

using RatMatrix = Matrix<RationalField>;
using FpMatrix = Matrix<PrimeField>;

template <class F>
Matrix<F> mat_pow(const Matrix<F>& x, std::uint64_t k) {
    if (!x.square()) throw std::invalid_argument("mat_pow: matrix not square");
    Matrix<F> result = Matrix<F>::identity(x.field(), x.rows());
    Matrix<F> base = x;
    while (k) {
        if (k & 1) result = result * base;
        if (k >>= 1) base = base * base;
    }
    return result;
}

/// xy - yx; both operands must be square of equal size over one field.
template <class F>
Matrix<F> commutator(const Matrix<F>& x, const Matrix<F>& y) {
    x.check_same_field(y);
    if (!x.square() || !y.square() || x.rows() != y.rows())
        throw std::invalid_argument("commutator: operands must be square of equal size");
    return x * y - y * x;
}

/// True iff x^n = 0 for the n x n matrix x.
template <class F>
bool is_nilpotent(const Matrix<F>& x) {
    if (!x.square()) throw std::invalid_argument("is_nilpotent: matrix not square");
    if (x.rows() == 0) return true;
    return mat_pow(x, x.rows()).is_zero();
}

namespace detail {

/// Fraction-free (Bareiss) elimination on integer rows; returns the rank.
/// Pivots are chosen of minimal absolute value to curb entry growth; column
/// swaps are permitted since only the rank is needed.
std::size_t bareiss_rank(std::vector<std::vector<Int>>& a);

/// Clears denominators of one rational row into an integer row.
std::vector<Int> integer_row(const RatMatrix& m, std::size_t i);

}  // namespace detail

std::size_t rank(const RatMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis of the right null space, as column vectors. The returned list has
/// cols - rank(m) elements.
template <class F>
std::vector<Matrix<F>> kernel_basis(const Matrix<F>& m);

}  // namespace nilcomm
