#pragma once

#include "npoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace npoly {

/// Dense square matrix with 1-based element access.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

    static SquareMatrix identity(int n)
    {
        SquareMatrix m(n);
        for (int i = 1; i <= n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const noexcept { return n_; }

    T& operator()(int i, int j) { return data_[offset(i, j)]; }
    const T& operator()(int i, int j) const { return data_[offset(i, j)]; }

    SquareMatrix transposed() const
    {
        SquareMatrix m(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b)
    {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    std::size_t offset(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<BigInt>;
using RationalMatrix = SquareMatrix<Rational>;

/// a * b^T
IntMatrix multiply_transposed(const IntMatrix& a, const IntMatrix& b);

RationalMatrix to_rational(const IntMatrix& m);

/// Exact Gauss-Jordan inverse; empty when the matrix is singular.
std::optional<RationalMatrix> invert(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// Integer matrix if every entry has denominator 1.
std::optional<IntMatrix> to_integer(const RationalMatrix& m);

} // namespace npoly
