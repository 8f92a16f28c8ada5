#include "npoly/matrix.hpp"

#include "npoly/error.hpp"

#include <utility>

namespace npoly {

IntMatrix multiply_transposed(const IntMatrix& a, const IntMatrix& b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::Internal, "matrix size mismatch");
    const int n = a.size();
    IntMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            BigInt acc = 0;
            for (int k = 1; k <= n; ++k) acc += a(i, k) * b(j, k);
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.size());
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

std::optional<RationalMatrix> invert(const RationalMatrix& m)
{
    const int n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);

    for (int col = 1; col <= n; ++col) {
        int pivot = col;
        while (pivot <= n && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot > n) return std::nullopt;
        if (pivot != col) {
            for (int j = 1; j <= n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational scale = a(col, col);
        for (int j = 1; j <= n; ++j) {
            a(col, j) /= scale;
            inv(col, j) /= scale;
        }
        for (int row = 1; row <= n; ++row) {
            if (row == col || sgn(a(row, col)) == 0) continue;
            const Rational factor = a(row, col);
            for (int j = 1; j <= n; ++j) {
                a(row, j) -= factor * a(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

Rational determinant(RationalMatrix a)
{
    const int n = a.size();
    Rational det = 1;
    for (int col = 1; col <= n; ++col) {
        int pivot = col;
        while (pivot <= n && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot > n) return 0;
        if (pivot != col) {
            for (int j = 1; j <= n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int row = col + 1; row <= n; ++row) {
            if (sgn(a(row, col)) == 0) continue;
            const Rational factor = a(row, col) / a(col, col);
            for (int j = col; j <= n; ++j) a(row, j) -= factor * a(col, j);
        }
    }
    return det;
}

std::optional<IntMatrix> to_integer(const RationalMatrix& m)
{
    IntMatrix out(m.size());
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) {
            if (m(i, j).get_den() != 1) return std::nullopt;
            out(i, j) = m(i, j).get_num();
        }
    }
    return out;
}

} // namespace npoly
