#include "mtt/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "mtt/errors.hpp"

namespace mtt {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(rows.size())
{
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != order_) throw InputError("RationalMatrix initializer is not square");
        std::size_t c = 0;
        for (const auto& value : row) (*this)(r, c++) = value;
        ++r;
    }
}

RationalMatrix RationalMatrix::identity(std::size_t order)
{
    RationalMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs)
{
    if (rhs.order_ != order_) throw InputError("matrix order mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs)
{
    if (rhs.order_ != order_) throw InputError("matrix order mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
    for (auto& e : entries_) e *= scalar;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.order() != b.order()) throw InputError("matrix order mismatch");
    const std::size_t n = a.order();
    RationalMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Rational determinant(const RationalMatrix& m)
{
    const std::size_t n = m.order();
    if (n == 0) return Rational(1);

    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, m(i, j).denominator());

    std::vector<Integer> a(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m(i, j);
            at(i, j) = e.numerator() * (scale / e.denominator());
        }

    // Bareiss: after step k every entry of the trailing block is a (k+1)x(k+1)
    // minor of the input, so the divisions below are exact.
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, k) = 0;
        }
        previous = at(k, k);
    }

    Integer det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(det, pow(scale, static_cast<unsigned>(n)));
}

RationalMatrix delete_row_col(const RationalMatrix& m, std::size_t index)
{
    const std::size_t n = m.order();
    if (index < 1 || index > n)
        throw InputError("minor index " + std::to_string(index) + " outside [1, " + std::to_string(n) + "]");
    const std::size_t skip = index - 1;
    RationalMatrix out(n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == skip) continue;
        for (std::size_t j = 0, c = 0; j < n; ++j) {
            if (j == skip) continue;
            out(r, c++) = m(i, j);
        }
        ++r;
    }
    return out;
}

std::vector<Rational> solve_linear(const RationalMatrix& a, std::span<const Rational> b)
{
    const std::size_t n = a.order();
    if (b.size() != n) throw InputError("right-hand side length does not match matrix order");

    // Augmented Gauss-Jordan elimination over Q.
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
        rows[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && rows[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        std::swap(rows[k], rows[pivot]);
        const Rational inv = Rational(1) / rows[k][k];
        for (std::size_t j = k; j <= n; ++j) rows[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || rows[i][k].is_zero()) continue;
            const Rational f = rows[i][k];
            for (std::size_t j = k; j <= n; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x)
{
    const std::size_t n = a.order();
    if (x.size() != n) throw InputError("vector length does not match matrix order");
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace mtt
