#ifndef MTT_MATRIX_HPP
#define MTT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mtt/rational.hpp"

namespace mtt {

/// Dense square matrix of Rationals. Element access is 0-based.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t order);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }

    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

    [[nodiscard]] RationalMatrix transpose() const;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    RationalMatrix& operator-=(const RationalMatrix& rhs);
    RationalMatrix& operator*=(const Rational& scalar);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const Rational& c, RationalMatrix m) { return m *= c; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Rational> entries_;
};

/// Exact determinant. The matrix is scaled to integers by the LCM of its entry
/// denominators and reduced with fraction-free Bareiss elimination.
/// The 0x0 matrix has determinant 1.
Rational determinant(const RationalMatrix& m);

/// Removes row and column `index` (1-based, so that delete_row_col(L, 1) is L_{-1}).
/// Throws InputError when index is outside [1, order].
RationalMatrix delete_row_col(const RationalMatrix& m, std::size_t index);

/// Solves a·x = b exactly. Throws SingularMatrixError if a is singular.
std::vector<Rational> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x);

}  // namespace mtt

#endif  // MTT_MATRIX_HPP
