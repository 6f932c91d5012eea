#ifndef MTT_RATIONAL_HPP
#define MTT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mtt {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq. Every constructor canonicalizes, and
/// every arithmetic result is canonical, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of a scalar
    Rational(const Integer& value) : value_(value) {}                  // NOLINT
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p" or "p/q" with an optional leading sign. Throws ParseError.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    /// Lossy; for human-readable output only.
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class value_;
};

Rational pow(Rational base, unsigned exponent);
Rational abs(const Rational& x);

Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exponent);

}  // namespace mtt

#endif  // MTT_RATIONAL_HPP
