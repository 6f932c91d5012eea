#include "mtt/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "mtt/errors.hpp"

namespace mtt {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed fraction '" + std::string(text) + "'");
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return Rational(p, q);
}

std::string Rational::str() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x)
{
    Rational r;
    r.value_ = -x.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational pow(Rational base, unsigned exponent)
{
    Rational result(1);
    while (exponent > 0) {
        if ((exponent & 1U) != 0) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

}  // namespace mtt
