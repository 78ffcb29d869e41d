#ifndef OPDC_RATIONAL_HPP
#define OPDC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "opdc/errors.hpp"

namespace opdc {

/// Exact arbitrary-precision fraction.
///
/// Always stored reduced with a positive denominator, so equality is a
/// plain syntactic check. All arithmetic is exact; division by zero
/// throws DivisionByZero instead of aborting.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long num, long den);

    /// Parses "p/q" or "p" with an optional leading sign, base 10.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(q_, o.q_) < 0; }
    bool operator<=(const Rational& o) const { return cmp(q_, o.q_) <= 0; }
    bool operator>(const Rational& o) const { return cmp(q_, o.q_) > 0; }
    bool operator>=(const Rational& o) const { return cmp(q_, o.q_) >= 0; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Rational inv() const;
    Rational abs() const;
    Rational squared() const { return *this * *this; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0; }
    int sign() const { return sgn(q_); }

    /// Canonical text form, "p/q" or "p" when the denominator is 1.
    std::string str() const;

    /// Nearest-double adapter; throws NonFiniteValue on overflow.
    double to_double() const;

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace opdc

#endif
