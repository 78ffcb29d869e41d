#include "opdc/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace opdc {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // strict shape check before handing to GMP: [+-]?digits(/digits)?
    std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) throw ParseError("not a rational: '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("not a rational: '" + s + "'");
        ++i;
        std::size_t den_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != s.size()) throw ParseError("not a rational: '" + s + "'");
    }
    if (s.front() == '+') s.erase(0, 1); // GMP does not accept an explicit plus
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
    if (sgn(mpq_class(q.get_den())) == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::to_double() const {
    double v = q_.get_d();
    if (!std::isfinite(v)) throw NonFiniteValue("rational does not fit in a double: " + str());
    return v;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace opdc
