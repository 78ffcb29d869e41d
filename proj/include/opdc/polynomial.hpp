#ifndef OPDC_POLYNOMIAL_HPP
#define OPDC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "opdc/rational.hpp"

namespace opdc {

/// Dense univariate polynomial with exact rational coefficients,
/// index = degree, trailing zeros trimmed. The zero polynomial has an
/// empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    static Polynomial from_coeffs(std::vector<Rational> coeffs);
    static Polynomial monomial(int degree, Rational coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const;

    /// Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Multiplication by x^k.
    Polynomial shifted_up(int k) const;

    /// Exact composition p(inner(x)).
    Polynomial compose(const Polynomial& inner) const;

    /// Coefficient list reversed at length n+1, i.e. x^n p(1/x) for deg p <= n.
    Polynomial reversed(int n) const;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace opdc

#endif
