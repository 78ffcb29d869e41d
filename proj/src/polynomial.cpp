#include "opdc/polynomial.hpp"

#include <sstream>

namespace opdc {

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
    Polynomial p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return from_coeffs(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return from_coeffs(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) v *= c;
    return from_coeffs(std::move(out));
}

Polynomial Polynomial::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return from_coeffs(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
    return acc;
}

Polynomial Polynomial::reversed(int n) const {
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(n - k)] = coeff(k);
    return from_coeffs(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k > 0) os << (a != Rational(1) ? "*x" : "x");
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

} // namespace opdc
