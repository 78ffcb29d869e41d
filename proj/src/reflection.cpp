#include "opdc/reflection.hpp"

#include "opdc/errors.hpp"

namespace opdc {

ReflectionSequence ReflectionSequence::from_list(std::vector<Rational> a) {
    ReflectionSequence s;
    s.list_ = std::move(a);
    return s;
}

ReflectionSequence ReflectionSequence::from_generator(Generator gen, std::string name,
                                                      std::string metadata) {
    ReflectionSequence s;
    s.gen_ = std::move(gen);
    s.name_ = std::move(name);
    s.metadata_ = std::move(metadata);
    return s;
}

Rational ReflectionSequence::a(int n) const {
    if (n < -1) throw OutOfRange("reflection index " + std::to_string(n));
    if (n == -1) return Rational(-1);
    if (gen_) return gen_(n);
    if (n >= static_cast<int>(list_.size()))
        throw OutOfRange("reflection index " + std::to_string(n) + " past prefix of length " +
                         std::to_string(list_.size()));
    return list_[static_cast<std::size_t>(n)];
}

Rational ReflectionSequence::rsq(int n) const {
    Rational an = a(n);
    return (Rational(1) - an * an).abs();
}

int ReflectionSequence::epsilon(int n) const { return a(n).abs() > Rational(1) ? -1 : 1; }

SzegoPair szego_polynomials(const ReflectionSequence& seq, int n) {
    Polynomial phi(Rational(1));
    Polynomial phi_star(Rational(1));
    for (int k = 0; k < n; ++k) {
        Rational ak = seq.a(k);
        Polynomial next = phi.shifted_up(1) - phi_star * ak;
        phi_star = phi_star - phi.shifted_up(1) * ak;
        phi = std::move(next);
    }
    return SzegoPair{std::move(phi), std::move(phi_star), n};
}

Classification classify(const ReflectionSequence& seq, int n) {
    Classification c;
    c.epsilon.reserve(static_cast<std::size_t>(n));
    c.rsq.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rational abs_a = seq.a(k).abs();
        c.epsilon.push_back(abs_a > Rational(1) ? -1 : 1);
        c.rsq.push_back(seq.rsq(k));
        if (abs_a >= Rational(1)) c.classical = false;
        if (abs_a == Rational(1)) c.degenerate = true;
    }
    return c;
}

} // namespace opdc
