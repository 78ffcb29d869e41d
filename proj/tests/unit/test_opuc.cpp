#include <doctest.h>

#include <algorithm>

#include "opdc/errors.hpp"
#include "opdc/reflection.hpp"
#include "opdc/sampling.hpp"

using namespace opdc;

TEST_SUITE("opuc") {

TEST_CASE("a_{-1} convention and prefix bounds") {
    auto seq = ReflectionSequence::from_list({Rational(1, 2)});
    CHECK(seq.a(-1) == Rational(-1));
    CHECK(seq.a(0) == Rational(1, 2));
    CHECK_THROWS_AS(seq.a(1), OutOfRange);
}

TEST_CASE("free case: Phi_5 = z^5, Phi_5* = 1") {
    auto seq = ReflectionSequence::from_generator([](int) { return Rational(0); });
    SzegoPair pair = szego_polynomials(seq, 5);
    CHECK(pair.phi == Polynomial::monomial(5));
    CHECK(pair.phi_star == Polynomial(Rational(1)));
}

TEST_CASE("two-step recurrence: Phi_2 = z^2 - (2/3) z + 1/3") {
    auto seq = ReflectionSequence::from_list({Rational(1, 2), Rational(-1, 3)});
    SzegoPair pair = szego_polynomials(seq, 2);
    CHECK(pair.phi == Polynomial::from_coeffs({Rational(1, 3), Rational(-2, 3), Rational(1)}));
}

TEST_CASE("dual recurrence: Phi_1* = 1 - (1/2) z") {
    auto seq = ReflectionSequence::from_list({Rational(1, 2)});
    SzegoPair pair = szego_polynomials(seq, 1);
    CHECK(pair.phi_star == Polynomial::from_coeffs({Rational(1), Rational(-1, 2)}));
}

TEST_CASE("Verblunsky readback, monicity, reversal on random sequences") {
    RationalSampler sampler(42);
    for (int t = 0; t < 20; ++t) {
        auto a = draw_reflection_list(sampler, 8, false);
        auto seq = ReflectionSequence::from_list(a);
        for (int n = 0; n < 8; ++n) {
            SzegoPair pair = szego_polynomials(seq, n + 1);
            CHECK(-pair.phi.eval(Rational(0)) == a[static_cast<std::size_t>(n)]);
            CHECK(pair.phi.degree() == n + 1);
            CHECK(pair.phi.is_monic());
            CHECK(pair.phi_star.eval(Rational(0)) == Rational(1));
            CHECK(pair.phi_star == pair.phi.reversed(n + 1));
        }
    }
}

TEST_CASE("classify: classical, Krein, degenerate") {
    auto classical = classify(ReflectionSequence::from_list({Rational(1, 2), Rational(-1, 3)}), 2);
    CHECK(classical.epsilon == std::vector<int>{1, 1});
    CHECK(classical.classical);
    CHECK_FALSE(classical.degenerate);

    auto krein = classify(ReflectionSequence::from_list({Rational(-695, 371)}), 1);
    CHECK(krein.epsilon == std::vector<int>{-1});
    CHECK_FALSE(krein.classical);
    CHECK(krein.rsq[0] == Rational(695 * 695 - 371 * 371, 371 * 371));

    auto degenerate = classify(ReflectionSequence::from_list({Rational(1)}), 1);
    CHECK(degenerate.degenerate);
    CHECK_FALSE(degenerate.classical);
    CHECK(degenerate.epsilon == std::vector<int>{1});
}

} // TEST_SUITE
