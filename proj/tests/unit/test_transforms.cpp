#include <doctest.h>

#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/sampling.hpp"
#include "opdc/transforms.hpp"

using namespace opdc;

namespace {

ThreeTermRecurrence chebyshev_like(int depth) {
    ThreeTermRecurrence rec;
    for (int k = 0; k < depth; ++k) {
        rec.b.push_back(Rational(0));
        rec.u.push_back(k == 0 ? Rational(0) : Rational(1, 4));
    }
    return rec;
}

} // namespace

TEST_SUITE("transforms") {

TEST_CASE("kernel step on the Chebyshev-like recurrence at theta = 1") {
    ChristoffelResult cr = christoffel(chebyshev_like(6), Rational(1));
    CHECK(cr.A[0] == Rational(1));
    CHECK(cr.A[1] == Rational(3, 4));
    CHECK(cr.A[2] == Rational(2, 3));
    CHECK(cr.C[0] == Rational(0));
    CHECK(cr.C[1] == Rational(1, 4));
    CHECK(cr.C[2] == Rational(1, 3));
    CHECK(cr.transformed.b[0] == Rational(-1, 4));
    CHECK(cr.transformed.u[1] == Rational(3, 16));
}

TEST_CASE("ZeroAtTheta when b_0 = theta") {
    ThreeTermRecurrence rec = chebyshev_like(4);
    rec.b[0] = Rational(2);
    CHECK_THROWS_AS(christoffel(rec, Rational(2)), ZeroAtTheta);
}

TEST_CASE("roundtrip: Chebyshev-like input returns exactly") {
    ChristoffelResult cr = christoffel(chebyshev_like(8), Rational(1));
    ThreeTermRecurrence back = geronimus_reconstruct(cr);
    for (int k = 0; k < back.depth(); ++k) {
        CHECK(back.b[static_cast<std::size_t>(k)] == Rational(0));
        CHECK(back.u[static_cast<std::size_t>(k)] == (k == 0 ? Rational(0) : Rational(1, 4)));
    }
}

TEST_CASE("roundtrip: random rational recurrences, exactly") {
    RationalSampler sampler(101);
    run_resampled_trials(25, [&](int) {
        ThreeTermRecurrence rec = draw_recurrence(sampler, 21);
        Rational theta = sampler.draw();
        ThreeTermRecurrence back = geronimus_reconstruct(christoffel(rec, theta));
        REQUIRE(back.depth() >= 20);
        for (int k = 0; k < 20; ++k) {
            CHECK(back.b[static_cast<std::size_t>(k)] == rec.b[static_cast<std::size_t>(k)]);
            CHECK(back.u[static_cast<std::size_t>(k)] == rec.u[static_cast<std::size_t>(k)]);
        }
    });
}

TEST_CASE("roundtrip of the Bannai-Ito recurrence at theta = rho1") {
    BIParameters p{Rational(1), Rational(2), Rational(1, 4), Rational(1, 3)};
    BICoeffs bic = bi_coeffs(p, 12);
    ChristoffelResult cr = christoffel(bic.rec, p.rho1);
    CHECK(cr.A == bic.A);
    CHECK(cr.C == bic.C);
    ThreeTermRecurrence back = geronimus_reconstruct(cr);
    for (int k = 0; k < back.depth(); ++k) {
        CHECK(back.b[static_cast<std::size_t>(k)] == bic.rec.b[static_cast<std::size_t>(k)]);
        CHECK(back.u[static_cast<std::size_t>(k)] == bic.rec.u[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("A_n = P_{n+1}(theta)/P_n(theta) by direct evaluation") {
    RationalSampler sampler(102);
    run_resampled_trials(10, [&](int) {
        ThreeTermRecurrence rec = draw_recurrence(sampler, 10);
        Rational theta = sampler.draw();
        ChristoffelResult cr = christoffel(rec, theta, 9);
        auto p = rec.polynomials(10);
        for (int k = 0; k < 10; ++k)
            CHECK(p[static_cast<std::size_t>(k) + 1].eval(theta) ==
                  cr.A[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)].eval(theta));
    });
}

TEST_CASE("SDG step worked values") {
    auto seq = ReflectionSequence::from_list({Rational(1, 2), Rational(-1, 3), Rational(1, 4)});
    SDGResult sdg = sdg_step(seq, Rational(2), 3);
    CHECK(sdg.ustar[0] == Rational(0));
    CHECK(sdg.ustar[1] == Rational(2));
    CHECK(sdg.ustar[2] == Rational(1, 2));
    CHECK(sdg.unif.b[0] == Rational(1));
    CHECK(sdg.unif.b[1] == Rational(-1));
    CHECK(sdg.unif.b[2] == Rational(1));
    CHECK(sdg.unif.u[1] == Rational(4));
}

TEST_CASE("ustar is lambda-independent") {
    RationalSampler sampler(103);
    run_resampled_trials(20, [&](int) {
        auto seq = ReflectionSequence::from_list(draw_reflection_list(sampler, 12, false));
        Rational l1 = sampler.draw_nonzero();
        Rational l2 = sampler.draw_nonzero();
        if (l1 == l2) l2 = l1 + Rational(1);
        SDGResult first = sdg_step(seq, l1, 12);
        SDGResult second = sdg_step(seq, l2, 12);
        CHECK(first.ustar == second.ustar);
    });
}

TEST_CASE("SDG step rejects degenerate kernel factors") {
    auto seq = ReflectionSequence::from_list({Rational(1, 2), Rational(1), Rational(0)});
    CHECK_THROWS_AS(sdg_step(seq, Rational(2), 3), ZeroAtTheta);
    auto seq2 = ReflectionSequence::from_list({Rational(-1), Rational(1, 2), Rational(0)});
    CHECK_THROWS_AS(sdg_step(seq2, Rational(2), 3), ZeroAtTheta);
}

TEST_CASE("rescale worked values") {
    SDGResult sdg;
    sdg.ustar = {Rational(0), Rational(2)};
    sdg.lambda = Rational(4);
    CHECK(rescale(sdg, Rational(4), Rational(2), Rational(1)).chi == Rational(3, 2));
    CHECK(rescale(sdg, Rational(1), Rational(1), Rational(1)).chi == Rational(0));
    RescaleResult res =
        rescale(sdg, Rational(144, 289), Rational(-12, 17), Rational(-119, 144));
    CHECK(res.chi == Rational(2));
    CHECK(res.s_rec.b[0] == Rational(2));
    CHECK(res.s_rec.b[1] == Rational(-2));
    CHECK(res.s_rec.u[1] == Rational(-119, 144) * Rational(2));
    CHECK_THROWS_AS(rescale(sdg, Rational(2), Rational(1), Rational(1)), NotAPerfectSquare);
    CHECK_THROWS_AS(rescale(sdg, Rational(0), Rational(0), Rational(1)), ZeroSqrt);
}

TEST_CASE("chihara split worked values") {
    // C_0 = 0 forces v_0 = 0
    ThreeTermRecurrence s = chihara_split({Rational(5)}, {Rational(0)}, Rational(3), 1);
    CHECK(s.u[0] == Rational(0));
    CHECK(s.b[0] == Rational(3));

    // Racah-Wilson data at beta = (2, 2, 1/4, 1/6), chi = 0
    RWParameters beta{Rational(2), Rational(2), Rational(1, 4), Rational(1, 6)};
    RWCoeffs rw = rw_coeffs(beta, 2);
    ThreeTermRecurrence split = chihara_split(rw.A, rw.C, Rational(0), 3);
    CHECK(split.u[1] == Rational(-234, 53));
    CHECK(split.u[2] == Rational(-9, 106));
    for (const auto& b : split.b) CHECK(b.is_zero());
}

TEST_CASE("chihara polynomial identity: hand-checked depth 1") {
    ThreeTermRecurrence rec = chebyshev_like(6);
    Rational chi(0), alpha(0), c2(1);
    Rational theta = chi * chi + alpha - c2; // -1
    ChristoffelResult cr = christoffel(rec, theta);
    rec.ac = ACForm{cr.A, cr.C, theta};
    ChiharaCheckReport report = chihara_polynomial_check(rec, cr.transformed, alpha, c2, chi, 1);
    CHECK(report.pass);

    // S_0 = P_0 = 1 at depth 0 for any admissible data
    ChiharaCheckReport trivial = chihara_polynomial_check(rec, cr.transformed, alpha, c2, chi, 0);
    CHECK(trivial.pass);
}

TEST_CASE("chihara polynomial identity: random rational inputs to depth 6") {
    RationalSampler sampler(104);
    run_resampled_trials(10, [&](int) {
        Rational chi = sampler.draw(), alpha = sampler.draw(), c2 = sampler.draw();
        ACForm form;
        form.theta = chi * chi + alpha - c2;
        for (int k = 0; k < 9; ++k) {
            form.A.push_back(sampler.draw_nonzero());
            form.C.push_back(k == 0 ? Rational(0) : sampler.draw_nonzero());
        }
        ThreeTermRecurrence p_rec = ThreeTermRecurrence::from_ac(form);
        ChristoffelResult cr = christoffel(p_rec, form.theta);
        ChiharaCheckReport report = chihara_polynomial_check(p_rec, cr.transformed, alpha, c2, chi, 6);
        CHECK(report.pass);
    });
}

TEST_CASE("chihara check rejects inconsistent theta") {
    ThreeTermRecurrence rec = chebyshev_like(6);
    ChristoffelResult cr = christoffel(rec, Rational(-1));
    rec.ac = ACForm{cr.A, cr.C, Rational(-1)};
    CHECK_THROWS_AS(chihara_polynomial_check(rec, cr.transformed, Rational(0), Rational(0), Rational(0), 1),
                    InconsistentTheta);
}

TEST_CASE("chihara split inverts to (A, C) up to sign") {
    RationalSampler sampler(105);
    std::vector<Rational> a, c;
    c.push_back(Rational(0));
    a.push_back(sampler.draw_nonzero());
    for (int k = 1; k < 6; ++k) {
        a.push_back(sampler.draw_nonzero());
        c.push_back(sampler.draw_nonzero());
    }
    ThreeTermRecurrence s = chihara_split(a, c, Rational(5, 7), 11);
    for (int k = 0; k < 6; ++k) {
        CHECK(s.u[static_cast<std::size_t>(2 * k)] == -c[static_cast<std::size_t>(k)]);
        if (2 * k + 1 < 11) CHECK(s.u[static_cast<std::size_t>(2 * k + 1)] == -a[static_cast<std::size_t>(k)]);
    }
}

} // TEST_SUITE
