#include <doctest.h>

#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/sampling.hpp"

using namespace opdc;

namespace {
const BIParameters kWorked{Rational(1), Rational(2), Rational(1, 4), Rational(1, 3)};
}

TEST_SUITE("families") {

TEST_CASE("bi_coeffs worked values") {
    BICoeffs bic = bi_coeffs(kWorked, 3);
    CHECK(bic.A[0] == Rational(35, 82));
    CHECK(bic.C[1] == Rational(-117, 82));
    CHECK(bic.C[0] == Rational(0));
    CHECK(bic.rec.b[0] == kWorked.rho1 - bic.A[0]);
    CHECK(bic.rec.u[1] == bic.A[0] * bic.C[1]);
    CHECK(bic.rec.ac.has_value());
    CHECK(bic.rec.ac->theta == kWorked.rho1);
}

TEST_CASE("cbi_coeffs worked values") {
    CBICoeffs cbi = cbi_coeffs(kWorked, 3);
    CHECK(cbi.v[0] == Rational(0));
    CHECK(cbi.v[1] == Rational(-234, 53));
    CHECK(cbi.v[2] == Rational(-9, 106));
    CHECK(cbi.rec.b[0] == Rational(2));
    CHECK(cbi.rec.b[1] == Rational(-2));
}

TEST_CASE("bi_seed worked values and seed identity") {
    BISeed seed = bi_seed(kWorked);
    CHECK(seed.a0 == Rational(599, 697));
    CHECK(seed.lambda0 == Rational(-119, 144));
    CHECK(seed.lambda_bi == Rational(144, 289));
    CHECK(seed.sqrt_lambda_bi == Rational(-12, 17));
    CHECK(seed.lambda0 * seed.sqrt_lambda_bi - seed.sqrt_lambda_bi.inv() == kWorked.rho2);
}

TEST_CASE("bi_reflection: both modes, worked values") {
    auto closed = bi_reflection(kWorked, 4, ReflectionMode::ClosedForm);
    auto recursive = bi_reflection(kWorked, 4, ReflectionMode::Recursive);
    CHECK(closed[0] == Rational(599, 697));
    CHECK(closed[1] == Rational(-695, 371));
    CHECK(closed == recursive);

    // v_0 = lambda0 (1 + a_{-1})(1 - a_0) = 0 by the a_{-1} = -1 convention
    CBICoeffs cbi = cbi_coeffs(kWorked, 1);
    BISeed seed = bi_seed(kWorked);
    CHECK(cbi.v[0] == seed.lambda0 * (Rational(1) + Rational(-1)) * (Rational(1) - seed.a0));
}

TEST_CASE("bi_reflection modes agree on random parameters") {
    RationalSampler sampler(301);
    run_resampled_trials(30, [&](int) {
        BIParameters p = draw_bi_parameters(sampler);
        auto closed = bi_reflection(p, 20, ReflectionMode::ClosedForm);
        auto recursive = bi_reflection(p, 20, ReflectionMode::Recursive);
        CHECK(closed == recursive);
    });
}

TEST_CASE("companion identity: kernel step at theta = rho1 gives the cBI recurrence") {
    RationalSampler sampler(302);
    run_resampled_trials(20, [&](int) {
        BIParameters p = draw_bi_parameters(sampler);
        BICoeffs bic = bi_coeffs(p, 16);
        CBICoeffs cbi = cbi_coeffs(p, 15);
        ChristoffelResult cr = christoffel(bic.rec, p.rho1);
        for (int k = 0; k < 15; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            CHECK(cr.transformed.b[i] == (k % 2 == 0 ? p.rho2 : -p.rho2));
            CHECK(cr.transformed.u[i] == cbi.v[i]);
        }
    });
}

TEST_CASE("rw_coeffs worked values") {
    RWParameters beta{Rational(2), Rational(2), Rational(1, 4), Rational(1, 6)};
    RWCoeffs rw = rw_coeffs(beta, 2);
    CHECK(rw.A[0] == Rational(234, 53));
    CHECK(rw.C[1] == Rational(9, 106));
    CHECK(rw.C[0] == Rational(0));
}

TEST_CASE("beta_map worked values and sigma = g + 2") {
    RWParameters beta = beta_map(kWorked);
    CHECK(beta.beta1 == Rational(2));
    CHECK(beta.beta2 == Rational(2));
    CHECK(beta.beta3 == Rational(1, 4));
    CHECK(beta.beta4 == Rational(1, 6));
    CHECK(beta.sigma() == Rational(53, 12));
    CHECK(beta.sigma() == kWorked.g() + Rational(2));

    RWParameters zero = beta_map(BIParameters{Rational(0), Rational(0), Rational(1, 2), Rational(1, 2)});
    CHECK(zero.beta1 == Rational(0));
    CHECK(zero.beta2 == Rational(1));
    CHECK(zero.beta3 == Rational(0));
    CHECK(zero.beta4 == Rational(0));

    RationalSampler sampler(303);
    for (int t = 0; t < 100; ++t) {
        BIParameters p = draw_bi_parameters(sampler);
        CHECK(beta_map(p).sigma() - p.g() == Rational(2));
    }
}

TEST_CASE("rw_reflection worked value and identity under beta_map") {
    RWParameters beta{Rational(2), Rational(2), Rational(1, 4), Rational(1, 6)};
    CHECK(rw_reflection(beta, 1)[0] == Rational(599, 697));

    RationalSampler sampler(304);
    run_resampled_trials(30, [&](int) {
        BIParameters p = draw_bi_parameters(sampler);
        auto lhs = rw_reflection(beta_map(p), 20);
        auto rhs = bi_reflection(p, 20, ReflectionMode::ClosedForm);
        CHECK(lhs == rhs);
    });

    RWParameters degenerate{Rational(1), Rational(0), Rational(0), Rational(2)}; // beta4 = beta1 + 1
    CHECK_THROWS_AS(rw_reflection(degenerate, 2), PoleInParameters);
}

TEST_CASE("subs1 worked values, g-invariance, double application recorded") {
    BIParameters s = subs1(kWorked);
    CHECK(s.rho1 == Rational(-5, 6));
    CHECK(s.rho2 == Rational(1));
    CHECK(s.r1 == Rational(1, 4));
    CHECK(s.r2 == Rational(-5, 2));
    CHECK(s.g() == kWorked.g());

    RationalSampler sampler(305);
    for (int t = 0; t < 100; ++t) {
        BIParameters p = draw_bi_parameters(sampler);
        CHECK(subs1(p).g() == p.g());
    }

    // the substitution is not an involution: recorded, not assumed
    BIParameters ss = subs1(s);
    CHECK(ss.rho1 == Rational(2));
    CHECK(ss.rho2 == Rational(-5, 6));
    CHECK(ss.r2 == Rational(-3, 2));
    CHECK((ss.rho1 != kWorked.rho1 || ss.rho2 != kWorked.rho2 || ss.r2 != kWorked.r2));
}

TEST_CASE("q-identification worked values") {
    IdentifyQReport report = bi_identify_q(kWorked, 24);
    CHECK(report.pass);
    CHECK(report.lambda == Rational(3));

    auto a = bi_q_reflection(kWorked, 2);
    CHECK(a == bi_reflection(subs1(kWorked), 2, ReflectionMode::ClosedForm));
    PencilRecurrence pr = pencil_recurrence(ReflectionSequence::from_list(a), report.lambda, 1);
    BICoeffs bic = bi_coeffs(kWorked, 1);
    CHECK(Rational(2) * (kWorked.rho1 - bic.A[0] - bic.C[0]) / (kWorked.rho2 - kWorked.rho1) ==
          Rational(47, 41));
    CHECK(pr.b[0] == Rational(47, 41));
}

TEST_CASE("q-identification on random parameters") {
    RationalSampler sampler(306);
    run_resampled_trials(25, [&](int) {
        BIParameters p = draw_bi_parameters(sampler);
        IdentifyQReport report = bi_identify_q(p, 20);
        CHECK(report.pass);
    });
}

TEST_CASE("SDG closure reproduces the complementary recurrence") {
    RationalSampler sampler(307);
    run_resampled_trials(15, [&](int) {
        BIParameters p = draw_bi_parameters(sampler);
        BISeed seed = bi_seed(p);
        auto a = bi_reflection(p, 13, ReflectionMode::ClosedForm);
        SDGResult sdg = sdg_step(ReflectionSequence::from_list(a), seed.lambda0 * seed.lambda_bi, 12);
        RescaleResult res = rescale(sdg, seed.lambda_bi, seed.sqrt_lambda_bi, seed.lambda0);
        CHECK(res.chi == p.rho2);
        CBICoeffs cbi = cbi_coeffs(p, 12);
        for (int k = 0; k < 12; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            CHECK(res.s_rec.b[i] == (k % 2 == 0 ? p.rho2 : -p.rho2));
            CHECK(res.s_rec.u[i] == cbi.v[i]);
        }
    });
}

TEST_CASE("pole detection names the offending factor") {
    // g = -1 hits (n + g + 1) at n = 0 in the closed form
    BIParameters pole{Rational(0), Rational(0), Rational(1, 2), Rational(1, 2)};
    CHECK(pole.g() == Rational(-1));
    CHECK_THROWS_AS(bi_reflection(pole, 2, ReflectionMode::ClosedForm), PoleInParameters);
    CHECK_THROWS_AS(bi_seed(pole), PoleInParameters);

    // rho2 = rho1 is a pole of the identification
    BIParameters equal{Rational(1), Rational(1), Rational(1, 4), Rational(1, 3)};
    CHECK_THROWS_AS(bi_identify_q(equal, 4), PoleInParameters);

    try {
        bi_coeffs(BIParameters{Rational(1), Rational(1), Rational(1), Rational(1)}, 2); // g = 0
        FAIL("expected PoleInParameters");
    } catch (const PoleInParameters& e) {
        CHECK(std::string(e.what()).find("(n + g)") != std::string::npos);
    }
}

} // TEST_SUITE
