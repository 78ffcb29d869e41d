#include <doctest.h>

#include <cmath>

#include "opdc/cmv.hpp"
#include "opdc/dressing.hpp"
#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/sampling.hpp"
#include "opdc/verify_suites.hpp"

using namespace opdc;

namespace {

JacobiMatrix make_jacobi(std::vector<double> diag, std::vector<double> off) {
    JacobiMatrix j;
    j.n = static_cast<int>(diag.size());
    j.diag = Eigen::Map<Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(diag.size()));
    j.off = Eigen::Map<Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(off.size()));
    return j;
}

} // namespace

TEST_SUITE("dressing") {

TEST_CASE("Cholesky Darboux worked instance [[2,1],[1,2]]") {
    CholeskyDarbouxResult res = cholesky_darboux(make_jacobi({2, 2}, {1}));
    CHECK(res.jt.diag(0) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(res.jt.diag(1) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(res.jt.off(0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
    auto ev = res.jt.eigenvalues();
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Cholesky Darboux fixes the identity") {
    CholeskyDarbouxResult res = cholesky_darboux(make_jacobi({1, 1, 1}, {0, 0}));
    CHECK((res.jt.dense() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Cholesky Darboux rejects indefinite input") {
    CHECK_THROWS_AS(cholesky_darboux(make_jacobi({1, 1}, {2})), NotPositiveDefinite);
    CHECK_THROWS_AS(cholesky_darboux(make_jacobi({-1, 1}, {0})), NotPositiveDefinite);
}

TEST_CASE("LU Darboux: diagonal input with theta = 0 is fixed") {
    JacobiMatrix jt = lu_darboux(make_jacobi({1, 2}, {0}), 0.0);
    CHECK(jt.diag(0) == doctest::Approx(1.0));
    CHECK(jt.diag(1) == doctest::Approx(2.0));
    CHECK(jt.off(0) == 0.0);
}

TEST_CASE("LU Darboux singular pivot") {
    CHECK_THROWS_AS(lu_darboux(make_jacobi({0, 0, 0}, {0.5, 0.5}), 0.0), SingularPivot);
    // theta hits an eigenvalue of the 2x2 leading block of a constructed matrix
    CHECK_THROWS_AS(lu_darboux(make_jacobi({1, 1, 1}, {1, 1}), 2.0), SingularPivot);
}

TEST_CASE("quad algebra: free Jacobi with the identity has nullspace dimension 4") {
    int n = 12;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        a(k, k + 1) = 1.0;
        a(k + 1, k) = 1.0;
    }
    QuadAlgebraReport report = quad_algebra_solve(a, Eigen::MatrixXd::Identity(n, n));
    CHECK(report.solutions.size() == 4);
    for (const auto& sol : report.solutions) CHECK(sol.residual < 1e-10);
}

TEST_CASE("quad algebra suite: involutions found, random pair empty") {
    SuiteResult suite = suite_quad_algebra(99, 24);
    CHECK(suite.pass);
}

TEST_CASE("chain step: lambda_t = lambda admits the identity pair at x_t = x") {
    RationalSampler sampler(991);
    auto seq = ReflectionSequence::from_list(draw_reflection_list(sampler, 16, true));
    double lambda = 0.8, x = 0.3;
    ChainStepReport report = chain_step(seq, lambda, x, lambda, 16);

    // the identity direction (r, s) = (0,0,1, 0,0,1) solves at x_t = x;
    // together with the ever-present D = J direction the solution at
    // x_t = x must live in their span
    Eigen::VectorXd t(6), e(6);
    t << 1, lambda, -x, 1, lambda, -x;
    e << 0, 0, 1, 0, 0, 1;
    Eigen::MatrixXd span(6, 2);
    span.col(0) = t.normalized();
    span.col(1) = (e - e.dot(t.normalized()) * t.normalized()).normalized();
    bool found = false;
    for (const auto& sol : report.solutions) {
        if (std::abs(sol.x_t - x) > 1e-6 || sol.residual > 1e-10) continue;
        Eigen::VectorXd w(6);
        w << sol.r1, sol.r2, sol.r0, sol.s1, sol.s2, sol.s0;
        if ((w - span * (span.transpose() * w)).norm() < 1e-6) found = true;
    }
    CHECK(found);
}

TEST_CASE("chain step: trivial family present for generic lambda_t") {
    RationalSampler sampler(992);
    auto seq = ReflectionSequence::from_list(draw_reflection_list(sampler, 16, true));
    ChainStepReport report = chain_step(seq, 0.6, 0.4, -1.1, 16);
    int trivial_count = 0;
    for (const auto& sol : report.solutions)
        if (sol.trivial && sol.residual < 1e-10) ++trivial_count;
    CHECK(trivial_count > 0);
    CHECK(report.quad_disc == doctest::Approx(0.4 * 0.4 * (-1.1 - 0.6) * (-1.1 + 1.8)));
}

TEST_CASE("verify_identities: free sequence, lambda = 1/2") {
    auto seq = ReflectionSequence::from_generator([](int) { return Rational(0); }, "free");
    IdentityReport report = verify_identities(seq, 0.5, 1.0, 16);
    CHECK(report.all_pass);
    for (const auto& check : report.checks) {
        if (check.name == "L^2 - I" || check.name == "M^2 - I") CHECK(check.max_residual < 1e-13);
        if (check.name.find("K(l)K(-l)") != std::string::npos) CHECK(check.max_residual < 1e-14);
    }
}

TEST_CASE("verify_identities: corrected square identity on random classical data") {
    RationalSampler sampler(993);
    auto seq = ReflectionSequence::from_list(draw_reflection_list(sampler, 32, true));
    IdentityReport report = verify_identities(seq, 0.5, 0.75, 32);
    CHECK(report.all_pass);
    double contrast = 0;
    for (const auto& check : report.checks) {
        if (check.name.find("(1 - l l0)^2 I + l l0") != std::string::npos)
            CHECK(check.max_residual < 1e-12);
        if (check.informational && check.name.find("contrast variant") != std::string::npos)
            contrast = std::max(contrast, check.max_residual);
    }
    CHECK(contrast > 1e-3); // the variant coefficients do not balance for lambda0 != 1
}

TEST_CASE("spectral mapping: eigenvalues of K(l l0) map onto L + M eigenvalues") {
    RationalSampler sampler(994);
    auto a = draw_reflection_list(sampler, 128, true);
    double lambda = 0.5, lambda0 = 0.75;
    double t = lambda * lambda0;
    double chi = lambda0 * std::sqrt(lambda) - 1.0 / std::sqrt(lambda);
    auto mismatch = [&](int n) {
        auto seq = ReflectionSequence::from_list(a);
        auto [l, m] = build_lm(seq, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> kt_es(l.mat + t * m.mat);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lm_es(l.mat + m.mat);
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            double x2 = kt_es.eigenvalues()(i) * kt_es.eigenvalues()(i);
            double best = 1e300;
            for (int k = 0; k < n; ++k) {
                double mu = lm_es.eigenvalues()(k);
                best = std::min(best, std::abs(x2 - lambda * (chi * chi + lambda0 * mu * mu)));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    double d64 = mismatch(64);
    double d128 = mismatch(128);
    CHECK(d64 < 1e-10);
    CHECK(d128 < 1e-10);
    CHECK(d128 <= d64 + 1e-12);
}

TEST_CASE("uniform grid fit diagnostic on an exact double grid") {
    std::vector<double> grid;
    for (int k = 0; k < 8; ++k) {
        grid.push_back(-3.0 + 2.0 * k); // even progression
        grid.push_back(-2.5 + 2.0 * k); // odd progression
    }
    std::sort(grid.begin(), grid.end());
    GridFitReport fit = uniform_grid_fit(grid);
    CHECK(fit.rms_residual < 1e-12);
    CHECK(fit.even_step == doctest::Approx(2.0));
    CHECK(fit.odd_step == doctest::Approx(2.0));
}

TEST_CASE("grid probe: complementary Bannai-Ito spectrum fit is reported") {
    BIParameters p{Rational(1), Rational(2), Rational(1, 4), Rational(1, 3)};
    CBICoeffs cbi = cbi_coeffs(p, 24);
    GridProbe probe;
    for (int k = 0; k < 24; ++k) {
        probe.b.push_back(cbi.rec.b[static_cast<std::size_t>(k)].to_double());
        probe.u.push_back(cbi.rec.u[static_cast<std::size_t>(k)].to_double());
    }
    auto seq = ReflectionSequence::from_generator(bi_reflection_generator(p), "bannai-ito");
    IdentityReport report = verify_identities(seq, 0.5, 0.75, 16, probe);
    REQUIRE(report.grid_fit.has_value());
    CHECK(report.grid_fit->rms_residual >= 0.0);
}

TEST_CASE("darboux and chain suites pass") {
    CHECK(suite_darboux(7, 5, 20).pass);
    CHECK(suite_chain_report(7, 3, 16).pass);
}

} // TEST_SUITE
