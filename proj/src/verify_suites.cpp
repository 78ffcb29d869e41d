#include "opdc/verify_suites.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <sstream>

#include "opdc/cmv.hpp"
#include "opdc/dressing.hpp"
#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/sampling.hpp"
#include "opdc/transforms.hpp"

namespace opdc {

namespace {

std::string describe(const BIParameters& p) {
    return "(rho1, rho2, r1, r2) = (" + p.rho1.str() + ", " + p.rho2.str() + ", " + p.r1.str() + ", " +
           p.r2.str() + ")";
}

template <typename Body>
SuiteResult run_suite(const std::string& name, int trials, Body&& body) {
    SuiteResult result;
    result.name = name;
    result.trials = trials;
    auto start = std::chrono::steady_clock::now();
    try {
        body();
        result.pass = true;
        result.detail = "all checks exact";
    } catch (const IdentityViolation& e) {
        result.pass = false;
        result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void expect(bool ok, const std::string& message) {
    if (!ok) throw IdentityViolation(message);
}

const BIParameters kWorked{Rational(1), Rational(2), Rational(1, 4), Rational(1, 3)};

} // namespace

SuiteResult suite_bi_reflection_consistency(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("bi-reflection-consistency", trials, [&] {
        auto worked = bi_reflection(kWorked, 2, ReflectionMode::ClosedForm);
        expect(worked[0] == Rational(599, 697), "worked instance a_0 != 599/697");
        expect(worked[1] == Rational(-695, 371), "worked instance a_1 != -695/371");
        auto worked_rec = bi_reflection(kWorked, 2, ReflectionMode::Recursive);
        expect(worked == worked_rec, "worked instance: recursive mode disagrees");

        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            auto closed = bi_reflection(p, depth + 1, ReflectionMode::ClosedForm);
            auto recursive = bi_reflection(p, depth + 1, ReflectionMode::Recursive);
            for (std::size_t k = 0; k < closed.size(); ++k)
                expect(closed[k] == recursive[k],
                       "closed form != recursion at n = " + std::to_string(k) + " for " + describe(p));
        });
    });
}

SuiteResult suite_companion_identity(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("companion-identity", trials, [&] {
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            BICoeffs bic = bi_coeffs(p, depth + 1);
            CBICoeffs cbi = cbi_coeffs(p, depth);
            ChristoffelResult cr = christoffel(bic.rec, p.rho1);
            for (int k = 0; k < depth; ++k) {
                std::size_t i = static_cast<std::size_t>(k);
                Rational want_b = k % 2 == 0 ? p.rho2 : -p.rho2;
                expect(cr.transformed.b[i] == want_b,
                       "companion diagonal != (-1)^n rho2 at n = " + std::to_string(k) + " for " +
                           describe(p));
                expect(cr.transformed.u[i] == cbi.v[i],
                       "companion off-diagonal != v_n at n = " + std::to_string(k) + " for " + describe(p));
            }
        });
    });
}

SuiteResult suite_sdg_structure(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("sdg-structure", trials, [&] {
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            auto a = draw_reflection_list(sampler, depth, false);
            ReflectionSequence seq = ReflectionSequence::from_list(a);
            Rational lambda = sampler.draw_nonzero();
            Rational lambda2 = sampler.draw_nonzero();
            if (lambda2 == lambda) lambda2 = lambda + Rational(1);

            SDGResult sdg = sdg_step(seq, lambda, depth);
            ChristoffelResult generic = christoffel(to_recurrence(pencil_recurrence(seq, lambda, depth)), lambda + Rational(1));
            for (int k = 0; k < depth; ++k) {
                std::size_t i = static_cast<std::size_t>(k);
                Rational want_a = k % 2 == 0 ? Rational(1) - a[i] : lambda * (Rational(1) - a[i]);
                Rational prev = k == 0 ? Rational(-1) : a[i - 1];
                Rational want_c = k % 2 == 0 ? lambda * (Rational(1) + prev) : Rational(1) + prev;
                expect(generic.A[i] == want_a && sdg.A[i] == want_a,
                       "A_n closed form mismatch at n = " + std::to_string(k));
                expect(generic.C[i] == want_c && sdg.C[i] == want_c,
                       "C_n closed form mismatch at n = " + std::to_string(k));
                expect(sdg.ustar[i] == (Rational(1) + prev) * (Rational(1) - a[i]),
                       "u*_n != (1 + a_{n-1})(1 - a_n) at n = " + std::to_string(k));
            }
            SDGResult sdg2 = sdg_step(seq, lambda2, depth);
            expect(sdg.ustar == sdg2.ustar, "u*_n depends on lambda");
        });
    });
}

SuiteResult suite_rw_bridge(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("rw-bridge", trials, [&] {
        RWParameters wb = beta_map(kWorked);
        expect(wb.beta1 == Rational(2) && wb.beta2 == Rational(2) && wb.beta3 == Rational(1, 4) &&
                   wb.beta4 == Rational(1, 6),
               "worked beta map != (2, 2, 1/4, 1/6)");
        RWCoeffs wrw = rw_coeffs(wb, 2);
        expect(wrw.A[0] == Rational(234, 53), "worked A_0^RW != 234/53");
        expect(wrw.C[1] == Rational(9, 106), "worked C_1^RW != 9/106");
        CBICoeffs wcbi = cbi_coeffs(kWorked, 3);
        expect(wcbi.v[1] == Rational(-234, 53), "worked v_1 != -234/53");
        expect(wcbi.v[2] == Rational(-9, 106), "worked v_2 != -9/106");

        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            RWParameters beta = beta_map(p);
            expect(beta.sigma() == p.g() + Rational(2), "sigma != g + 2 for " + describe(p));
            int half = depth / 2 + 1;
            RWCoeffs rw = rw_coeffs(beta, half + 1);
            CBICoeffs cbi = cbi_coeffs(p, depth + 1);
            ThreeTermRecurrence split = chihara_split(rw.A, rw.C, Rational(0), depth + 1);
            for (int j = 0; j <= depth; ++j) {
                std::size_t i = static_cast<std::size_t>(j);
                expect(split.b[i].is_zero(), "chihara diagonal not zero at chi = 0");
                expect(split.u[i] == cbi.v[i], "v_" + std::to_string(j) +
                                                    " != chihara split of Racah-Wilson data for " + describe(p));
            }
            auto lhs = rw_reflection(beta, depth + 1);
            auto rhs = bi_reflection(p, depth + 1, ReflectionMode::ClosedForm);
            expect(lhs == rhs, "rw_reflection(beta_map(p)) != bi_reflection(p) for " + describe(p));
        });
    });
}

SuiteResult suite_q_identification(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("q-identification", trials, [&] {
        IdentifyQReport worked = bi_identify_q(kWorked, depth + 1);
        expect(worked.lambda == Rational(3), "worked lambda != 3");
        {
            auto a = bi_q_reflection(kWorked, 1);
            ReflectionSequence seq = ReflectionSequence::from_list(a);
            PencilRecurrence pr = pencil_recurrence(seq, worked.lambda, 1);
            expect(pr.b[0] == Rational(47, 41), "worked b_0 != 47/41");
        }
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            IdentifyQReport report = bi_identify_q(p, depth + 1);
            expect(report.pass, "identification report not passing");
        });
    });
}

SuiteResult suite_seed_identity(std::uint64_t seed, int trials, int bound) {
    return run_suite("seed-identity", trials, [&] {
        BISeed worked = bi_seed(kWorked);
        expect(worked.a0 == Rational(599, 697), "worked a_0 != 599/697");
        expect(worked.lambda0 == Rational(-119, 144), "worked lambda0 != -119/144");
        expect(worked.lambda_bi == Rational(144, 289), "worked lambda_BI != 144/289");
        expect(worked.sqrt_lambda_bi == Rational(-12, 17), "worked sqrt branch != -12/17");

        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            BISeed s = bi_seed(p);
            expect(s.sqrt_lambda_bi * s.sqrt_lambda_bi == s.lambda_bi,
                   "s^2 != lambda_BI for " + describe(p));
            expect(s.lambda0 * s.sqrt_lambda_bi - s.sqrt_lambda_bi.inv() == p.rho2,
                   "lambda0 s - 1/s != rho2 for " + describe(p));
        });
    });
}

SuiteResult suite_sdg_closure(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("sdg-closure", trials, [&] {
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            BIParameters p = draw_bi_parameters(sampler);
            BISeed seed_data = bi_seed(p);
            auto a = bi_reflection(p, depth + 1, ReflectionMode::ClosedForm);
            ReflectionSequence seq = ReflectionSequence::from_list(a);
            SDGResult sdg = sdg_step(seq, seed_data.lambda0 * seed_data.lambda_bi, depth);
            RescaleResult res = rescale(sdg, seed_data.lambda_bi, seed_data.sqrt_lambda_bi, seed_data.lambda0);
            expect(res.chi == p.rho2, "chi != rho2 for " + describe(p));
            CBICoeffs cbi = cbi_coeffs(p, depth);
            for (int k = 0; k < depth; ++k) {
                std::size_t i = static_cast<std::size_t>(k);
                expect(res.s_rec.b[i] == (k % 2 == 0 ? p.rho2 : -p.rho2),
                       "rescaled diagonal != (-1)^n rho2 for " + describe(p));
                expect(res.s_rec.u[i] == cbi.v[i],
                       "lambda0 u*_n != v_n at n = " + std::to_string(k) + " for " + describe(p));
            }
        });
    });
}

SuiteResult suite_roundtrip(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("christoffel-geronimus-roundtrip", trials, [&] {
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            ThreeTermRecurrence rec = draw_recurrence(sampler, depth + 1);
            Rational theta = sampler.draw();
            ChristoffelResult cr = christoffel(rec, theta);
            ThreeTermRecurrence back = geronimus_reconstruct(cr);
            expect(back.depth() >= depth, "roundtrip lost depth");
            for (int k = 0; k < depth; ++k) {
                std::size_t i = static_cast<std::size_t>(k);
                expect(back.b[i] == rec.b[i] && back.u[i] == rec.u[i],
                       "roundtrip differs at n = " + std::to_string(k) + " (theta = " + theta.str() + ")");
            }
        });
    });
}

SuiteResult suite_chihara_check(std::uint64_t seed, int trials, int depth, int bound) {
    return run_suite("chihara-polynomial-check", trials, [&] {
        RationalSampler sampler(seed, bound);
        run_resampled_trials(trials, [&](int) {
            ACForm form;
            Rational chi = sampler.draw();
            Rational alpha = sampler.draw();
            Rational c2 = sampler.draw();
            form.theta = chi * chi + alpha - c2;
            for (int k = 0; k <= depth + 1; ++k) {
                form.A.push_back(sampler.draw_nonzero());
                form.C.push_back(k == 0 ? Rational(0) : sampler.draw_nonzero());
            }
            ThreeTermRecurrence p_rec = ThreeTermRecurrence::from_ac(form);
            ChristoffelResult cr = christoffel(p_rec, form.theta);
            ChiharaCheckReport report =
                chihara_polynomial_check(p_rec, cr.transformed, alpha, c2, chi, depth);
            expect(report.pass, "chihara identity fails: " + report.detail);
        });
    });
}

SuiteResult suite_matrix_identities(std::uint64_t seed, int n) {
    SuiteResult result;
    result.name = "matrix-identities";
    result.trials = 3;
    auto start = std::chrono::steady_clock::now();
    RationalSampler sampler(seed);

    std::vector<std::pair<std::string, ReflectionSequence>> sequences;
    sequences.emplace_back("a = 0", ReflectionSequence::from_generator([](int) { return Rational(0); }, "free"));
    sequences.emplace_back("random classical",
                           ReflectionSequence::from_list(draw_reflection_list(sampler, n, true)));
    sequences.emplace_back("bannai-ito (1, 2, 1/4, 1/3)",
                           ReflectionSequence::from_generator(bi_reflection_generator(kWorked), "bannai-ito"));

    const double lambda = 0.5;
    const double lambda0 = 0.75;
    result.pass = true;
    std::ostringstream detail;
    for (auto& [label, seq] : sequences) {
        IdentityReport report = verify_identities(seq, lambda, lambda0, n);
        double contrast = 0;
        for (const auto& check : report.checks) {
            if (check.informational) contrast = std::max(contrast, check.max_residual);
            else if (!check.pass) {
                result.pass = false;
                detail << "[" << label << "] " << check.name << " residual " << check.max_residual
                       << " > " << check.tolerance << "; ";
            }
        }
        if (contrast < 1e-3) {
            result.pass = false;
            detail << "[" << label << "] contrast-variant residual unexpectedly small (" << contrast
                   << "); ";
        }
    }
    if (result.pass) detail << "all identities within tolerance; contrast variants stay large as expected";
    result.detail = detail.str();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SuiteResult suite_darboux(std::uint64_t seed, int trials, int n) {
    SuiteResult result;
    result.name = "darboux-isospectrality";
    result.trials = trials;
    auto start = std::chrono::steady_clock::now();
    try {
        // worked instance [[2, 1], [1, 2]]
        JacobiMatrix j2;
        j2.n = 2;
        j2.diag = Eigen::Vector2d(2, 2);
        j2.off = Eigen::VectorXd::Constant(1, 1.0);
        CholeskyDarbouxResult worked = cholesky_darboux(j2);
        expect(std::abs(worked.jt.diag(0) - 2.5) < 1e-12 && std::abs(worked.jt.diag(1) - 1.5) < 1e-12,
               "worked Cholesky Darboux diagonal != (5/2, 3/2)");
        expect(std::abs(worked.jt.off(0) - std::sqrt(3.0) / 2) < 1e-12,
               "worked Cholesky Darboux off-diagonal != sqrt(3)/2");
        auto spec2 = worked.jt.eigenvalues();
        expect(std::abs(spec2[0] - 1.0) < 1e-12 && std::abs(spec2[1] - 3.0) < 1e-12,
               "worked spectra != {1, 3}");

        RationalSampler sampler(seed);
        for (int t = 0; t < trials; ++t) {
            JacobiMatrix j;
            j.n = n;
            j.diag.resize(n);
            j.off.resize(n - 1);
            for (int k = 0; k + 1 < n; ++k) j.off(k) = sampler.uniform(-1.0, 1.0);
            for (int k = 0; k < n; ++k) {
                double dom = (k > 0 ? std::abs(j.off(k - 1)) : 0.0) + (k + 1 < n ? std::abs(j.off(k)) : 0.0);
                j.diag(k) = dom + sampler.uniform(0.5, 2.0);
            }
            CholeskyDarbouxResult res = cholesky_darboux(j);
            auto before = j.eigenvalues();
            auto after = res.jt.eigenvalues();
            for (int k = 0; k < n; ++k)
                expect(std::abs(before[static_cast<std::size_t>(k)] - after[static_cast<std::size_t>(k)]) <
                           1e-10,
                       "spectra differ beyond 1e-10 at trial " + std::to_string(t));

            // eigenvector intertwining f -> L^T f
            Eigen::MatrixXd lt = Eigen::MatrixXd::Zero(n, n);
            for (int k = 0; k < n; ++k) lt(k, k) = res.chol_diag(k);
            for (int k = 0; k + 1 < n; ++k) lt(k, k + 1) = res.chol_sub(k);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j.dense());
            Eigen::MatrixXd jt_dense = res.jt.dense();
            for (int k = 0; k < n; ++k) {
                Eigen::VectorXd f = es.eigenvectors().col(k);
                Eigen::VectorXd g = lt * f;
                double resid = (jt_dense * g - es.eigenvalues()(k) * g).norm();
                expect(resid <= 1e-9 * g.norm(), "eigenvector intertwining residual too large");
            }
        }

        // LU route against the exact kernel step on shared data
        const int m = 12;
        JacobiMatrix cheb;
        cheb.n = m;
        cheb.diag = Eigen::VectorXd::Zero(m);
        cheb.off = Eigen::VectorXd::Constant(m - 1, 0.5);
        double theta = -2.0;
        JacobiMatrix lu = lu_darboux(cheb, theta);
        ThreeTermRecurrence rec;
        for (int k = 0; k < m; ++k) {
            rec.b.push_back(Rational(0));
            rec.u.push_back(k == 0 ? Rational(0) : Rational(1, 4));
        }
        ChristoffelResult cr = christoffel(rec, Rational(-2));
        for (int k = 0; k + 1 < m; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            expect(std::abs(lu.diag(k) - cr.transformed.b[i].to_double()) < 1e-12,
                   "LU diagonal != kernel-step diagonal");
            if (k + 2 < m)
                expect(std::abs(lu.off(k) * lu.off(k) - cr.transformed.u[i + 1].to_double()) < 1e-12,
                       "LU off-diagonal^2 != kernel-step u");
        }
        result.pass = true;
        result.detail = "spectra preserved, eigenvectors intertwined, LU route matches the exact kernel step";
    } catch (const IdentityViolation& e) {
        result.pass = false;
        result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SuiteResult suite_quad_algebra(std::uint64_t seed, int n) {
    SuiteResult result;
    result.name = "quad-algebra";
    result.trials = 2;
    auto start = std::chrono::steady_clock::now();
    try {
        RationalSampler sampler(seed);
        ReflectionSequence seq = ReflectionSequence::from_list(draw_reflection_list(sampler, n, true));
        auto [l, m] = build_lm(seq, n);
        QuadAlgebraReport lm = quad_algebra_solve(l.mat, m.mat);
        expect(lm.solutions.size() >= 2, "nullspace dimension < 2 for (L, M)");
        for (const auto& sol : lm.solutions)
            expect(sol.residual < 1e-10, "quadratic relation residual >= 1e-10");

        // the two involution relations must lie in the returned span
        Eigen::MatrixXd basis(7, static_cast<Eigen::Index>(lm.solutions.size()));
        for (std::size_t i = 0; i < lm.solutions.size(); ++i) {
            auto c = lm.solutions[i].coeffs();
            for (int k = 0; k < 7; ++k) basis(k, static_cast<Eigen::Index>(i)) = c[static_cast<std::size_t>(k)];
        }
        Eigen::MatrixXd proj = basis * basis.transpose();
        for (int which = 0; which < 2; ++which) {
            Eigen::VectorXd target = Eigen::VectorXd::Zero(7);
            target(which) = 1.0 / std::sqrt(2.0);
            target(6) = -1.0 / std::sqrt(2.0);
            expect((proj * target - target).norm() < 1e-6,
                   which == 0 ? "L^2 = I relation missing from nullspace"
                              : "M^2 = I relation missing from nullspace");
        }

        // two independent random Jacobi matrices carry no relation
        auto random_jacobi = [&](int dim) {
            Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
            for (int k = 0; k < dim; ++k) mat(k, k) = sampler.uniform(-1.0, 1.0);
            for (int k = 0; k + 1 < dim; ++k) {
                double v = sampler.uniform(0.2, 1.0);
                mat(k, k + 1) = v;
                mat(k + 1, k) = v;
            }
            return mat;
        };
        QuadAlgebraReport none = quad_algebra_solve(random_jacobi(n), random_jacobi(n));
        expect(none.solutions.empty(), "random Jacobi pair unexpectedly satisfies a relation");
        expect(none.singular_values[6] > 1e-6, "smallest singular value <= 1e-6 for random pair");

        result.pass = true;
        result.detail = "involution relations recovered; random pair relation-free";
    } catch (const IdentityViolation& e) {
        result.pass = false;
        result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SuiteResult suite_chain_report(std::uint64_t seed, int triples, int n) {
    SuiteResult result;
    result.name = "chain-step-report";
    result.trials = triples;
    auto start = std::chrono::steady_clock::now();
    try {
        RationalSampler sampler(seed);
        for (int t = 0; t < triples; ++t) {
            ReflectionSequence seq = ReflectionSequence::from_list(draw_reflection_list(sampler, n, true));
            double lambda = sampler.uniform(0.25, 2.0) * (sampler.rng()() % 2 ? 1.0 : -1.0);
            double x = sampler.uniform(-2.0, 2.0);
            double lambda_t = t == 0 ? lambda : sampler.uniform(-2.0, 2.0);
            ChainStepReport report = chain_step(seq, lambda, x, lambda_t, n);
            bool has_trivial = false;
            for (const auto& sol : report.solutions)
                if (sol.trivial && sol.residual < 1e-10) has_trivial = true;
            expect(has_trivial, "no trivial-family solution below 1e-10 at triple " + std::to_string(t));
        }
        result.pass = true;
        result.detail = "reports generated; trivial family reproduced below 1e-10";
    } catch (const IdentityViolation& e) {
        result.pass = false;
        result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<SuiteResult> bi_chain_suites(std::uint64_t seed, int trials, int depth, int bound) {
    return {suite_bi_reflection_consistency(seed, trials, depth, bound),
            suite_companion_identity(seed + 1, trials, depth, bound),
            suite_sdg_structure(seed + 2, trials, std::min(depth, 30), bound),
            suite_seed_identity(seed + 3, trials, bound),
            suite_sdg_closure(seed + 4, trials, std::min(depth, 30), bound),
            suite_q_identification(seed + 5, trials, depth, bound)};
}

} // namespace opdc
