#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "opdc/cmv.hpp"
#include "opdc/dressing.hpp"
#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/transforms.hpp"

namespace py = pybind11;
using namespace opdc;

namespace {

std::vector<Rational> rats(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

ReflectionSequence sequence(const std::vector<std::string>& a) {
    return ReflectionSequence::from_list(rats(a));
}

BIParameters bi_params(const std::string& rho1, const std::string& rho2, const std::string& r1,
                       const std::string& r2) {
    return BIParameters{Rational::parse(rho1), Rational::parse(rho2), Rational::parse(r1),
                        Rational::parse(r2)};
}

RWParameters rw_params(const std::string& b1, const std::string& b2, const std::string& b3,
                       const std::string& b4) {
    return RWParameters{Rational::parse(b1), Rational::parse(b2), Rational::parse(b3),
                        Rational::parse(b4)};
}

py::list dense_to_list(const Eigen::MatrixXd& m) {
    py::list rows;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        py::list row;
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

py::list vector_to_list(const Eigen::VectorXd& v) {
    py::list out;
    for (Eigen::Index i = 0; i < v.size(); ++i) out.append(v(i));
    return out;
}

Eigen::MatrixXd dense_from_list(const std::vector<std::vector<double>>& rows) {
    Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

JacobiMatrix jacobi_from(const std::vector<double>& diag, const std::vector<double>& off) {
    JacobiMatrix j;
    j.n = static_cast<int>(diag.size());
    j.diag = Eigen::Map<const Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(diag.size()));
    j.off = Eigen::Map<const Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(off.size()));
    return j;
}

py::dict recurrence_dict(const ThreeTermRecurrence& rec) {
    py::dict d;
    d["b"] = strs(rec.b);
    d["u"] = strs(rec.u);
    return d;
}

} // namespace

PYBIND11_MODULE(_opdc, m) {
    m.doc() = "exact spectral transformations for orthogonal polynomials on the unit circle, "
              "Bannai-Ito / Racah-Wilson coefficient families, and dressing-chain verification";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<PoleInParameters>(m, "PoleInParameters", base);
    py::register_exception<IdentityViolation>(m, "IdentityViolation", base);
    py::register_exception<DegenerateReflection>(m, "DegenerateReflection", base);
    py::register_exception<ZeroAtTheta>(m, "ZeroAtTheta", base);

    m.def(
        "szego_polynomials",
        [](const std::vector<std::string>& a, int n) {
            SzegoPair pair = szego_polynomials(sequence(a), n);
            py::dict d;
            d["n"] = pair.n;
            d["phi"] = strs(pair.phi.coeffs());
            d["phi_star"] = strs(pair.phi_star.coeffs());
            return d;
        },
        py::arg("a"), py::arg("n"), "monic Szego pair; coefficient lists are ascending-degree fractions");

    m.def(
        "classify",
        [](const std::vector<std::string>& a, int n) {
            Classification c = classify(sequence(a), n);
            py::dict d;
            d["epsilon"] = c.epsilon;
            d["rsq"] = strs(c.rsq);
            d["classical"] = c.classical;
            d["degenerate"] = c.degenerate;
            return d;
        },
        py::arg("a"), py::arg("n"));

    m.def(
        "pencil_recurrence",
        [](const std::vector<std::string>& a, const std::string& lambda, int n) {
            PencilRecurrence rec = pencil_recurrence(sequence(a), Rational::parse(lambda), n);
            py::dict d;
            d["lambda"] = rec.lambda.str();
            d["b"] = strs(rec.b);
            d["u"] = strs(rec.u);
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("n"));

    m.def(
        "build_lm",
        [](const std::vector<std::string>& a, int n) {
            auto [l, mm] = build_lm(sequence(a), n);
            return py::make_tuple(dense_to_list(l.mat), dense_to_list(mm.mat));
        },
        py::arg("a"), py::arg("n"));

    m.def(
        "build_cmv",
        [](const std::vector<std::string>& a, int n) { return dense_to_list(build_cmv(sequence(a), n)); },
        py::arg("a"), py::arg("n"));

    m.def(
        "build_pencil_matrix",
        [](const std::vector<std::string>& a, double lambda, double x, int n) {
            TridiagonalMatrix t = build_pencil_matrix(sequence(a), lambda, x, n);
            py::dict d;
            d["n"] = t.n;
            d["diag"] = vector_to_list(t.diag);
            d["super"] = vector_to_list(t.super);
            d["sub"] = vector_to_list(t.sub);
            d["interior_margin"] = t.interior_margin;
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("x"), py::arg("n"));

    m.def(
        "christoffel",
        [](const std::vector<std::string>& b, const std::vector<std::string>& u, const std::string& theta) {
            ThreeTermRecurrence rec;
            rec.b = rats(b);
            rec.u = rats(u);
            ChristoffelResult cr = christoffel(rec, Rational::parse(theta));
            py::dict d;
            d["theta"] = cr.theta.str();
            d["A"] = strs(cr.A);
            d["C"] = strs(cr.C);
            d["transformed"] = recurrence_dict(cr.transformed);
            return d;
        },
        py::arg("b"), py::arg("u"), py::arg("theta"));

    m.def(
        "geronimus_roundtrip",
        [](const std::vector<std::string>& b, const std::vector<std::string>& u, const std::string& theta) {
            ThreeTermRecurrence rec;
            rec.b = rats(b);
            rec.u = rats(u);
            return recurrence_dict(geronimus_reconstruct(christoffel(rec, Rational::parse(theta))));
        },
        py::arg("b"), py::arg("u"), py::arg("theta"));

    m.def(
        "sdg_step",
        [](const std::vector<std::string>& a, const std::string& lambda, int n) {
            SDGResult sdg = sdg_step(sequence(a), Rational::parse(lambda), n);
            py::dict d;
            d["lambda"] = sdg.lambda.str();
            d["ustar"] = strs(sdg.ustar);
            d["A"] = strs(sdg.A);
            d["C"] = strs(sdg.C);
            d["unif"] = recurrence_dict(sdg.unif);
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("n"));

    m.def(
        "rescale",
        [](const std::vector<std::string>& a, const std::string& lambda, const std::string& sqrt_lambda,
           const std::string& lambda0, int n) {
            Rational lam = Rational::parse(lambda), lam0 = Rational::parse(lambda0);
            SDGResult sdg = sdg_step(sequence(a), lam * lam0, n);
            RescaleResult res = rescale(sdg, lam, Rational::parse(sqrt_lambda), lam0);
            py::dict d;
            d["chi"] = res.chi.str();
            d["s"] = recurrence_dict(res.s_rec);
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("sqrt_lambda"), py::arg("lambda0"), py::arg("n"));

    m.def(
        "chihara_split",
        [](const std::vector<std::string>& A, const std::vector<std::string>& C, const std::string& chi,
           int n) { return recurrence_dict(chihara_split(rats(A), rats(C), Rational::parse(chi), n)); },
        py::arg("A"), py::arg("C"), py::arg("chi"), py::arg("n"));

    m.def(
        "chihara_polynomial_check",
        [](const std::vector<std::string>& A, const std::vector<std::string>& C, const std::string& alpha,
           const std::string& c2, const std::string& chi, int depth) {
            Rational chi_r = Rational::parse(chi), alpha_r = Rational::parse(alpha),
                     c2_r = Rational::parse(c2);
            ACForm form{rats(A), rats(C), chi_r * chi_r + alpha_r - c2_r};
            ThreeTermRecurrence p_rec = ThreeTermRecurrence::from_ac(form);
            ChristoffelResult cr = christoffel(p_rec, form.theta);
            ChiharaCheckReport report =
                chihara_polynomial_check(p_rec, cr.transformed, alpha_r, c2_r, chi_r, depth);
            py::dict d;
            d["pass"] = report.pass;
            d["depth"] = report.depth;
            d["first_fail"] = report.first_fail;
            d["detail"] = report.detail;
            return d;
        },
        py::arg("A"), py::arg("C"), py::arg("alpha"), py::arg("c2"), py::arg("chi"), py::arg("depth"));

    m.def(
        "bi_coeffs",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2,
           int n) {
            BICoeffs c = bi_coeffs(bi_params(rho1, rho2, r1, r2), n);
            py::dict d;
            d["A"] = strs(c.A);
            d["C"] = strs(c.C);
            d["rec"] = recurrence_dict(c.rec);
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n"));

    m.def(
        "cbi_coeffs",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2,
           int n) {
            CBICoeffs c = cbi_coeffs(bi_params(rho1, rho2, r1, r2), n);
            py::dict d;
            d["v"] = strs(c.v);
            d["rec"] = recurrence_dict(c.rec);
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n"));

    m.def(
        "bi_seed",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2) {
            BISeed s = bi_seed(bi_params(rho1, rho2, r1, r2));
            py::dict d;
            d["a0"] = s.a0.str();
            d["lambda0"] = s.lambda0.str();
            d["lambda_bi"] = s.lambda_bi.str();
            d["sqrt_lambda_bi"] = s.sqrt_lambda_bi.str();
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"));

    m.def(
        "bi_reflection",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2,
           int n, const std::string& mode) {
            ReflectionMode rm = mode == "recursive" ? ReflectionMode::Recursive : ReflectionMode::ClosedForm;
            return strs(bi_reflection(bi_params(rho1, rho2, r1, r2), n, rm));
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n"),
        py::arg("mode") = "closed_form");

    m.def(
        "bi_q_reflection",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2,
           int n) { return strs(bi_q_reflection(bi_params(rho1, rho2, r1, r2), n)); },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n"));

    m.def(
        "rw_coeffs",
        [](const std::string& b1, const std::string& b2, const std::string& b3, const std::string& b4,
           int n) {
            RWCoeffs c = rw_coeffs(rw_params(b1, b2, b3, b4), n);
            py::dict d;
            d["A"] = strs(c.A);
            d["C"] = strs(c.C);
            return d;
        },
        py::arg("beta1"), py::arg("beta2"), py::arg("beta3"), py::arg("beta4"), py::arg("n"));

    m.def(
        "beta_map",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2) {
            RWParameters b = beta_map(bi_params(rho1, rho2, r1, r2));
            py::dict d;
            d["beta1"] = b.beta1.str();
            d["beta2"] = b.beta2.str();
            d["beta3"] = b.beta3.str();
            d["beta4"] = b.beta4.str();
            d["sigma"] = b.sigma().str();
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"));

    m.def(
        "rw_reflection",
        [](const std::string& b1, const std::string& b2, const std::string& b3, const std::string& b4,
           int n) { return strs(rw_reflection(rw_params(b1, b2, b3, b4), n)); },
        py::arg("beta1"), py::arg("beta2"), py::arg("beta3"), py::arg("beta4"), py::arg("n"));

    m.def(
        "subs1",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2) {
            BIParameters s = subs1(bi_params(rho1, rho2, r1, r2));
            py::dict d;
            d["rho1"] = s.rho1.str();
            d["rho2"] = s.rho2.str();
            d["r1"] = s.r1.str();
            d["r2"] = s.r2.str();
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"));

    m.def(
        "bi_identify_q",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1, const std::string& r2,
           int n) {
            IdentifyQReport r = bi_identify_q(bi_params(rho1, rho2, r1, r2), n);
            py::dict d;
            d["lambda"] = r.lambda.str();
            d["n"] = r.n;
            d["pass"] = r.pass;
            return d;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n"));

    m.def(
        "cholesky_darboux",
        [](const std::vector<double>& diag, const std::vector<double>& off) {
            CholeskyDarbouxResult res = cholesky_darboux(jacobi_from(diag, off));
            py::dict d;
            d["diag"] = vector_to_list(res.jt.diag);
            d["off"] = vector_to_list(res.jt.off);
            d["chol_diag"] = vector_to_list(res.chol_diag);
            d["chol_sub"] = vector_to_list(res.chol_sub);
            d["eigenvalues"] = res.jt.eigenvalues();
            return d;
        },
        py::arg("diag"), py::arg("off"));

    m.def(
        "lu_darboux",
        [](const std::vector<double>& diag, const std::vector<double>& off, double theta) {
            JacobiMatrix jt = lu_darboux(jacobi_from(diag, off), theta);
            py::dict d;
            d["diag"] = vector_to_list(jt.diag);
            d["off"] = vector_to_list(jt.off);
            return d;
        },
        py::arg("diag"), py::arg("off"), py::arg("theta"));

    m.def(
        "quad_algebra_solve",
        [](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
            QuadAlgebraReport report = quad_algebra_solve(dense_from_list(a), dense_from_list(b));
            py::list sols;
            for (const auto& s : report.solutions) {
                py::dict e;
                e["xi"] = std::vector<double>{s.xi1, s.xi2, s.xi3, s.xi4};
                e["eta"] = std::vector<double>{s.eta1, s.eta2};
                e["zeta"] = s.zeta;
                e["residual"] = s.residual;
                sols.append(e);
            }
            py::dict d;
            d["solutions"] = sols;
            d["singular_values"] = report.singular_values;
            d["threshold"] = report.threshold;
            return d;
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "chain_step",
        [](const std::vector<std::string>& a, double lambda, double x, double lambda_t, int n) {
            ChainStepReport report = chain_step(sequence(a), lambda, x, lambda_t, n);
            py::list sols;
            for (const auto& s : report.solutions) {
                py::dict e;
                e["lambda_t"] = s.lambda_t;
                e["x_t"] = s.x_t;
                e["r"] = std::vector<double>{s.r0, s.r1, s.r2};
                e["s"] = std::vector<double>{s.s0, s.s1, s.s2};
                e["residual"] = s.residual;
                e["trivial"] = s.trivial;
                sols.append(e);
            }
            py::dict d;
            d["solutions"] = sols;
            d["quadratic_discriminant"] = report.quad_disc;
            d["quadratic_roots"] = report.quad_roots;
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("x"), py::arg("lambda_t"), py::arg("n"));

    m.def(
        "verify_identities",
        [](const std::vector<std::string>& a, double lambda, double lambda0, int n) {
            IdentityReport report = verify_identities(sequence(a), lambda, lambda0, n);
            py::list checks;
            for (const auto& c : report.checks) {
                py::dict e;
                e["identity"] = c.name;
                e["n"] = c.n;
                e["interior"] = c.interior;
                e["max_residual"] = c.max_residual;
                e["tolerance"] = c.tolerance;
                e["pass"] = c.pass;
                e["informational"] = c.informational;
                checks.append(e);
            }
            py::dict d;
            d["checks"] = checks;
            d["all_pass"] = report.all_pass;
            return d;
        },
        py::arg("a"), py::arg("lambda_"), py::arg("lambda0"), py::arg("n"));

    m.def(
        "monic_tridiag_eigenvalues",
        [](const std::vector<double>& b, const std::vector<double>& u) {
            double max_imag = 0;
            std::vector<double> ev = monic_tridiag_eigenvalues(b, u, &max_imag);
            return py::make_tuple(ev, max_imag);
        },
        py::arg("b"), py::arg("u"));
}
