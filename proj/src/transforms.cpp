#include "opdc/transforms.hpp"

#include "opdc/cmv.hpp"
#include "opdc/errors.hpp"

namespace opdc {

std::vector<Polynomial> ThreeTermRecurrence::polynomials(int count) const {
    if (count > depth())
        throw OutOfRange("recurrence depth " + std::to_string(depth()) + " cannot generate P_" +
                         std::to_string(count));
    std::vector<Polynomial> p;
    p.reserve(static_cast<std::size_t>(count) + 1);
    p.push_back(Polynomial(Rational(1)));
    for (int k = 0; k < count; ++k) {
        // P_{k+1} = (x - b_k) P_k - u_k P_{k-1}
        Polynomial next = p[static_cast<std::size_t>(k)].shifted_up(1) -
                          p[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        if (k > 0) next = next - p[static_cast<std::size_t>(k) - 1] * u[static_cast<std::size_t>(k)];
        p.push_back(std::move(next));
    }
    return p;
}

ThreeTermRecurrence ThreeTermRecurrence::from_ac(ACForm form) {
    if (!form.C.empty() && !form.C.front().is_zero())
        throw IdentityViolation("AC-form requires C_0 = 0");
    ThreeTermRecurrence rec;
    std::size_t n = std::min(form.A.size(), form.C.size());
    rec.b.reserve(n);
    rec.u.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        rec.b.push_back(form.theta - form.A[k] - form.C[k]);
        rec.u.push_back(k == 0 ? Rational(0) : form.C[k] * form.A[k - 1]);
    }
    rec.ac = std::move(form);
    return rec;
}

ThreeTermRecurrence recurrence_from_polynomials(const std::vector<Polynomial>& p) {
    ThreeTermRecurrence rec;
    if (p.empty()) return rec;
    for (std::size_t n = 0; n + 1 < p.size(); ++n) {
        // x P_n - P_{n+1} = b_n P_n + u_n P_{n-1}
        Polynomial r = p[n].shifted_up(1) - p[n + 1];
        Rational bn = r.coeff(static_cast<int>(n));
        Polynomial s = r - p[n] * bn;
        Rational un = n == 0 ? Rational(0) : s.coeff(static_cast<int>(n) - 1);
        Polynomial resid = n == 0 ? s : s - p[n - 1] * un;
        if (!resid.is_zero())
            throw IdentityViolation("polynomials do not satisfy a three-term recurrence at n = " +
                                    std::to_string(n));
        rec.b.push_back(bn);
        rec.u.push_back(un);
    }
    return rec;
}

ThreeTermRecurrence to_recurrence(const PencilRecurrence& rec) {
    ThreeTermRecurrence out;
    out.b = rec.b;
    out.u = rec.u;
    return out;
}

ChristoffelResult christoffel(const ThreeTermRecurrence& rec, const Rational& theta, int check_depth) {
    const int n = rec.depth();
    if (n == 0) throw OutOfRange("christoffel on empty recurrence");
    ChristoffelResult res;
    res.theta = theta;
    res.A.reserve(static_cast<std::size_t>(n));
    res.C.reserve(static_cast<std::size_t>(n));
    res.A.push_back(theta - rec.b[0]);
    res.C.push_back(Rational(0));
    if (res.A[0].is_zero()) throw ZeroAtTheta("A_0 = 0: P_1(theta) = 0 at theta = " + theta.str());
    for (int k = 1; k < n; ++k) {
        Rational ck = rec.u[static_cast<std::size_t>(k)] / res.A[static_cast<std::size_t>(k) - 1];
        Rational ak = theta - rec.b[static_cast<std::size_t>(k)] - ck;
        if (ak.is_zero())
            throw ZeroAtTheta("A_" + std::to_string(k) + " = 0: P_" + std::to_string(k + 1) +
                              "(theta) = 0 at theta = " + theta.str());
        res.C.push_back(std::move(ck));
        res.A.push_back(std::move(ak));
    }

    // independent cross-check of A_n = P_{n+1}(theta) / P_n(theta)
    int d = std::min(check_depth, n - 1);
    if (d >= 0) {
        auto p = rec.polynomials(d + 1);
        for (int k = 0; k <= d; ++k) {
            Rational num = p[static_cast<std::size_t>(k) + 1].eval(theta);
            Rational den = p[static_cast<std::size_t>(k)].eval(theta);
            if (num != res.A[static_cast<std::size_t>(k)] * den)
                throw IdentityViolation("A_n != P_{n+1}(theta)/P_n(theta) at n = " + std::to_string(k));
        }
    }

    ThreeTermRecurrence t;
    t.b.reserve(static_cast<std::size_t>(n) - 1);
    t.u.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 0; k + 1 < n; ++k) {
        t.b.push_back(theta - res.A[static_cast<std::size_t>(k)] - res.C[static_cast<std::size_t>(k) + 1]);
        t.u.push_back(k == 0 ? Rational(0)
                             : res.C[static_cast<std::size_t>(k)] * res.A[static_cast<std::size_t>(k)]);
    }
    res.transformed = std::move(t);
    return res;
}

ThreeTermRecurrence geronimus_reconstruct(const ChristoffelResult& result) {
    const int m = result.transformed.depth(); // tP_0 .. tP_m available
    auto tp = result.transformed.polynomials(m);
    std::vector<Polynomial> p;
    p.reserve(tp.size());
    for (std::size_t k = 0; k < tp.size(); ++k) {
        Polynomial pk = tp[k];
        if (k > 0) pk = pk - tp[k - 1] * result.C[k];
        p.push_back(std::move(pk));
    }
    return recurrence_from_polynomials(p);
}

SDGResult sdg_step(const ReflectionSequence& seq, const Rational& lambda, int n) {
    if (lambda.is_zero()) throw ZeroAtTheta("sdg_step requires lambda != 0: odd kernel factors vanish");
    SDGResult res;
    res.lambda = lambda;
    const Rational one(1);
    for (int k = 0; k < n; ++k) {
        Rational ak = seq.a(k);
        Rational prev = seq.a(k - 1);
        if (ak == one)
            throw ZeroAtTheta("a_" + std::to_string(k) + " = 1: kernel factor 1 - a_n vanishes");
        if (k >= 1 && prev == -one)
            throw ZeroAtTheta("a_" + std::to_string(k - 1) + " = -1: kernel factor 1 + a_{n-1} vanishes");
        res.A.push_back(k % 2 == 0 ? one - ak : lambda * (one - ak));
        res.C.push_back(k % 2 == 0 ? lambda * (one + prev) : one + prev);
        res.ustar.push_back((one + prev) * (one - ak));
    }

    // the generic kernel step at theta = lambda + 1 must reproduce the
    // closed forms
    ChristoffelResult generic = christoffel(to_recurrence(pencil_recurrence(seq, lambda, n)), lambda + one);
    if (generic.A != res.A || generic.C != res.C)
        throw IdentityViolation("closed-form A_n/C_n disagree with the generic kernel step");

    ThreeTermRecurrence unif;
    for (int k = 0; k < n; ++k) {
        unif.b.push_back(k % 2 == 0 ? lambda - one : one - lambda);
        unif.u.push_back(lambda * res.ustar[static_cast<std::size_t>(k)]);
    }
    res.unif = std::move(unif);
    return res;
}

RescaleResult rescale(const SDGResult& sdg, const Rational& lambda, const Rational& sqrt_lambda,
                      const Rational& lambda0) {
    if (sqrt_lambda.is_zero()) throw ZeroSqrt("rescale requires sqrt_lambda != 0");
    if (sqrt_lambda * sqrt_lambda != lambda)
        throw NotAPerfectSquare("(" + sqrt_lambda.str() + ")^2 != " + lambda.str());
    RescaleResult res;
    res.chi = lambda0 * sqrt_lambda - sqrt_lambda.inv();
    for (std::size_t k = 0; k < sdg.ustar.size(); ++k) {
        res.s_rec.b.push_back(k % 2 == 0 ? res.chi : -res.chi);
        res.s_rec.u.push_back(lambda0 * sdg.ustar[k]);
    }
    return res;
}

ThreeTermRecurrence chihara_split(const std::vector<Rational>& A, const std::vector<Rational>& C,
                                  const Rational& chi, int n) {
    ThreeTermRecurrence rec;
    for (int j = 0; j < n; ++j) {
        std::size_t half = static_cast<std::size_t>(j / 2);
        const auto& src = (j % 2 == 0) ? C : A;
        if (half >= src.size())
            throw OutOfRange("chihara_split needs A, C up to index " + std::to_string(half));
        rec.b.push_back(j % 2 == 0 ? chi : -chi);
        rec.u.push_back(-src[half]);
    }
    return rec;
}

ChiharaCheckReport chihara_polynomial_check(const ThreeTermRecurrence& p_rec,
                                            const ThreeTermRecurrence& tp_rec, const Rational& alpha,
                                            const Rational& c2, const Rational& chi, int depth) {
    if (!p_rec.ac) throw InconsistentTheta("p_rec carries no AC-form");
    Rational theta = chi * chi + alpha - c2;
    if (p_rec.ac->theta != theta)
        throw InconsistentTheta("AC theta " + p_rec.ac->theta.str() + " != chi^2 + alpha - c2 = " +
                                theta.str());

    ChiharaCheckReport report;
    report.depth = depth;

    ThreeTermRecurrence s = chihara_split(p_rec.ac->A, p_rec.ac->C, chi, 2 * depth + 1);
    auto s_polys = s.polynomials(2 * depth + 1);
    auto p_polys = p_rec.polynomials(depth);
    auto tp_polys = tp_rec.polynomials(depth);

    // inner substitution x^2 + alpha - c2
    Polynomial quad = Polynomial::from_coeffs({alpha - c2, Rational(0), Rational(1)});
    Polynomial x_minus_chi = Polynomial::from_coeffs({-chi, Rational(1)});

    for (int k = 0; k <= depth; ++k) {
        if (s_polys[static_cast<std::size_t>(2 * k)] != p_polys[static_cast<std::size_t>(k)].compose(quad)) {
            report.pass = false;
            report.first_fail = 2 * k;
            report.detail = "S_{2n} != P_n(x^2 + alpha - c^2) at n = " + std::to_string(k);
            return report;
        }
        if (2 * k + 1 <= 2 * depth + 1 && k < static_cast<int>(tp_polys.size())) {
            Polynomial rhs = x_minus_chi * tp_polys[static_cast<std::size_t>(k)].compose(quad);
            if (s_polys[static_cast<std::size_t>(2 * k + 1)] != rhs) {
                report.pass = false;
                report.first_fail = 2 * k + 1;
                report.detail = "S_{2n+1} != (x - chi) tP_n(x^2 + alpha - c^2) at n = " + std::to_string(k);
                return report;
            }
        }
    }
    return report;
}

} // namespace opdc
