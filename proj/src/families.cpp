#include "opdc/families.hpp"

#include "opdc/cmv.hpp"
#include "opdc/errors.hpp"

namespace opdc {

namespace {

const Rational kHalf(1, 2);

void require_nonzero(const Rational& factor, const std::string& what) {
    if (factor.is_zero()) throw PoleInParameters("vanishing factor " + what);
}

Rational bi_a_denominator(const BIParameters& p, int k) {
    Rational g = p.g();
    Rational branch = (k % 2 == 0) ? -p.rho2 - p.r2 - kHalf : p.rho2 - p.r2 - kHalf;
    require_nonzero(branch, (k % 2 == 0 ? "(-rho2 - r2 - 1/2)" : "(rho2 - r2 - 1/2)"));
    Rational shift = Rational(k) + g + Rational(1);
    require_nonzero(shift, "(n + g + 1) at n = " + std::to_string(k));
    return branch * shift;
}

} // namespace

BICoeffs bi_coeffs(const BIParameters& p, int n) {
    Rational g = p.g();
    for (int k = 0; k < n; ++k) {
        require_nonzero(Rational(k + 1) + g, "(n + 1 + g) at n = " + std::to_string(k));
        require_nonzero(Rational(k) + g, "(n + g) at n = " + std::to_string(k));
    }
    BICoeffs out;
    for (int k = 0; k < n; ++k) {
        Rational kk(k);
        Rational den_a = Rational(4) * (Rational(k + 1) + g);
        Rational den_c = Rational(4) * (kk + g);
        if (k % 2 == 0) {
            out.A.push_back((Rational(k + 1) + Rational(2) * (p.rho1 - p.r1)) *
                            (Rational(k + 1) + Rational(2) * (p.rho1 - p.r2)) / den_a);
            out.C.push_back(-(kk * (kk - Rational(2) * (p.r1 + p.r2))) / den_c);
        } else {
            out.A.push_back((Rational(k + 1) + Rational(2) * g) *
                            (Rational(k + 1) + Rational(2) * (p.rho1 + p.rho2)) / den_a);
            out.C.push_back(-((kk + Rational(2) * (p.rho2 - p.r2)) * (kk + Rational(2) * (p.rho2 - p.r1))) /
                            den_c);
        }
    }
    out.rec = ThreeTermRecurrence::from_ac(ACForm{out.A, out.C, p.rho1});
    return out;
}

CBICoeffs cbi_coeffs(const BIParameters& p, int n) {
    Rational g = p.g();
    CBICoeffs out;
    for (int j = 0; j < n; ++j) {
        int m = j / 2;
        Rational mm(m);
        Rational v;
        if (j % 2 == 0) {
            Rational d1 = Rational(2 * m + 1) + g;
            Rational d2 = Rational(2 * m) + g;
            require_nonzero(d1, "(2n + 1 + g) at n = " + std::to_string(m));
            require_nonzero(d2, "(2n + g) at n = " + std::to_string(m));
            v = -(mm * (mm + p.rho1 - p.r1 + kHalf) * (mm + p.rho1 - p.r2 + kHalf) * (mm - p.r1 - p.r2)) /
                (d1 * d2);
        } else {
            Rational d1 = Rational(2 * m + 1) + g;
            Rational d2 = Rational(2 * m + 2) + g;
            require_nonzero(d1, "(2n + 1 + g) at n = " + std::to_string(m));
            require_nonzero(d2, "(2n + g + 2) at n = " + std::to_string(m));
            v = -((mm + g + Rational(1)) * (mm + p.rho1 + p.rho2 + Rational(1)) *
                  (mm + p.rho2 - p.r1 + kHalf) * (mm + p.rho2 - p.r2 + kHalf)) /
                (d1 * d2);
        }
        out.v.push_back(std::move(v));
        out.rec.b.push_back(j % 2 == 0 ? p.rho2 : -p.rho2);
        out.rec.u.push_back(out.v.back());
    }
    return out;
}

BISeed bi_seed(const BIParameters& p) {
    Rational g = p.g();
    Rational f1 = -p.rho2 - p.r2 - kHalf;
    Rational f2 = p.rho2 - p.r2 - kHalf;
    require_nonzero(f1, "(-rho2 - r2 - 1/2)");
    require_nonzero(f2, "(rho2 - r2 - 1/2)");
    require_nonzero(g + Rational(1), "(g + 1)");
    BISeed seed;
    seed.a0 = Rational(1) -
              Rational(2) * (p.rho1 - p.r2 + kHalf) * (-p.r1 - p.r2) / (f1 * (g + Rational(1)));
    seed.lambda0 = f1 * f2 / Rational(4);
    seed.lambda_bi = Rational(4) / (f1 * f1);
    seed.sqrt_lambda_bi = Rational(2) / f1;
    if (seed.lambda0 * seed.sqrt_lambda_bi - seed.sqrt_lambda_bi.inv() != p.rho2)
        throw IdentityViolation("seed identity lambda0 s - 1/s = rho2 failed");
    return seed;
}

namespace {

Rational bi_reflection_at(const BIParameters& p, int k) {
    Rational g = p.g();
    Rational den = bi_a_denominator(p, k);
    Rational num = (k % 2 == 0)
                       ? (p.rho1 - p.r2 + Rational(k + 1, 2)) * (-p.r1 - p.r2 + Rational(k, 2))
                       : (g + Rational(k + 1, 2)) * (p.rho2 - p.r2 + Rational(k, 2));
    return Rational(1) - Rational(2) * num / den;
}

Rational bi_q_reflection_at(const BIParameters& p, int k) {
    Rational g = p.g();
    Rational branch = (k % 2 == 0) ? p.rho2 - p.rho1 : p.rho1 + p.rho2;
    require_nonzero(branch, k % 2 == 0 ? "(rho2 - rho1)" : "(rho1 + rho2)");
    Rational shift = Rational(k) + g + Rational(1);
    require_nonzero(shift, "(n + g + 1) at n = " + std::to_string(k));
    Rational num = (k % 2 == 0)
                       ? (p.rho2 - p.r2 + Rational(k + 1, 2)) * (p.rho2 - p.r1 + Rational(k + 1, 2))
                       : (g + Rational(k + 1, 2)) * (p.rho1 + p.rho2 + Rational(k + 1, 2));
    return Rational(1) - Rational(2) * num / (branch * shift);
}

Rational rw_reflection_at(const RWParameters& p, int k) {
    Rational sigma = p.sigma();
    Rational even_den = p.beta4 - p.beta1 - Rational(1);
    Rational odd_den = p.beta1 + p.beta4 - Rational(1);
    require_nonzero(even_den, "(beta4 - beta1 - 1)");
    require_nonzero(odd_den, "(beta1 + beta4 - 1)");
    Rational shift = Rational(k) + sigma - Rational(1);
    require_nonzero(shift, "(n + sigma - 1) at n = " + std::to_string(k));
    if (k % 2 == 0) {
        Rational num = (p.beta2 + p.beta4 + Rational(k, 2) - Rational(1)) *
                       (p.beta3 + p.beta4 + Rational(k, 2) - Rational(1));
        return Rational(1) - Rational(2) * num / (even_den * shift);
    }
    Rational num = (sigma + Rational(k, 2) - Rational(3, 2)) *
                   (p.beta1 + p.beta4 + Rational(k, 2) - kHalf);
    return Rational(1) - Rational(2) * num / (odd_den * shift);
}

} // namespace

std::vector<Rational> bi_reflection(const BIParameters& p, int n, ReflectionMode mode) {
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n));
    if (mode == ReflectionMode::ClosedForm) {
        for (int k = 0; k < n; ++k) a.push_back(bi_reflection_at(p, k));
        return a;
    }
    BISeed seed = bi_seed(p);
    if (n == 0) return a;
    CBICoeffs cbi = cbi_coeffs(p, n);
    a.push_back(seed.a0);
    for (int k = 1; k < n; ++k) {
        Rational den = seed.lambda0 * (Rational(1) + a.back());
        if (den.is_zero())
            throw DegenerateRecursion("1 + a_" + std::to_string(k - 1) + " = 0 in the reflection recursion");
        a.push_back(Rational(1) - cbi.v[static_cast<std::size_t>(k)] / den);
    }
    return a;
}

RWCoeffs rw_coeffs(const RWParameters& p, int n) {
    Rational sigma = p.sigma();
    for (int k = 0; k < n; ++k) {
        require_nonzero(Rational(2 * k) + sigma - Rational(1), "(2n + sigma - 1) at n = " + std::to_string(k));
        require_nonzero(Rational(2 * k) + sigma, "(2n + sigma) at n = " + std::to_string(k));
        require_nonzero(Rational(2 * k) + sigma - Rational(2), "(2n + sigma - 2) at n = " + std::to_string(k));
    }
    RWCoeffs out;
    for (int k = 0; k < n; ++k) {
        Rational kk(k);
        out.A.push_back((kk + sigma - Rational(1)) * (kk + p.beta1 + p.beta2) * (kk + p.beta1 + p.beta3) *
                        (kk + p.beta1 + p.beta4) /
                        ((Rational(2 * k) + sigma - Rational(1)) * (Rational(2 * k) + sigma)));
        out.C.push_back(kk * (kk + p.beta2 + p.beta3 - Rational(1)) * (kk + p.beta2 + p.beta4 - Rational(1)) *
                        (kk + p.beta3 + p.beta4 - Rational(1)) /
                        ((Rational(2 * k) + sigma - Rational(1)) * (Rational(2 * k) + sigma - Rational(2))));
    }
    return out;
}

RWParameters beta_map(const BIParameters& p) {
    RWParameters b{p.rho2, Rational(1) + p.rho1, -p.r1 + kHalf, -p.r2 + kHalf};
    if (b.sigma() != p.g() + Rational(2)) throw IdentityViolation("sigma != g + 2 under the beta map");
    return b;
}

std::vector<Rational> rw_reflection(const RWParameters& p, int n) {
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) a.push_back(rw_reflection_at(p, k));
    return a;
}

BIParameters subs1(const BIParameters& p) {
    return BIParameters{-p.r2 - kHalf, p.rho1, p.r1, -p.rho2 - kHalf};
}

std::vector<Rational> bi_q_reflection(const BIParameters& p, int n) {
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) a.push_back(bi_q_reflection_at(p, k));
    return a;
}

IdentifyQReport bi_identify_q(const BIParameters& p, int n) {
    require_nonzero(p.rho2 - p.rho1, "(rho2 - rho1)");
    require_nonzero(p.rho2 + p.rho1, "(rho2 + rho1)");
    Rational lambda = (p.rho2 + p.rho1) / (p.rho2 - p.rho1);

    std::vector<Rational> a_direct = bi_q_reflection(p, n);
    std::vector<Rational> a_subs = bi_reflection(subs1(p), n, ReflectionMode::ClosedForm);
    for (int k = 0; k < n; ++k)
        if (a_direct[static_cast<std::size_t>(k)] != a_subs[static_cast<std::size_t>(k)])
            throw IdentityViolation("substituted closed form disagrees at n = " + std::to_string(k));

    PencilRecurrence pr =
        pencil_recurrence(ReflectionSequence::from_list(a_direct), lambda, n);
    BICoeffs bic = bi_coeffs(p, n);
    Rational diff = p.rho2 - p.rho1;
    for (int k = 0; k < n; ++k) {
        std::size_t i = static_cast<std::size_t>(k);
        Rational target_b = Rational(2) * (p.rho1 - bic.A[i] - bic.C[i]) / diff;
        if (pr.b[i] != target_b)
            throw IdentityViolation("b_n(lambda) identification fails at n = " + std::to_string(k) +
                                    " for (rho1, rho2, r1, r2) = (" + p.rho1.str() + ", " + p.rho2.str() +
                                    ", " + p.r1.str() + ", " + p.r2.str() + ")");
        Rational target_u =
            k == 0 ? Rational(0) : Rational(4) * bic.A[i - 1] * bic.C[i] / (diff * diff);
        if (pr.u[i] != target_u)
            throw IdentityViolation("u_n(lambda) identification fails at n = " + std::to_string(k) +
                                    " for (rho1, rho2, r1, r2) = (" + p.rho1.str() + ", " + p.rho2.str() +
                                    ", " + p.r1.str() + ", " + p.r2.str() + ")");
    }
    return IdentifyQReport{lambda, n, true};
}

ReflectionSequence::Generator bi_reflection_generator(BIParameters p) {
    return [p](int k) { return bi_reflection_at(p, k); };
}

ReflectionSequence::Generator bi_q_reflection_generator(BIParameters p) {
    return [p](int k) { return bi_q_reflection_at(p, k); };
}

ReflectionSequence::Generator rw_reflection_generator(RWParameters p) {
    return [p](int k) { return rw_reflection_at(p, k); };
}

} // namespace opdc
