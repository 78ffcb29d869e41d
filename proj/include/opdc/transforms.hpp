#ifndef OPDC_TRANSFORMS_HPP
#define OPDC_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "opdc/cmv.hpp"
#include "opdc/polynomial.hpp"
#include "opdc/rational.hpp"
#include "opdc/reflection.hpp"

namespace opdc {

/// Kernel-form data (A_n, C_n, theta) with b_n = theta - A_n - C_n,
/// u_n = C_n A_{n-1}, C_0 = 0.
struct ACForm {
    std::vector<Rational> A;
    std::vector<Rational> C;
    Rational theta;
};

/// Monic three-term recurrence P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n,
/// u_0 = 0. The AC-form is carried along whenever an operation produced it.
struct ThreeTermRecurrence {
    std::vector<Rational> b;
    std::vector<Rational> u;
    std::optional<ACForm> ac;

    int depth() const { return static_cast<int>(b.size()); }

    /// P_0, ..., P_count (count+1 polynomials; requires depth >= count).
    std::vector<Polynomial> polynomials(int count) const;

    /// Expands (A, C, theta) into (b, u); validates C_0 = 0.
    static ThreeTermRecurrence from_ac(ACForm ac);
};

/// Reads (b_n, u_n) back off a list of monic polynomials satisfying a
/// three-term recurrence; throws IdentityViolation if they do not.
ThreeTermRecurrence recurrence_from_polynomials(const std::vector<Polynomial>& p);

ThreeTermRecurrence to_recurrence(const PencilRecurrence& rec);

struct ChristoffelResult {
    std::vector<Rational> A;
    std::vector<Rational> C;
    Rational theta;
    /// b~_n = theta - A_n - C_{n+1}, u~_n = C_n A_n; one entry shorter
    /// than the input.
    ThreeTermRecurrence transformed;
};

/// Kernel-polynomial step: A_0 = theta - b_0, then C_k = u_k / A_{k-1},
/// A_k = theta - b_k - C_k. Cross-checks A_n = P_{n+1}(theta)/P_n(theta)
/// by direct evaluation up to check_depth. Throws ZeroAtTheta when some
/// A_k = 0, i.e. P_{k+1}(theta) = 0.
ChristoffelResult christoffel(const ThreeTermRecurrence& rec, const Rational& theta, int check_depth = 8);

/// Inverse step P_n = tP_n - C_n tP_{n-1}, done at polynomial level and
/// read back into a recurrence; exact.
ThreeTermRecurrence geronimus_reconstruct(const ChristoffelResult& result);

/// Result of the theta = lambda + 1 kernel step applied to the pencil
/// recurrence. ustar_n = (1 + a_{n-1})(1 - a_n) is lambda-independent; the
/// transformed recurrence has diagonal (-1)^n (lambda - 1) and
/// off-diagonal lambda * ustar_n.
struct SDGResult {
    std::vector<Rational> ustar;
    Rational lambda;
    std::vector<Rational> A; // closed forms: 1 - a_n (even), lambda(1 - a_n) (odd)
    std::vector<Rational> C; // lambda(1 + a_{n-1}) (even), 1 + a_{n-1} (odd)
    ThreeTermRecurrence unif;
};

SDGResult sdg_step(const ReflectionSequence& seq, const Rational& lambda, int n);

/// S_n(x) = lambda^{-n/2} tQ_n(sqrt(lambda) x). The caller supplies the
/// exact rational square root; chi = lambda0 * s - 1/s.
struct RescaleResult {
    Rational chi;
    ThreeTermRecurrence s_rec; // diagonal (-1)^n chi, off-diagonal lambda0 ustar_n
};

RescaleResult rescale(const SDGResult& sdg, const Rational& lambda, const Rational& sqrt_lambda,
                      const Rational& lambda0);

/// Quadratic-split recurrence S_{n+1} + (-1)^n chi S_n + v_n S_{n-1} = x S_n
/// with v_{2n} = -C_n, v_{2n+1} = -A_n.
ThreeTermRecurrence chihara_split(const std::vector<Rational>& A, const std::vector<Rational>& C,
                                  const Rational& chi, int n);

struct ChiharaCheckReport {
    bool pass = true;
    int depth = 0;
    int first_fail = -1;
    std::string detail;
};

/// Verifies S_{2n}(x) = P_n(x^2 + alpha - c2) and
/// S_{2n+1}(x) = (x - chi) tP_n(x^2 + alpha - c2) as explicit polynomial
/// identities for n <= depth. Requires p_rec to carry its AC-form with
/// theta = chi^2 + alpha - c2 (InconsistentTheta otherwise).
ChiharaCheckReport chihara_polynomial_check(const ThreeTermRecurrence& p_rec,
                                            const ThreeTermRecurrence& tp_rec, const Rational& alpha,
                                            const Rational& c2, const Rational& chi, int depth);

} // namespace opdc

#endif
